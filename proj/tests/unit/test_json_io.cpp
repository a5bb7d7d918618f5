// Copyright 2026 The oqclab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <catch2/catch.hpp>

#include "oqclab/qcore/json_io.hpp"
#include "oqclab/qcore/random.hpp"

using namespace oqc;

TEST_CASE("density operator JSON round trip") {
  for (int i = 0; i < 10; ++i) {
    Rng rng = Rng::substream(1001, i);
    const HilbertDim dim({{"A", 2}, {"B", 3}});
    const auto rho = random_density(dim, rng);
    const auto back = density_from_json(to_json(rho));
    CHECK((back.matrix() - rho.matrix()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(back.dim() == rho.dim());
  }
}

TEST_CASE("pure state and ensemble JSON round trips") {
  Rng rng(1002);
  const auto psi = haar_pure_state(5, rng);
  const auto back = pure_from_json(to_json(psi));
  CHECK((back.vector() - psi.vector()).norm() == 0.0);

  std::vector<Ensemble::Item> items;
  for (int i = 0; i < 4; ++i) items.push_back({0.25, haar_pure_state(3, rng)});
  const Ensemble ens(std::move(items));
  const auto ens_back = ensemble_from_json(to_json(ens));
  REQUIRE(ens_back.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(ens_back.items()[i].p == 0.25);
    CHECK((ens_back.items()[i].psi.vector() - ens.items()[i].psi.vector()).norm() == 0.0);
  }
}

TEST_CASE("schema layout: [re, im] pairs with a dim header") {
  Rng rng(1003);
  const auto rho = random_density(2, rng);
  const Json j = to_json(rho);
  REQUIRE(j.contains("dim"));
  REQUIRE(j.contains("matrix"));
  CHECK(j["dim"][0]["label"] == "A");
  CHECK(j["dim"][0]["dim"] == 2);
  CHECK(j["matrix"][0][0].size() == 2);  // [re, im]
  CHECK(j["matrix"][0][0][0].get<double>() == Approx(rho.matrix()(0, 0).real()));
}

TEST_CASE("malformed input states are rejected on load") {
  // a non-PSD matrix passes parsing but fails the type invariant
  Json j = {{"dim", Json::array({{{"label", "A"}, {"dim", 2}}})},
            {"matrix", Json::array({Json::array({Json::array({1.0, 0.0}),
                                                 Json::array({0.0, 0.0})}),
                                    Json::array({Json::array({0.0, 0.0}),
                                                 Json::array({-0.1, 0.0})})})}};
  CHECK_THROWS_AS(density_from_json(j), InvariantViolation);
}

TEST_CASE("infinities serialize as tagged strings") {
  CHECK(real_to_json(std::numeric_limits<double>::infinity()) == Json("+inf"));
  CHECK(real_to_json(1.5) == Json(1.5));
}

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

#include "oqclab/chansim/chansim.hpp"
#include "oqclab/hardens/hardens.hpp"

using namespace oqc;
using namespace oqc::chansim;

TEST_CASE("cq capacity reference points") {
  Rng rng(901);
  SECTION("single output has zero capacity") {
    CqChannel ch{{haar_pure_state(4, rng)}};
    CHECK(cq_capacity(ch) == Approx(0.0).margin(1e-9));
  }
  SECTION("orthogonal outputs give log2 d") {
    const int d = 4;
    CqChannel ch;
    for (int i = 0; i < d; ++i) {
      Vector v = Vector::Zero(d);
      v(i) = 1.0;
      ch.outputs.emplace_back(v, d);
    }
    CHECK(cq_capacity(ch) == Approx(2.0).margin(1e-12));
  }
  SECTION("hard-ensemble channel stays under the entropy budget") {
    hardens::HardEnsembleParams p{8, 0.25, 256, 1.0, 902};
    const auto built = hardens::build_hard_ensemble(p);
    CqChannel ch;
    for (const auto& it : built.ensemble.items()) ch.outputs.push_back(it.psi);
    const double budget = (0.25 + built.report.realized_eps()) * 3.0 +
                          binary_entropy(0.25) + 1.0;
    CHECK(cq_capacity(ch) <= budget);
  }
  SECTION("uniform mixture dominates random input distributions") {
    CqChannel ch;
    for (int i = 0; i < 5; ++i) {
      Rng r2 = Rng::substream(903, i);
      ch.outputs.push_back(haar_pure_state(4, r2));
    }
    const double uniform = cq_capacity(ch);
    for (int trial = 0; trial < 100; ++trial) {
      Rng r2 = Rng::substream(904, trial);
      std::vector<double> w(5);
      double sum = 0.0;
      for (auto& x : w) sum += (x = r2.uniform_pos());
      for (auto& x : w) x /= sum;
      CHECK(cq_capacity_at(ch, w) <= uniform + 1e-9);
    }
  }
}

TEST_CASE("one-shot capacity ceiling") {
  CHECK(one_shot_capacity_upper(1.0, 0.01) ==
        Approx((1.0 + binary_entropy(0.01)) / 0.99).margin(1e-12));
  CHECK(one_shot_capacity_upper(1.0, 0.01) == Approx(1.0917).margin(1e-4));
  CHECK(one_shot_capacity_upper(0.0, 0.5) == Approx(2.0));
  CHECK(one_shot_capacity_upper(5.0, 1e-9) == Approx(5.0).margin(1e-6));
  CHECK_THROWS_AS(one_shot_capacity_upper(1.0, 0.0), InvariantViolation);
}

TEST_CASE("simulation cost floors") {
  const double d = std::exp2(40.0);
  const double delta = std::exp2(-5.0);
  SECTION("one-way worked example") {
    const auto res = simulation_cost_lower(d, delta, 1e-4, SimMode::oneway);
    CHECK(res.value == Approx(std::pow(0.99, 2) * 28.0).margin(1e-9));
    CHECK(res.log2_d_delta_over_128 == Approx(28.0));
    CHECK_FALSE(res.gate_ok);  // 1e-4 > (delta/8)^2; the value is still reported
  }
  SECTION("round-limited worked example") {
    const auto res = simulation_cost_lower(d, delta, 1e-5, SimMode::rounds, 2.0);
    CHECK(res.value == Approx(28.0 / 20.0));
    CHECK(res.gate_ok);  // 1e-5 < (1/256)^2 = 1.5e-5
  }
  SECTION("interactive gates are both surfaced") {
    const auto res = simulation_cost_lower(d, 0.2, 1e-8, SimMode::interactive);
    CHECK(res.gate_threshold == Approx(std::pow(0.2 / 8.0, 4.0)));
    CHECK(res.alt_gate_threshold == Approx(std::pow(0.2 / 10.0, 4.0)));
    CHECK(res.gate_ok);
    CHECK(res.value > 0.0);
  }
  SECTION("floor at d delta <= 128") {
    const auto res = simulation_cost_lower(512.0, 0.25, 1e-5, SimMode::oneway);
    CHECK(res.value == 0.0);
  }
}

TEST_CASE("separation crossover exists below 2^60") {
  const auto res = separation_crossover();
  REQUIRE(res.found);
  CHECK(res.log2_d_star <= 60.0);
  CHECK(res.sim_lower > res.capacity_upper);
  // the crossover is searched, not pinned: just confirm it is stable
  const auto res2 = separation_crossover();
  CHECK(res.log2_d_star == res2.log2_d_star);
}

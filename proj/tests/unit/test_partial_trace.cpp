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

#include "oqclab/qcore/linalg.hpp"
#include "oqclab/qcore/measures.hpp"
#include "oqclab/qcore/partial_trace.hpp"
#include "oqclab/qcore/random.hpp"

using namespace oqc;

TEST_CASE("partial trace of a product state returns the factor") {
  Rng rng(201);
  const auto rho_a = random_density(2, rng);
  const auto sigma_b = random_density(3, rng);
  const HilbertDim dim({{"A", 2}, {"B", 3}});
  const DensityOperator prod(kron(rho_a.matrix(), sigma_b.matrix()), dim);
  const auto back = partial_trace(prod, {"A"});
  CHECK((back.matrix() - rho_a.matrix()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(back.trace() == Approx(1.0).margin(1e-12));
}

TEST_CASE("maximally entangled marginal is maximally mixed") {
  const int d = 3;
  const HilbertDim dim({{"A", d}, {"B", d}});
  Vector v = Vector::Zero(d * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  const PureState phi(v, dim);
  const auto m = marginal(phi, {"B"});
  CHECK((m.matrix() - Matrix::Identity(d, d) / d).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial trace is order independent") {
  Rng rng(202);
  const HilbertDim dim({{"A", 2}, {"B", 2}, {"C", 3}});
  const auto rho = random_density(dim, rng);
  const auto direct = partial_trace(rho, {"C"});
  const auto via_a = partial_trace(partial_trace(rho, {"B", "C"}), {"C"});
  CHECK((direct.matrix() - via_a.matrix()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("unknown register label is rejected") {
  Rng rng(203);
  const auto rho = random_density(HilbertDim({{"A", 2}, {"B", 2}}), rng);
  CHECK_THROWS_AS(partial_trace(rho, {"Z"}), RegisterError);
}

TEST_CASE("mutual information reference points") {
  Rng rng(204);
  const auto rho_a = random_density(2, rng);
  const auto sigma_b = random_density(2, rng);
  const HilbertDim dim({{"A", 2}, {"B", 2}});
  const DensityOperator prod(kron(rho_a.matrix(), sigma_b.matrix()), dim);
  CHECK(mutual_information(prod, {"A"}) == Approx(0.0).margin(1e-9));

  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  const PureState bell(v, dim);
  CHECK(mutual_information(bell.to_density(), {"A"}) == Approx(2.0).margin(1e-9));
}

TEST_CASE("conditional mutual information stays in its band") {
  for (int i = 0; i < 50; ++i) {
    Rng rng = Rng::substream(205, i);
    const HilbertDim dim({{"A", 2}, {"B", 2}, {"C", 2}});
    const auto rho = random_density(dim, rng);
    const double v = cqmi(rho, {"A"}, {"B"}, {"C"});
    CHECK(v >= -1e-9);
    CHECK(v <= 2.0 * von_neumann_entropy(partial_trace(rho, {"C"})) + 1e-9);
  }
}

TEST_CASE("register bookkeeping invariants") {
  CHECK_THROWS_AS(HilbertDim({{"A", 2}, {"A", 3}}), InvariantViolation);
  const HilbertDim dim({{"A", 2}, {"B", 3}});
  CHECK(dim.total() == 6);
  CHECK(dim.index_of("B") == 1);
  CHECK_THROWS_AS(dim.index_of("C"), RegisterError);
}

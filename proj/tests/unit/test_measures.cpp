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

#include "oqclab/qcore/measures.hpp"
#include "oqclab/qcore/partial_trace.hpp"
#include "oqclab/qcore/random.hpp"

using namespace oqc;

namespace {

DensityOperator basis_state(int i, int d) {
  Matrix m = Matrix::Zero(d, d);
  m(i, i) = 1.0;
  return DensityOperator(m, d);
}

DensityOperator maximally_mixed(int d) {
  return DensityOperator(Matrix::Identity(d, d) / static_cast<double>(d), d);
}

} // namespace

TEST_CASE("fidelity on reference pairs") {
  Rng rng(101);
  const auto rho = random_density(4, rng);
  CHECK(fidelity(rho, rho) == Approx(1.0).margin(1e-10));
  CHECK(fidelity(basis_state(0, 2), basis_state(1, 2)) == Approx(0.0).margin(1e-10));
  CHECK(fidelity(maximally_mixed(2), basis_state(0, 2)) ==
        Approx(1.0 / std::sqrt(2.0)).margin(1e-10));
  // symmetry
  const auto sigma = random_density(4, rng);
  CHECK(fidelity(rho, sigma) == Approx(fidelity(sigma, rho)).margin(1e-10));
}

TEST_CASE("purified distance on reference pairs") {
  Rng rng(102);
  const auto rho = random_density(3, rng);
  CHECK(purified_distance(rho, rho) == Approx(0.0).margin(1e-7));
  CHECK(purified_distance(basis_state(0, 2), basis_state(1, 2)) == Approx(1.0));
  CHECK(purified_distance(maximally_mixed(2), basis_state(0, 2)) ==
        Approx(1.0 / std::sqrt(2.0)).margin(1e-10));
}

TEST_CASE("von Neumann entropy") {
  Rng rng(103);
  CHECK(von_neumann_entropy(haar_pure_state(5, rng).to_density()) ==
        Approx(0.0).margin(1e-9));
  CHECK(von_neumann_entropy(maximally_mixed(8)) == Approx(3.0).margin(1e-10));
  // analytic spectrum: (1-delta)|0><0| + delta P/(d-1), delta = 1/4, d = 8
  const int d = 8;
  const double delta = 0.25;
  Matrix m = Matrix::Identity(d, d) * (delta / (d - 1));
  m(0, 0) = 1.0 - delta;
  const double expected = binary_entropy(delta) + delta * std::log2(7.0);
  CHECK(von_neumann_entropy(DensityOperator(m, d)) == Approx(expected).margin(1e-9));
  CHECK(expected == Approx(1.51312).margin(1e-5));
  // sub-normalized input rejected
  Matrix sub = 0.5 * Matrix::Identity(2, 2) * 0.5;
  CHECK_THROWS_AS(von_neumann_entropy(DensityOperator(sub, 2)), InvariantViolation);
}

TEST_CASE("max-relative entropy") {
  Rng rng(104);
  const auto rho = random_density(4, rng);
  CHECK(dmax(rho, rho) == Approx(0.0).margin(1e-8));
  CHECK(dmax(basis_state(0, 8), maximally_mixed(8)) == Approx(3.0).margin(1e-9));
  // support violation -> +inf
  CHECK(std::isinf(dmax(basis_state(1, 2), basis_state(0, 2))));

  SECTION("pure-state identity cross-check, d <= 16") {
    for (int d : {2, 5, 16}) {
      for (int i = 0; i < 20; ++i) {
        Rng r2 = Rng::substream(104, d * 100 + i);
        const auto sigma = random_density(d, r2);
        const auto psi = haar_pure_state(d, r2);
        CHECK(std::abs(dmax(psi.to_density(), sigma) - dmax_pure(psi, sigma)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("relative entropy") {
  Rng rng(105);
  const auto rho = random_density(4, rng);
  CHECK(relative_entropy(rho, rho) == Approx(0.0).margin(1e-9));
  CHECK(relative_entropy(basis_state(0, 2), maximally_mixed(2)) ==
        Approx(1.0).margin(1e-10));
  CHECK(std::isinf(relative_entropy(basis_state(1, 2), basis_state(0, 2))));
  // D <= Dmax on random pairs
  for (int i = 0; i < 25; ++i) {
    Rng r2 = Rng::substream(105, i);
    const auto a = random_density(5, r2);
    const auto b = random_density(5, r2);
    CHECK(relative_entropy(a, b) <= dmax(a, b) + 1e-9);
  }
}

TEST_CASE("monotonicity under partial trace") {
  // dmax does not increase, fidelity does not decrease
  for (int i = 0; i < 20; ++i) {
    Rng rng = Rng::substream(106, i);
    const HilbertDim dim({{"A", 2}, {"B", 3}});
    const auto rho = random_density(dim, rng);
    const auto sigma = random_density(dim, rng);
    const auto rho_a = partial_trace(rho, {"A"});
    const auto sigma_a = partial_trace(sigma, {"A"});
    CHECK(dmax(rho_a, sigma_a) <= dmax(rho, sigma) + 1e-9);
    CHECK(fidelity(rho_a, sigma_a) >= fidelity(rho, sigma) - 1e-9);
  }
}

TEST_CASE("dimension mismatch is reported") {
  Rng rng(107);
  const auto a = random_density(2, rng);
  const auto b = random_density(3, rng);
  CHECK_THROWS_AS(fidelity(a, b), DimensionMismatch);
  CHECK_THROWS_AS(dmax(a, b), DimensionMismatch);
  CHECK_THROWS_WITH(fidelity(a, b), Catch::Contains("dimension mismatch"));
}

TEST_CASE("density operator invariants") {
  Matrix not_herm(2, 2);
  not_herm << Complex(0.5, 0.0), Complex(0.1, 0.2), Complex(0.3, 0.0), Complex(0.5, 0.0);
  CHECK_THROWS_AS(DensityOperator(not_herm, 2), InvariantViolation);
  Matrix neg = Matrix::Identity(2, 2);
  neg(1, 1) = -0.1;
  CHECK_THROWS_AS(DensityOperator(neg, 2), InvariantViolation);
  Matrix big = Matrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityOperator(big, 2), InvariantViolation);  // trace 2
  // sub-normalized states are allowed
  CHECK_NOTHROW(DensityOperator(0.4 * Matrix::Identity(2, 2), 2));
}

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

#include "oqclab/qcore/partial_trace.hpp"
#include "oqclab/redist/redist.hpp"

using namespace oqc;
using namespace oqc::redist;

TEST_CASE("low-entropy spectrum") {
  const auto e = low_entropy_spectrum(4, 2.0);
  CHECK(e[0] == Approx(0.625));
  CHECK(e[1] == Approx(0.125));
  CHECK(spectrum_entropy(e) == Approx(1.54879).margin(1e-5));
  CHECK(spectrum_entropy(e) <= 2.0 * std::log2(4.0) / 2.0);

  // the stated budget can fail at small d: report, do not assert, unless
  // log2(d)/beta >= 2
  const auto e2 = low_entropy_spectrum(2, 4.0);
  const double h2 = spectrum_entropy(e2);
  const double budget2 = 2.0 * std::log2(2.0) / 4.0;
  CHECK(h2 == Approx(0.543564).margin(1e-6));
  CHECK(h2 > budget2);  // the flagged case
  CHECK(std::log2(2.0) / 4.0 < 2.0);

  // in the regime where the budget's derivation applies it holds
  for (int d : {64, 256}) {
    for (double beta : {1.0, 2.0}) {
      if (std::log2(static_cast<double>(d)) / beta < 2.0) continue;
      CHECK(spectrum_entropy(low_entropy_spectrum(d, beta)) <=
            2.0 * std::log2(static_cast<double>(d)) / beta);
    }
  }
}

TEST_CASE("redistribution pair construction") {
  RedistParams p{3, 2, 2.0, BasisMode::fixed_C, 801};
  const auto pair = build_redist_pair(p);

  SECTION("deterministic under the seed") {
    const auto pair2 = build_redist_pair(p);
    CHECK((pair.psi.vector() - pair2.psi.vector()).norm() == 0.0);
  }
  SECTION("reference marginal spectrum is {e_j / d_a}") {
    const auto psi_r = marginal(pair.psi, {"Ra", "Rp"});
    auto [vals, vecs] = hermitian_eig(psi_r.matrix());
    (void)vecs;
    std::vector<double> expected;
    for (double e : pair.spectrum)
      for (int a = 0; a < p.d_a; ++a) expected.push_back(e / p.d_a);
    std::sort(expected.begin(), expected.end());
    for (int i = 0; i < vals.size(); ++i)
      CHECK(vals(i) == Approx(expected[i]).margin(1e-12));
  }
  SECTION("companion reduced state per index is maximally correlated") {
    // the companion's R' marginal is uniform, so I(R';BC) = 2 log2 d per index
    const auto ghz_rp = marginal(pair.ghz, {"Rp"});
    CHECK((ghz_rp.matrix() - Matrix::Identity(3, 3) / 3.0).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("rescaling identity") {
  int checked = 0;
  for (auto mode : {BasisMode::fixed_C, BasisMode::random_C})
    for (int d : {2, 3, 4})
      for (int da : {1, 2}) {
        RedistParams p{d, da, 2.5, mode, 802};
        const auto pair = build_redist_pair(p);
        CHECK(rescaling_deviation(pair) <= 1e-9);
        ++checked;
      }
  CHECK(checked == 12);

  SECTION("uniform spectrum collapses the pair") {
    // beta = 1 makes every weight 1/d, so psi and the companion coincide
    RedistParams p{4, 2, 1.0, BasisMode::fixed_C, 803};
    const auto pair = build_redist_pair(p);
    CHECK((pair.psi.vector() - pair.ghz.vector()).norm() <= 1e-12);
  }
  SECTION("negative control: tampered declared spectrum is caught") {
    RedistParams p{3, 1, 2.0, BasisMode::fixed_C, 804};
    auto pair = build_redist_pair(p);
    pair.spectrum[0] += 1e-3;
    pair.spectrum[1] -= 1e-3;
    CHECK(rescaling_deviation(pair) > 1e-4);
  }
}

TEST_CASE("redistribution quantities") {
  RedistParams p{2, 2, 4.0, BasisMode::fixed_C, 805};
  const auto pair = build_redist_pair(p);
  const auto q = redist_quantities(pair);
  CHECK(q.cqmi_psi <= 2.0 * q.s_psi_c + 1e-9);
  CHECK(q.imax_rb_ub == Approx(1.0).margin(1e-9));
  CHECK(q.i_r_bc_ghz == Approx(2.0).margin(1e-9));
  // fixed-basis mode keeps the C marginal diagonal in the w basis
  CHECK(q.s_psi_c == Approx(spectrum_entropy(pair.spectrum)).margin(1e-9));

  RedistParams pr{3, 2, 2.0, BasisMode::random_C, 806};
  const auto qr = redist_quantities(build_redist_pair(pr));
  CHECK(qr.i_r_bc_ghz >= 2.0 * std::log2(3.0) - 1e-9);
  CHECK(qr.imax_rb_ub <= std::log2(3.0) + 1e-9);

  RedistParams too_big{16, 1, 2.0, BasisMode::fixed_C, 807};
  CHECK_THROWS_AS(redist_quantities(build_redist_pair(too_big)), InvariantViolation);
}

TEST_CASE("worst-case redistribution bound") {
  const auto a = worst_case_redist_bound(std::exp2(19.0), 0.1);
  CHECK(a.bound == Approx(0.35 * 19.0 - 1.5));
  CHECK(a.sixth_log_d == Approx(19.0 / 6.0));
  CHECK(a.exceeds_sixth);
  CHECK(a.regime_applies);

  // below the stated regime: both numbers reported, no regime claim
  const auto b = worst_case_redist_bound(std::exp2(10.0), 0.1);
  CHECK(b.bound == Approx(2.0));
  CHECK_FALSE(b.regime_applies);

  // the delta -> 1/6 boundary pins the 2^18 threshold
  CHECK(worst_case_threshold_log2d(1.0 / 6.0 - 1e-12) == Approx(18.0).margin(1e-6));
  CHECK_THROWS_AS(worst_case_redist_bound(1024.0, 0.2), InvariantViolation);
}

TEST_CASE("separation parameter arithmetic") {
  const auto sp = redist_separation_params(0.5, 1e-16);
  CHECK(sp.mu == Approx(3.2e-3));
  CHECK(sp.beta == Approx(4.0e12));
  CHECK(sp.error_bound == Approx(8.0 * std::sqrt(2.0) * 1e-2));
  CHECK(sp.eps_max == Approx(std::pow(70.0, -8.0)));
  CHECK(sp.eps_admissible);
  CHECK(sp.error_below_sixth);

  CHECK_FALSE(redist_separation_params(0.5, 1e-14).eps_admissible);
  CHECK(redist_separation_params(1e-12, 1.0e-9).eps_max ==
        Approx(std::pow(1.0 / 70.0, 4.0)).epsilon(1e-6));
  CHECK_THROWS_AS(redist_separation_params(1.5, 0.1), InvariantViolation);
}

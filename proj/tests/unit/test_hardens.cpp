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

#include "oqclab/hardens/hardens.hpp"

using namespace oqc;
using namespace oqc::hardens;

TEST_CASE("concentration observables") {
  Rng rng(601);
  Vector e0 = Vector::Zero(6);
  e0(0) = 1.0;
  const PureState anchor(e0, 6);
  const auto x = haar_pure_state(6, rng, anchor);
  const double delta = 0.25;
  const auto obs = concentration_observables(x, delta);
  CHECK(operator_norm(obs.first_moment) == Approx(1.0).margin(1e-10));
  CHECK(operator_norm(obs.anchor_cross) <= 2.0 * std::sqrt(delta) + 1e-10);
  CHECK(obs.pair_moment.trace().real() == Approx(1.0).margin(1e-10));

  // non-orthogonal sample is rejected
  const auto bad = haar_pure_state(6, rng);
  CHECK_THROWS_AS(concentration_observables(bad, delta), InvariantViolation);
}

TEST_CASE("single-sample trace-norm deviation is analytic") {
  // || |x><x| - P/d ||_1 = (1 - 1/d) + (d-2)/d for a rank-(d-1) complement
  // projector: the stated 2(d-1)/d would need P of full rank d.
  const int d = 8;
  auto samples = sample_anchored_batch(d, 1, 602, 0);
  const auto rep = concentration_check(samples, 0.25, 1.0);
  CHECK(rep.norm1 == Approx((2.0 * d - 3.0) / d).margin(1e-10));
}

TEST_CASE("repeated identical sample defeats averaging") {
  const int d = 6;
  auto one = sample_anchored_batch(d, 1, 603, 0);
  std::vector<PureState> many(100, one.front());
  const auto rep1 = concentration_check(one, 0.25, 1.0);
  const auto rep100 = concentration_check(many, 0.25, 1.0);
  CHECK(rep1.norm1 == Approx(rep100.norm1).margin(1e-12));
}

TEST_CASE("hard ensemble build") {
  HardEnsembleParams params{8, 0.25, 512, 0.8, 604};
  const auto res = build_hard_ensemble(params);
  CHECK(res.ensemble.size() == 512);
  SECTION("anchor overlap is sqrt(1-delta) for every member") {
    for (const auto& it : res.ensemble.items())
      CHECK(std::norm(it.psi.vector()(0)) == Approx(0.75).margin(1e-12));
  }
  SECTION("average state is normalized") {
    CHECK(res.ensemble.average_state().trace() == Approx(1.0).margin(1e-12));
  }
  SECTION("reproducible under the seed") {
    const auto res2 = build_hard_ensemble(params);
    CHECK((res2.ensemble.items()[5].psi.vector() -
           res.ensemble.items()[5].psi.vector())
              .norm() == 0.0);
  }
  SECTION("entropy bound holds with the realized tolerance") {
    const auto eb =
        entropy_bound_check(res.ensemble, params.delta, res.report.realized_eps());
    CHECK(eb.ok);
  }
  SECTION("negative control: un-anchored ensemble breaks the bound") {
    std::vector<Ensemble::Item> items;
    for (int i = 0; i < 256; ++i) {
      Rng rng = Rng::substream(605, i);
      items.push_back({1.0 / 256, haar_pure_state(8, rng)});
    }
    const Ensemble haar_ens(std::move(items));
    // judged at the construction-scale tolerance eps = 1/d; the average of
    // unanchored Haar states sits near log2 d, above the delta budget
    const auto eb = entropy_bound_check(haar_ens, 0.25, 1.0 / 8.0);
    CHECK_FALSE(eb.ok);
    CHECK(eb.s_avg > 2.9);
  }
}

TEST_CASE("report norms are invariant under anchor-fixing unitaries") {
  const int d = 6;
  auto samples = sample_anchored_batch(d, 64, 606, 0);
  const auto base = concentration_check(samples, 0.25, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    Rng rng = Rng::substream(607, trial);
    Matrix u = Matrix::Identity(d, d);
    u.block(1, 1, d - 1, d - 1) = random_unitary(d - 1, rng);
    std::vector<PureState> rotated;
    for (const auto& x : samples) rotated.emplace_back(u * x.vector(), x.dim());
    const auto rep = concentration_check(rotated, 0.25, 1.0);
    CHECK(rep.norm1 == Approx(base.norm1).margin(1e-8));
    CHECK(rep.norm2 == Approx(base.norm2).margin(1e-8));
    CHECK(rep.norm3 == Approx(base.norm3).margin(1e-8));
  }
}

TEST_CASE("prescribed sample count bookkeeping") {
  // m = 8 d^5 / eps^2 becomes 8 d^7 at eps = 1/d; checked arithmetically
  for (int d : {5, 8, 12, 20}) {
    const double eps = 1.0 / d;
    const std::uint64_t m = HardEnsembleParams::prescribed_m(d, eps);
    std::uint64_t d7 = 1;
    for (int i = 0; i < 7; ++i) d7 *= static_cast<std::uint64_t>(d);
    CHECK(m == 8 * d7);
  }
}

TEST_CASE("parameter validation") {
  HardEnsembleParams bad_d{4, 0.2, 10, 0.5, 0};
  CHECK_THROWS_AS(bad_d.validate(), InvariantViolation);
  HardEnsembleParams bad_delta{8, 0.3, 10, 0.5, 0};
  CHECK_THROWS_AS(bad_delta.validate(), InvariantViolation);
  HardEnsembleParams boundary{8, 0.25, 10, 0.5, 0};
  CHECK_NOTHROW(boundary.validate());
}

TEST_CASE("retries exhausted raises with the last report") {
  HardEnsembleParams params{8, 0.25, 4, 1e-6, 608};  // unattainable tolerance
  CHECK_THROWS_WITH(build_hard_ensemble(params, 2), Catch::Contains("last norms"));
}

TEST_CASE("pair-moment check is skipped above the memory cap") {
  auto samples = sample_anchored_batch(26, 4, 609, 0);  // 26^2 x 26^2 would be built
  const auto rep = concentration_check(samples, 0.2, 1.0);
  CHECK_FALSE(rep.z3_evaluated);
  CHECK(rep.norm3 == 0.0);
  CHECK(rep.realized_eps() == std::max(rep.norm1, rep.norm2));
  const auto forced = concentration_check(samples, 0.2, 1.0, true);
  CHECK(forced.z3_evaluated);
}

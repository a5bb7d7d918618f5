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
#ifndef OQCLAB_REDIST_REDIST_HPP
#define OQCLAB_REDIST_REDIST_HPP

// State-redistribution laboratory: the low-entropy redistribution state, its
// uniform-amplitude companion obtained by rescaling with the inverse square
// root of the reference marginal, and the cost/error calculators entering the
// redistribution separation.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "oqclab/qcore/linalg.hpp"
#include "oqclab/qcore/measures.hpp"
#include "oqclab/qcore/partial_trace.hpp"
#include "oqclab/qcore/random.hpp"
#include "oqclab/qcore/types.hpp"

namespace oqc::redist {

enum class BasisMode { fixed_C, random_C };

struct RedistParams {
  int d = 2;       // |R'| = |B| = |C|
  int d_a = 1;     // |R_A| = |A|
  double beta = 1.0;
  BasisMode mode = BasisMode::fixed_C;
  std::uint64_t seed = 0;

  void validate() const {
    if (d <= 1) throw InvariantViolation("d must be > 1");
    if (d_a < 1) throw InvariantViolation("d_a must be >= 1");
    if (beta < 1.0) throw InvariantViolation("beta must be >= 1");
  }
};

/// Spectrum with e_2 = ... = e_d = 1/(d beta); its Shannon entropy is below
/// 2 log2(d)/beta whenever log2(d)/beta >= 2 (the bound can fail at small d,
/// which the calculator reports rather than asserts).
inline std::vector<double> low_entropy_spectrum(int d, double beta) {
  if (d <= 1) throw InvariantViolation("d must be > 1");
  if (beta < 1.0) throw InvariantViolation("beta must be >= 1");
  std::vector<double> e(d, 1.0 / (d * beta));
  e[0] = 1.0 - static_cast<double>(d - 1) / (d * beta);
  return e;
}

inline double spectrum_entropy(const std::vector<double>& e) {
  double h = 0.0;
  for (double p : e)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

struct RedistStatePair {
  PureState psi;   // registers R_A R' B C A
  PureState ghz;   // uniform-amplitude companion on the same registers
  std::vector<double> spectrum;
  RedistParams params;
};

namespace detail {

inline HilbertDim redist_dim(const RedistParams& p) {
  return HilbertDim({{"Ra", p.d_a}, {"Rp", p.d}, {"B", p.d}, {"C", p.d}, {"A", p.d_a}});
}

/// Per-index bases: u_j computational on R'; in fixed_C mode the B basis is
/// one seeded unitary shared across the index a and the C basis is
/// computational, so the reference-side identities below hold exactly; in
/// random_C mode both vary with a.
struct Bases {
  std::vector<Matrix> v;  // per a, columns are v_j(a)
  std::vector<Matrix> w;  // per a, columns are w_j(a)
};

inline Bases make_bases(const RedistParams& p) {
  Bases b;
  if (p.mode == BasisMode::fixed_C) {
    Rng rng = Rng::substream(p.seed, 0xb0b0ULL);
    const Matrix shared_v = random_unitary(p.d, rng);
    for (int a = 0; a < p.d_a; ++a) {
      b.v.push_back(shared_v);
      b.w.push_back(Matrix::Identity(p.d, p.d));
    }
  } else {
    for (int a = 0; a < p.d_a; ++a) {
      Rng rng_v = Rng::substream(p.seed, 0xb000ULL + a);
      Rng rng_w = Rng::substream(p.seed, 0xc000ULL + a);
      b.v.push_back(random_unitary(p.d, rng_v));
      b.w.push_back(random_unitary(p.d, rng_w));
    }
  }
  return b;
}

inline PureState assemble(const RedistParams& p, const Bases& bases,
                          const std::vector<double>& amps) {
  const HilbertDim dim = redist_dim(p);
  Vector v = Vector::Zero(dim.total());
  const int d = p.d, da = p.d_a;
  // strides for (Ra, Rp, B, C, A), last fastest
  const long sA = 1, sC = da, sB = static_cast<long>(da) * d,
             sRp = static_cast<long>(da) * d * d,
             sRa = static_cast<long>(da) * d * d * d;
  const double norm_a = 1.0 / std::sqrt(static_cast<double>(da));
  for (int a = 0; a < da; ++a)
    for (int j = 0; j < d; ++j) {
      const double amp = norm_a * amps[j];
      for (int ib = 0; ib < d; ++ib)
        for (int ic = 0; ic < d; ++ic) {
          const Complex coeff = amp * bases.v[a](ib, j) * bases.w[a](ic, j);
          if (coeff == Complex(0, 0)) continue;
          v(a * sRa + j * sRp + ib * sB + ic * sC + a * sA) += coeff;
        }
    }
  return PureState(v / v.norm(), dim);
}

} // namespace detail

inline RedistStatePair build_redist_pair(const RedistParams& params) {
  params.validate();
  const auto spectrum = low_entropy_spectrum(params.d, params.beta);
  const auto bases = detail::make_bases(params);
  std::vector<double> amps_psi(params.d), amps_ghz(params.d);
  for (int j = 0; j < params.d; ++j) {
    amps_psi[j] = std::sqrt(spectrum[j]);
    amps_ghz[j] = 1.0 / std::sqrt(static_cast<double>(params.d));
  }
  return {detail::assemble(params, bases, amps_psi),
          detail::assemble(params, bases, amps_ghz), spectrum, params};
}

/// Deviation of (1/sqrt(d_a d)) Psi_R^{-1/2} |Psi> from the companion state.
/// Psi_R comes from the pair's declared spectrum (the construction makes the
/// R = R_A R' marginal diag(e)/d_a in the computational basis), so a state
/// inconsistent with its declared spectrum is caught; the pseudo-inverse
/// square root acts on the support only.
inline double rescaling_deviation(const RedistStatePair& pair) {
  const auto& p = pair.params;
  const int d_r = p.d_a * p.d;
  Matrix psi_r = Matrix::Zero(d_r, d_r);
  for (int a = 0; a < p.d_a; ++a)
    for (int j = 0; j < p.d; ++j)
      psi_r(a * p.d + j, a * p.d + j) = pair.spectrum[j] / p.d_a;
  const Matrix inv_sqrt = pinv_sqrt_psd(psi_r);
  const int d_rest = p.d * p.d * p.d_a;
  // R = (Ra, Rp) are the two leading registers, so the map acts block-wise
  Vector out = Vector::Zero(pair.psi.vector().size());
  for (int r = 0; r < d_r; ++r)
    for (int rp = 0; rp < d_r; ++rp) {
      const Complex c = inv_sqrt(r, rp);
      if (c == Complex(0, 0)) continue;
      out.segment(static_cast<long>(r) * d_rest, d_rest) +=
          c * pair.psi.vector().segment(static_cast<long>(rp) * d_rest, d_rest);
    }
  out /= std::sqrt(static_cast<double>(p.d_a) * p.d);
  return (out - pair.ghz.vector()).norm();
}

struct RedistQuantities {
  double cqmi_psi = 0.0;      // I(R;C|B) of the low-entropy state
  double s_psi_c = 0.0;       // S(Psi_C)
  double imax_rb_ub = 0.0;    // Dmax(omega_RB || omega_R x I/d) >= Imax(R;B)
  double i_r_bc_ghz = 0.0;    // I(R;BC) of the companion
  double avg_i_rp_bc = 0.0;   // average per-index I(R';BC), 2 log2 d exactly
};

inline RedistQuantities redist_quantities(const RedistStatePair& pair) {
  const auto& p = pair.params;
  if (p.d > 8 || p.d_a > 4)
    throw InvariantViolation("redist quantities capped at d <= 8, d_a <= 4");
  RedistQuantities out;

  const DensityOperator psi_full = pair.psi.to_density();
  out.cqmi_psi = cqmi(psi_full, {"Ra", "Rp"}, {"B"}, {"C"});
  out.s_psi_c = von_neumann_entropy(marginal(pair.psi, {"C"}));

  const DensityOperator ghz_full = pair.ghz.to_density();
  const DensityOperator omega_rb = partial_trace(ghz_full, {"Ra", "Rp", "B"});
  const DensityOperator omega_r = partial_trace(ghz_full, {"Ra", "Rp"});
  const Matrix side = kron(omega_r.matrix(),
                           Matrix::Identity(p.d, p.d) / static_cast<double>(p.d));
  out.imax_rb_ub = dmax(omega_rb, DensityOperator(side, omega_rb.dim()));
  out.i_r_bc_ghz = mutual_information(partial_trace(ghz_full, {"Ra", "Rp", "B", "C"}),
                                      {"Ra", "Rp"});
  out.avg_i_rp_bc = 2.0 * std::log2(static_cast<double>(p.d));
  return out;
}

struct WorstCaseBound {
  double bound = 0.0;          // ((1-3 delta)/2) log2 d - 1.5, floored at 0
  double sixth_log_d = 0.0;    // (1/6) log2 d
  bool exceeds_sixth = false;  // bound > (1/6) log2 d
  bool regime_applies = false; // d > 2^18, where the guarantee is stated
};

inline WorstCaseBound worst_case_redist_bound(double d, double delta) {
  if (!(delta > 0.0 && delta < 1.0 / 6.0))
    throw InvariantViolation("delta must be in (0, 1/6)");
  WorstCaseBound out;
  const double logd = std::log2(d);
  out.bound = std::max(0.0, 0.5 * (1.0 - 3.0 * delta) * logd - 1.5);
  out.sixth_log_d = logd / 6.0;
  out.exceeds_sixth = out.bound > out.sixth_log_d;
  out.regime_applies = logd > 18.0;
  return out;
}

/// log2 of the dimension where ((1-3 delta)/2) log2 d - 1.5 starts exceeding
/// (1/6) log2 d; approaches 18 as delta -> 1/6, which is where the blanket
/// "d > 2^18" regime comes from.
inline double worst_case_threshold_log2d(double delta) {
  if (!(delta > 0.0 && delta < 1.0 / 6.0))
    throw InvariantViolation("delta must be in (0, 1/6)");
  const double slope = 0.5 * (1.0 - 3.0 * delta) - 1.0 / 6.0;
  return 1.5 / slope;
}

struct SeparationParams {
  double mu = 0.0;
  double beta = 0.0;
  double error_bound = 0.0;     // 8 sqrt(2) eps^{(1-p)/4}
  double eps_max = 0.0;         // (1/70)^{4/(1-p)}
  bool eps_admissible = false;
  bool error_below_sixth = false;
  double worst_case_budget_factor = 0.0;  // 2/(mu(1-eps)): worst case <= this times C
};

/// Parameter arithmetic of the redistribution separation: mu, beta, the
/// resulting protocol error, the admissible-eps ceiling, and the expected-to-
/// worst-case conversion factor.
inline SeparationParams redist_separation_params(double p, double eps) {
  if (!(p > 0.0 && p < 1.0)) throw InvariantViolation("p must be in (0,1)");
  if (!(eps >= 0.0 && eps < 1.0)) throw InvariantViolation("eps must be in [0,1)");
  SeparationParams out;
  out.mu = 32.0 * std::pow(eps, (1.0 - p) / 2.0);
  out.beta = 128.0 / (out.mu * std::pow(eps, p));
  out.error_bound = 8.0 * std::sqrt(2.0) * std::pow(eps, (1.0 - p) / 4.0);
  out.eps_max = std::pow(1.0 / 70.0, 4.0 / (1.0 - p));
  out.eps_admissible = eps <= out.eps_max;
  out.error_below_sixth = out.error_bound < 1.0 / 6.0;
  out.worst_case_budget_factor = 2.0 / (out.mu * (1.0 - eps));
  return out;
}

} // namespace oqc::redist

#endif

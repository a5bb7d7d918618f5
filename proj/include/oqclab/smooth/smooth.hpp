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
#ifndef OQCLAB_SMOOTH_SMOOTH_HPP
#define OQCLAB_SMOOTH_SMOOTH_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "oqclab/qcore/linalg.hpp"
#include "oqclab/qcore/measures.hpp"
#include "oqclab/qcore/random.hpp"
#include "oqclab/qcore/types.hpp"

namespace oqc::smooth {

/// Complementary spectral projectors of a state at eigenvalue threshold 1/k.
struct SplitProjectorPair {
  Matrix qminus;  // span of eigenvectors with eigenvalue < 1/k
  Matrix qplus;   // complement
  double k = 0.0;
  int rank_plus = 0;
  int rank_minus = 0;
};

inline SplitProjectorPair split_projectors(const DensityOperator& omega, double k) {
  if (!(k > 1.0)) throw InvariantViolation("split threshold k must be > 1");
  auto [vals, vecs] = hermitian_eig(omega.matrix());
  const int d = omega.d();
  SplitProjectorPair out;
  out.k = k;
  out.qminus = Matrix::Zero(d, d);
  out.qplus = Matrix::Zero(d, d);
  const double threshold = 1.0 / k;
  for (int i = 0; i < d; ++i) {
    const Matrix proj = vecs.col(i) * vecs.col(i).adjoint();
    if (vals(i) < threshold) {
      out.qminus += proj;
      ++out.rank_minus;
    } else {
      out.qplus += proj;
      ++out.rank_plus;
    }
  }
  return out;
}

namespace detail {

inline void require_projector(const Matrix& q) {
  if ((q * q - q).cwiseAbs().maxCoeff() > 1e-8)
    throw InvariantViolation("matrix is not a projector");
}

inline double overlap(const PureState& psi, const Matrix& q) {
  return std::max(0.0, (psi.vector().adjoint() * q * psi.vector())(0, 0).real());
}

} // namespace detail

/// Smoothed subspace overlap S^nu(psi || Q^-): the infimum of <l|Q^-|l> over
/// pure l with |<l|psi>|^2 > 1 - nu. Zero when <psi|Q^-|psi> <= nu, otherwise
/// (sqrt((1-nu) q-) - sqrt(q+ nu))^2 with q-+q+ = 1.
inline double smoothed_overlap_closed_form(const PureState& psi, const Matrix& qminus,
                                           double nu) {
  if (!(nu > 0.0 && nu < 1.0)) throw InvariantViolation("nu must be in (0,1)");
  detail::require_projector(qminus);
  const double qm = detail::overlap(psi, qminus);
  // Trivial complement: Q^- is the identity, so every unit vector scores qm.
  const double rank_plus = static_cast<double>(psi.d()) - qminus.trace().real();
  if (rank_plus < 0.5) return qm;
  if (qm <= nu) return 0.0;
  const double qp = std::max(0.0, 1.0 - qm);
  const double root = std::sqrt((1.0 - nu) * qm) - std::sqrt(qp * nu);
  return root * root;
}

/// Certified lower bound L on D_max^nu(psi || omega) from the split at
/// threshold k: 2^{-D_max^nu} <= 1 / (k (1-nu) S^nu(psi||Q^-)). Returns the
/// trivial bound 0 unless <psi|Q^-|psi> > 2 nu.
inline double smooth_dmax_lower_bound(const PureState& psi, const DensityOperator& omega,
                                      double nu, double k) {
  require_same_dim(psi.dim(), omega.dim());
  const auto split = split_projectors(omega, k);
  const double qm = detail::overlap(psi, split.qminus);
  if (qm <= 2.0 * nu) return 0.0;
  const double s = smoothed_overlap_closed_form(psi, split.qminus, nu);
  if (s <= 0.0) return 0.0;
  return std::max(0.0, std::log2(k * (1.0 - nu) * s));
}

/// Same bound, re-used when the projector pair is already available.
inline double smooth_dmax_lower_bound(const PureState& psi, const SplitProjectorPair& split,
                                      double nu) {
  const double qm = detail::overlap(psi, split.qminus);
  if (qm <= 2.0 * nu) return 0.0;
  const double s = smoothed_overlap_closed_form(psi, split.qminus, nu);
  if (s <= 0.0) return 0.0;
  return std::max(0.0, std::log2(split.k * (1.0 - nu) * s));
}

/// Upper witness for sandwiching the smooth max-relative entropy: minimum of
/// log2 <l|omega^{-1}|l> over pure candidates l with F(l, psi) >= 1 - nu.
/// Candidates walk the geodesics from psi toward the cheap eigenvectors of
/// omega^{-1}, plus seeded random perturbations.
inline double smooth_dmax_upper_estimate(const PureState& psi, const DensityOperator& omega,
                                         double nu, std::uint64_t seed = 20260808,
                                         int random_candidates = 10000) {
  require_same_dim(psi.dim(), omega.dim());
  const int d = omega.d();
  const Matrix omega_inv = pinv_psd(omega.matrix());
  auto cost = [&](const Vector& v) {
    return (v.adjoint() * omega_inv * v)(0, 0).real();
  };
  // F(pure, pure) = |overlap|; the ball constraint caps the moved mass.
  const double u_max = std::max(0.0, 1.0 - (1.0 - nu) * (1.0 - nu));
  double best = cost(psi.vector());

  auto [vals, vecs] = hermitian_eig(omega.matrix());
  // descending omega eigenvalue = ascending omega^{-1} cost
  for (int idx = d - 1; idx >= 0; --idx) {
    const Vector v = vecs.col(idx);
    Complex ov = psi.vector().dot(v);  // <psi|v>
    Vector vp = v - std::conj(ov) * psi.vector();
    const double npv = vp.norm();
    if (npv < 1e-12) continue;
    vp /= npv;
    for (int step = 1; step <= 64; ++step) {
      const double u = u_max * static_cast<double>(step) / 64.0;
      const Vector cand = std::sqrt(1.0 - u) * psi.vector() + std::sqrt(u) * vp;
      best = std::min(best, cost(cand));
    }
  }

  Rng rng = Rng::substream(seed, 0x75657374ULL);
  for (int i = 0; i < random_candidates; ++i) {
    const double u = u_max * rng.uniform();
    Vector chi = gaussian_vector(d, rng);
    chi -= psi.vector().dot(chi) * psi.vector();
    const double n = chi.norm();
    if (n < 1e-12) continue;
    chi /= n;
    const Vector cand = std::sqrt(1.0 - u) * psi.vector() + std::sqrt(u) * chi;
    best = std::min(best, cost(cand));
  }
  return std::log2(best);
}

struct AvgBoundDiagnostics {
  double bound = 0.0;
  double bad_fraction = 0.0;
  double bad_fraction_prediction = 0.0;  // 96/d
  double k = 0.0;
  double nu = 0.0;
  int q_rank = 0;
  std::vector<double> per_state_lower_bounds;
};

/// Certified upper bound on E_i 2^{-D_max^nu(Psi_i || omega)} for an anchored
/// hard ensemble. Splits omega at k = d/4, restricts to a subspace of Q^-
/// orthogonal to the anchor |0>, counts the low-overlap states exactly, and
/// bounds the rest per state.
inline AvgBoundDiagnostics ensemble_avg_two_pow_neg_dmax_bound(
    const Ensemble& ens, const DensityOperator& omega, double nu, double delta,
    std::optional<double> k_override = std::nullopt) {
  require_same_dim(ens.dim(), omega.dim());
  if (!(nu > 0.0 && nu < delta / 8.0))
    throw InvariantViolation("nu must lie in (0, delta/8)");
  const int d = omega.d();
  const double k = k_override.value_or(static_cast<double>(d) / 4.0);
  if (!(k > 1.0)) throw InvariantViolation("resulting threshold k must be > 1");
  const auto split = split_projectors(omega, k);

  // Basis of a subspace of range(Q^-) orthogonal to the anchor |0>, of target
  // dimension d - ceil(k). The anchor constraint is solved in Q^- coordinates
  // so the subspace stays inside range(Q^-).
  auto [vals, vecs] = hermitian_eig(omega.matrix());
  std::vector<int> minus_idx;
  for (int i = 0; i < d; ++i)
    if (vals(i) < 1.0 / k) minus_idx.push_back(i);
  const int rm = static_cast<int>(minus_idx.size());
  Matrix basis(d, rm);
  for (int i = 0; i < rm; ++i) basis.col(i) = vecs.col(minus_idx[i]);
  Vector anchor = Vector::Zero(d);
  anchor(0) = 1.0;
  const Vector u = basis.adjoint() * anchor;  // anchor in Q^- coordinates
  Matrix coeff;                               // rm x (subspace dim), orthonormal
  if (u.norm() < 1e-12) {
    coeff = Matrix::Identity(rm, rm);
  } else {
    // complete u to an orthonormal basis of C^rm, keep its orthocomplement
    Matrix full = Matrix::Zero(rm, rm);
    full.col(0) = u / u.norm();
    int filled = 1;
    for (int i = 0; i < rm && filled < rm; ++i) {
      Vector e = Vector::Zero(rm);
      e(i) = 1.0;
      for (int j = 0; j < filled; ++j) e -= full.col(j).dot(e) * full.col(j);
      if (e.norm() > 1e-9) full.col(filled++) = e / e.norm();
    }
    coeff = full.rightCols(rm - 1);
  }
  const int target = std::max(0, d - static_cast<int>(std::ceil(k)));
  const int q_rank = std::min(static_cast<int>(coeff.cols()), target > 0 ? target : rm);
  Matrix qbasis = basis * coeff.leftCols(q_rank);
  const Matrix q_proj = qbasis * qbasis.adjoint();

  AvgBoundDiagnostics diag;
  diag.k = k;
  diag.nu = nu;
  diag.q_rank = q_rank;
  diag.bad_fraction_prediction = 96.0 / static_cast<double>(d);

  double bound = 0.0;
  double bad_mass = 0.0;
  for (const auto& item : ens.items()) {
    const double qq = detail::overlap(item.psi, q_proj);
    if (qq < delta / 2.0) {
      bad_mass += item.p;
      diag.per_state_lower_bounds.push_back(0.0);
      continue;
    }
    const double lb = smooth_dmax_lower_bound(item.psi, split, nu);
    diag.per_state_lower_bounds.push_back(lb);
    bound += item.p * std::exp2(-lb);
  }
  diag.bad_fraction = bad_mass;
  diag.bound = bound + bad_mass;
  return diag;
}

struct QStarResult {
  double value = 0.0;
  std::string regime;  // "certified" or "heuristic"
  int best_candidate = -1;
  double best_sum = 0.0;
  std::vector<double> per_candidate_sum;
};

/// Certified floor on q* valid over every side state: sandwiching any state
/// in the smoothing ball between the pure member and 2^Dmax omega gives
/// 2^{-Dmax^nu(psi||omega)} <= <psi|omega|psi> / (1-nu)^2, so the average is
/// at most lambda_max(average state) / (1-nu)^2 for every omega.
inline double q_star_spectral_floor(const Ensemble& ens, double nu) {
  auto [vals, vecs] = hermitian_eig(ens.average_state().matrix());
  (void)vecs;
  const double lmax = vals.maxCoeff();
  return -std::log2(lmax) + 2.0 * std::log2(1.0 - nu);
}

inline std::vector<DensityOperator> default_q_star_candidates(const Ensemble& ens,
                                                              std::uint64_t seed,
                                                              int random_count = 200) {
  std::vector<DensityOperator> cands;
  cands.push_back(ens.average_state());
  const int d = ens.dim().total();
  cands.emplace_back(Matrix::Identity(d, d) / static_cast<double>(d), ens.dim());
  for (const auto& item : ens.items()) cands.push_back(item.psi.to_density());
  Rng rng = Rng::substream(seed, 0x71737472ULL);
  for (int i = 0; i < random_count; ++i) cands.push_back(random_density(ens.dim(), rng));
  return cands;
}

namespace detail {

/// Best lower bound over split thresholds: one candidate k just below each
/// eigenvalue breakpoint 1/lambda, plus d/4 when admissible.
inline double best_lower_bound_over_k(const PureState& psi, const DensityOperator& omega,
                                      double nu, double k_cap = 1e12) {
  auto [vals, vecs] = hermitian_eig(omega.matrix());
  (void)vecs;
  double best = 0.0;
  std::vector<double> ks;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    const double lam = std::max(vals(i), 1.0 / k_cap);
    const double k = (1.0 / lam) * (1.0 - 1e-9);
    if (k > 1.0) ks.push_back(std::min(k, k_cap));
  }
  const double quarter = static_cast<double>(omega.d()) / 4.0;
  if (quarter > 1.0) ks.push_back(quarter);
  for (double k : ks) best = std::max(best, smooth_dmax_lower_bound(psi, omega, nu, k));
  return best;
}

} // namespace detail

/// -log2 of the maximum, over the supplied side-state candidates, of
/// sum_x p(x) 2^{-LB(x, omega)} with per-state certified lower bounds. A
/// certified lower bound on Q* only for an exhaustive candidate search;
/// otherwise a heuristic estimate (the regime is recorded in the result).
inline QStarResult q_star_estimate(const Ensemble& ens,
                                   const std::vector<DensityOperator>& candidates,
                                   double nu, bool exhaustive = false) {
  if (candidates.empty()) throw InvariantViolation("empty candidate list");
  QStarResult res;
  res.regime = exhaustive ? "certified" : "heuristic";
  double max_sum = 0.0;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    require_same_dim(ens.dim(), candidates[c].dim());
    double sum = 0.0;
    for (const auto& item : ens.items()) {
      const double lb = detail::best_lower_bound_over_k(item.psi, candidates[c], nu);
      sum += item.p * std::exp2(-lb);
    }
    res.per_candidate_sum.push_back(sum);
    if (sum > max_sum) {
      max_sum = sum;
      res.best_candidate = static_cast<int>(c);
    }
  }
  res.best_sum = max_sum;
  res.value = -std::log2(max_sum) + 0.0;  // normalize -0
  return res;
}

} // namespace oqc::smooth

#endif

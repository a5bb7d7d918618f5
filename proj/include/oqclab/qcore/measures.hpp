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
#ifndef OQCLAB_QCORE_MEASURES_HPP
#define OQCLAB_QCORE_MEASURES_HPP

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "oqclab/qcore/linalg.hpp"
#include "oqclab/qcore/partial_trace.hpp"
#include "oqclab/qcore/types.hpp"

namespace oqc {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Generalized fidelity ||sqrt(rho) sqrt(sigma)||_1 + sqrt((1-tr rho)(1-tr sigma)).
/// All logarithms in this library are base 2.
inline double fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
  require_same_dim(rho.dim(), sigma.dim());
  const Matrix a = matrix_sqrt_psd(rho.matrix()) * matrix_sqrt_psd(sigma.matrix());
  double f = trace_norm(a);
  const double tr_r = std::min(rho.trace(), 1.0);
  const double tr_s = std::min(sigma.trace(), 1.0);
  f += std::sqrt((1.0 - tr_r) * (1.0 - tr_s));
  return std::min(f, 1.0);
}

inline double purified_distance(const DensityOperator& rho, const DensityOperator& sigma) {
  const double f = fidelity(rho, sigma);
  return std::sqrt(std::max(0.0, 1.0 - f * f));
}

/// Von Neumann entropy in bits; rejects sub-normalized inputs.
inline double von_neumann_entropy(const DensityOperator& rho) {
  if (!rho.normalized())
    throw InvariantViolation("entropy requires a normalized state");
  auto [vals, vecs] = hermitian_eig(rho.matrix());
  (void)vecs;
  const Eigen::VectorXd lam = clamp_spectrum(vals);
  double s = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i)
    if (lam(i) > 0.0) s -= lam(i) * std::log2(lam(i));
  return std::max(0.0, s);
}

namespace detail {

struct SupportDecomp {
  Eigen::VectorXd values;
  Matrix vectors;
  std::vector<int> support;  // indices with eigenvalue > tol::support
};

inline SupportDecomp support_decomp(const Matrix& m) {
  auto [vals, vecs] = hermitian_eig(m);
  SupportDecomp out{vals, vecs, {}};
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    if (vals(i) > tol::support) out.support.push_back(static_cast<int>(i));
  return out;
}

/// Mass of rho outside sigma's support.
inline double mass_outside_support(const Matrix& rho, const SupportDecomp& sd) {
  double outside = 0.0;
  for (Eigen::Index i = 0; i < sd.values.size(); ++i) {
    if (sd.values(i) > tol::support) continue;
    const Vector v = sd.vectors.col(i);
    outside += (v.adjoint() * rho * v)(0, 0).real();
  }
  return outside;
}

} // namespace detail

/// Max-relative entropy: log2 of the largest eigenvalue of
/// sigma^{-1/2} rho sigma^{-1/2} on sigma's support; +inf on support violation.
inline double dmax(const DensityOperator& rho, const DensityOperator& sigma) {
  require_same_dim(rho.dim(), sigma.dim());
  const auto sd = detail::support_decomp(sigma.matrix());
  if (detail::mass_outside_support(rho.matrix(), sd) > tol::support_mass) return kInf;
  const int r = static_cast<int>(sd.support.size());
  Matrix vs(sigma.matrix().rows(), r);
  Eigen::VectorXd inv_sqrt(r);
  for (int i = 0; i < r; ++i) {
    vs.col(i) = sd.vectors.col(sd.support[i]);
    inv_sqrt(i) = 1.0 / std::sqrt(sd.values(sd.support[i]));
  }
  const Matrix w = inv_sqrt.asDiagonal() * (vs.adjoint() * rho.matrix() * vs) *
                   inv_sqrt.asDiagonal();
  auto [vals, vecs] = hermitian_eig(w);
  (void)vecs;
  const double lmax = vals.maxCoeff();
  if (lmax <= 0.0) return -kInf;
  return std::log2(lmax);
}

/// Pure-state route: dmax(|psi><psi|, sigma) = log2 <psi|sigma^{-1}|psi>.
/// Kept as an independent computation for cross-checks.
inline double dmax_pure(const PureState& psi, const DensityOperator& sigma) {
  require_same_dim(psi.dim(), sigma.dim());
  const auto sd = detail::support_decomp(sigma.matrix());
  const Matrix rho = psi.vector() * psi.vector().adjoint();
  if (detail::mass_outside_support(rho, sd) > tol::support_mass) return kInf;
  double q = 0.0;
  for (int i : sd.support) {
    const Complex amp = sd.vectors.col(i).dot(psi.vector());
    q += std::norm(amp) / sd.values(i);
  }
  return std::log2(q);
}

/// Relative entropy Tr rho (log rho - log sigma) on common support.
inline double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma) {
  require_same_dim(rho.dim(), sigma.dim());
  const auto sd = detail::support_decomp(sigma.matrix());
  if (detail::mass_outside_support(rho.matrix(), sd) > tol::support_mass) return kInf;
  auto [rvals, rvecs] = hermitian_eig(rho.matrix());
  const Eigen::VectorXd lam = clamp_spectrum(rvals);
  double tr_rho_log_rho = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i)
    if (lam(i) > 0.0) tr_rho_log_rho += lam(i) * std::log2(lam(i));
  double tr_rho_log_sigma = 0.0;
  for (int i : sd.support) {
    const Vector v = sd.vectors.col(i);
    const double weight = (v.adjoint() * rho.matrix() * v)(0, 0).real();
    tr_rho_log_sigma += weight * std::log2(sd.values(i));
  }
  (void)rvecs;
  return tr_rho_log_rho - tr_rho_log_sigma;
}

inline double entropy_of_marginal(const DensityOperator& rho,
                                  const std::vector<std::string>& keep) {
  return von_neumann_entropy(partial_trace(rho, keep));
}

/// Mutual information I(A;B) across a register cut of a normalized state.
inline double mutual_information(const DensityOperator& rho,
                                 const std::vector<std::string>& side_a) {
  if (!rho.normalized())
    throw InvariantViolation("mutual information requires a normalized state");
  std::vector<std::string> side_b;
  for (const auto& r : rho.dim().registers()) {
    bool in_a = false;
    for (const auto& l : side_a)
      if (l == r.label) in_a = true;
    if (!in_a) side_b.push_back(r.label);
  }
  if (side_b.empty() || side_a.empty())
    throw RegisterError("mutual information needs a nontrivial cut");
  return entropy_of_marginal(rho, side_a) + entropy_of_marginal(rho, side_b) -
         von_neumann_entropy(rho);
}

/// Conditional quantum mutual information I(A;C|B) = S(AB)+S(BC)-S(B)-S(ABC).
inline double cqmi(const DensityOperator& rho, const std::vector<std::string>& a,
                   const std::vector<std::string>& b, const std::vector<std::string>& c) {
  if (!rho.normalized())
    throw InvariantViolation("cqmi requires a normalized state");
  std::vector<std::string> ab = a, bc = b;
  ab.insert(ab.end(), b.begin(), b.end());
  bc.insert(bc.end(), c.begin(), c.end());
  std::vector<std::string> abc = ab;
  abc.insert(abc.end(), c.begin(), c.end());
  // keep-lists must follow the register order of rho
  auto ordered = [&](std::vector<std::string> labels) {
    std::vector<std::string> out;
    for (const auto& r : rho.dim().registers())
      for (const auto& l : labels)
        if (l == r.label) out.push_back(l);
    return out;
  };
  return entropy_of_marginal(rho, ordered(ab)) + entropy_of_marginal(rho, ordered(bc)) -
         entropy_of_marginal(rho, ordered(b)) -
         von_neumann_entropy(DensityOperator(
             partial_trace_matrix(rho.matrix(), rho.dim(), ordered(abc)),
             subdim(rho.dim(), ordered(abc))));
}

} // namespace oqc

#endif

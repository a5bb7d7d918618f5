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
#ifndef OQCLAB_VERIFY_OVERLAP_ORACLE_HPP
#define OQCLAB_VERIFY_OVERLAP_ORACLE_HPP

// Brute-force minimizer of <l|Q^-|l> over pure l with |<l|psi>|^2 > 1 - nu.
// Verification-only: independent of the closed form it cross-checks, so keep
// it free of any call into oqclab/smooth.

#include <algorithm>
#include <cmath>

#include "oqclab/qcore/linalg.hpp"
#include "oqclab/qcore/random.hpp"
#include "oqclab/qcore/types.hpp"

namespace oqc::verify {

struct OverlapOracleResult {
  double reduced = 0.0;   // two-real-parameter route
  double sampled = 0.0;   // random restarts + full-space refinement
  double value = 0.0;     // min of the two
  double disagreement = 0.0;
};

namespace detail {

inline double q_form(const Matrix& qminus, const Vector& v) {
  return std::max(0.0, (v.adjoint() * qminus * v)(0, 0).real());
}

/// min over unit x of x^dag M x + 2 Re(c^dag x) for Hermitian PSD M: the
/// trust-region subproblem, solved by bisection on the Lagrange multiplier.
inline double sphere_quadratic_min(const Matrix& m, const Vector& c) {
  auto [vals, vecs] = hermitian_eig(m);
  const Eigen::Index n = vals.size();
  Vector ct = vecs.adjoint() * c;
  const double mu_min = vals.minCoeff();
  const double cn = ct.norm();
  if (cn < 1e-15) return mu_min;

  auto norm_x = [&](double lam) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double den = vals(i) - lam;
      s += std::norm(ct(i)) / (den * den);
    }
    return std::sqrt(s);
  };
  // ||x(lam)|| grows monotonically as lam -> mu_min from below
  double lo = mu_min - cn - 1.0, hi = mu_min - 1e-14;
  if (norm_x(hi) < 1.0) {
    // hard case: deficit made up along the bottom eigenspace
    double s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double den = vals(i) - mu_min;
      if (std::abs(den) > 1e-12) s += std::norm(ct(i)) / (den * den);
    }
    const double extra2 = std::max(0.0, 1.0 - s);
    double val = mu_min;  // lam * ||x||^2 + Re(c^dag x) evaluated below
    double obj = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double den = vals(i) - mu_min;
      if (std::abs(den) > 1e-12) {
        const Complex xi = -ct(i) / den;
        obj += vals(i) * std::norm(xi) + 2.0 * std::real(std::conj(ct(i)) * xi);
      }
    }
    obj += mu_min * extra2;  // bottom-eigenspace motion adds mu_min per unit mass
    (void)val;
    return obj;
  }
  while (norm_x(lo) > 1.0) lo = mu_min - 2.0 * (mu_min - lo) - 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (norm_x(mid) > 1.0 ? hi : lo) = mid;
  }
  const double lam = 0.5 * (lo + hi);
  double obj = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex xi = -ct(i) / (vals(i) - lam);
    obj += vals(i) * std::norm(xi) + 2.0 * std::real(std::conj(ct(i)) * xi);
  }
  return obj;
}

/// Exact inner minimization for fixed moved mass u: objective decomposes as
/// (1-u) qm + min over unit chi (orthogonal to psi) of the quadratic form.
inline double value_at_u(const Matrix& qminus, const Vector& psi, double u) {
  const int d = static_cast<int>(psi.size());
  const double qm = q_form(qminus, psi);
  if (u <= 0.0) return qm;
  // orthonormal basis of the complement of psi
  Matrix basis = Matrix::Zero(d, d - 1);
  {
    Matrix full = Matrix::Zero(d, d);
    full.col(0) = psi;
    int filled = 1;
    for (int i = 0; i < d && filled < d; ++i) {
      Vector e = Vector::Zero(d);
      e(i) = 1.0;
      for (int j = 0; j < filled; ++j) e -= full.col(j).dot(e) * full.col(j);
      if (e.norm() > 1e-9) full.col(filled++) = e / e.norm();
    }
    basis = full.rightCols(d - 1);
  }
  const Matrix m_sub = u * (basis.adjoint() * qminus * basis);
  const Vector c_sub = std::sqrt(u * (1.0 - u)) * (basis.adjoint() * (qminus * psi));
  return (1.0 - u) * qm + sphere_quadratic_min(m_sub, c_sub);
}

} // namespace detail

/// Route one: the real (a, b) plane spanned by Q^- psi and Q^+ psi, feasible
/// arc scanned coarse-to-fine. Route two: seeded random restarts over the
/// full sphere cap, then an exact inner solve on a grid over the moved mass.
/// Disagreement beyond 1e-5 between the routes signals a broken oracle.
inline OverlapOracleResult overlap_oracle(const PureState& psi_state, const Matrix& qminus,
                                          double nu, std::uint64_t seed,
                                          int restarts = 100000) {
  const Vector& psi = psi_state.vector();
  const int d = static_cast<int>(psi.size());
  const Matrix qplus = Matrix::Identity(d, d) - qminus;

  OverlapOracleResult res;

  // --- two-real-parameter reduction ---
  const Vector qm_psi = qminus * psi;
  const Vector qp_psi = qplus * psi;
  const double qm = std::max(0.0, qm_psi.squaredNorm());
  const double qp = std::max(0.0, qp_psi.squaredNorm());
  double reduced;
  if (qm <= 1e-14) {
    reduced = 0.0;
  } else if (qp <= 1e-14) {
    // psi sits inside Q^-; move the allowed mass toward Q^+ if it exists
    reduced = qplus.trace().real() > 0.5 ? 1.0 - nu : 1.0;
  } else {
    auto alpha_sq_min = [&](double lo, double hi, int steps) {
      double best = 2.0;
      double best_theta = lo;
      for (int i = 0; i <= steps; ++i) {
        const double theta = lo + (hi - lo) * static_cast<double>(i) / steps;
        const double a = std::cos(theta), b = std::sin(theta);
        const double ov = a * std::sqrt(qm) + b * std::sqrt(qp);
        if (ov * ov <= 1.0 - nu) continue;
        if (a * a < best) {
          best = a * a;
          best_theta = theta;
        }
      }
      return std::pair<double, double>{best, best_theta};
    };
    auto [coarse, theta0] = alpha_sq_min(0.0, 2.0 * M_PI, 400000);
    const double window = 2.0 * 2.0 * M_PI / 400000;
    auto [fine, theta1] = alpha_sq_min(theta0 - window, theta0 + window, 20000);
    (void)theta1;
    reduced = std::min(coarse, fine);
    if (reduced > 1.5) reduced = qm;  // only psi itself feasible
  }
  res.reduced = reduced;

  // --- random restarts + exact inner solve in the full space ---
  Rng rng = Rng::substream(seed, 0x6f72636cULL);
  double sampled = detail::q_form(qminus, psi);
  const double u_cap = nu * (1.0 - 1e-12);
  for (int i = 0; i < restarts; ++i) {
    Vector chi = gaussian_vector(d, rng);
    chi -= psi.dot(chi) * psi;
    const double n = chi.norm();
    if (n < 1e-12) continue;
    chi /= n;
    const double u = u_cap * rng.uniform();
    const Vector cand = std::sqrt(1.0 - u) * psi + std::sqrt(u) * chi;
    sampled = std::min(sampled, detail::q_form(qminus, cand));
  }
  {
    double best_u = 0.0, best_val = sampled;
    for (int i = 0; i <= 400; ++i) {
      const double u = u_cap * static_cast<double>(i) / 400.0;
      const double val = detail::value_at_u(qminus, psi, u);
      if (val < best_val) {
        best_val = val;
        best_u = u;
      }
    }
    // golden-section polish around the best grid point
    double lo = std::max(0.0, best_u - u_cap / 400.0);
    double hi = std::min(u_cap, best_u + u_cap / 400.0);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = detail::value_at_u(qminus, psi, x1);
    double f2 = detail::value_at_u(qminus, psi, x2);
    for (int it = 0; it < 80; ++it) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - gr * (hi - lo);
        f1 = detail::value_at_u(qminus, psi, x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + gr * (hi - lo);
        f2 = detail::value_at_u(qminus, psi, x2);
      }
    }
    sampled = std::min({sampled, best_val, f1, f2});
  }
  res.sampled = sampled;

  res.value = std::min(res.reduced, res.sampled);
  res.disagreement = std::abs(res.reduced - res.sampled);
  return res;
}

} // namespace oqc::verify

#endif

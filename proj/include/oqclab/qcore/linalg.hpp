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
#ifndef OQCLAB_QCORE_LINALG_HPP
#define OQCLAB_QCORE_LINALG_HPP

#include <cmath>

#include "oqclab/qcore/types.hpp"

namespace oqc {

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

struct EigenSystem {
  Eigen::VectorXd values;  // ascending
  Matrix vectors;          // columns
};

inline EigenSystem hermitian_eig(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint().eval()));
  return {es.eigenvalues(), es.eigenvectors()};
}

/// Eigenvalues in [-tol::psd, 0) are clamped to 0; Hermitian solvers return
/// tiny negatives on PSD inputs.
inline Eigen::VectorXd clamp_spectrum(const Eigen::VectorXd& vals) {
  Eigen::VectorXd out = vals;
  for (Eigen::Index i = 0; i < out.size(); ++i)
    if (out(i) < 0.0) out(i) = 0.0;
  return out;
}

inline Matrix matrix_sqrt_psd(const Matrix& m) {
  auto [vals, vecs] = hermitian_eig(m);
  Eigen::VectorXd s = clamp_spectrum(vals).cwiseSqrt();
  return vecs * s.asDiagonal() * vecs.adjoint();
}

/// Trace norm = sum of singular values.
inline double trace_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

/// Trace norm of a Hermitian matrix = sum |eigenvalues|; cheaper than a SVD.
inline double trace_norm_hermitian(const Matrix& m) {
  auto [vals, vecs] = hermitian_eig(m);
  (void)vecs;
  return vals.cwiseAbs().sum();
}

inline double operator_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().maxCoeff();
}

/// Pseudo-inverse square root on the support (eigenvalues > tol::support).
inline Matrix pinv_sqrt_psd(const Matrix& m) {
  auto [vals, vecs] = hermitian_eig(m);
  Eigen::VectorXd s = Eigen::VectorXd::Zero(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    if (vals(i) > tol::support) s(i) = 1.0 / std::sqrt(vals(i));
  return vecs * s.asDiagonal() * vecs.adjoint();
}

inline Matrix pinv_psd(const Matrix& m) {
  auto [vals, vecs] = hermitian_eig(m);
  Eigen::VectorXd s = Eigen::VectorXd::Zero(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    if (vals(i) > tol::support) s(i) = 1.0 / vals(i);
  return vecs * s.asDiagonal() * vecs.adjoint();
}

inline Matrix projector_onto_columns(const Matrix& basis) {
  return basis * basis.adjoint();
}

inline double log2_clamped(double x) {
  return std::log2(x);
}

inline double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

} // namespace oqc

#endif

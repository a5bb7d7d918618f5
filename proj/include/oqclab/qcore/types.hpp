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
#ifndef OQCLAB_QCORE_TYPES_HPP
#define OQCLAB_QCORE_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace oqc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Numerical tolerances shared across the library.
namespace tol {
inline constexpr double hermitian = 1e-10;    // max entrywise |M - M^dag|
inline constexpr double psd = 1e-9;           // eigenvalues >= -psd
inline constexpr double trace = 1e-9;         // trace window for states
inline constexpr double unit = 1e-12;         // pure-state norm
inline constexpr double prob = 1e-12;         // probability sums
inline constexpr double support = 1e-10;      // eigenvalue support membership
inline constexpr double support_mass = 1e-9;  // mass allowed outside support
} // namespace tol

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvariantViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RegisterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RegisterSpec {
  std::string label;
  int dim = 0;
  friend bool operator==(const RegisterSpec&, const RegisterSpec&) = default;
};

/// Dimension bookkeeping for a tensor product of labelled registers.
class HilbertDim {
public:
  HilbertDim() = default;

  explicit HilbertDim(std::vector<RegisterSpec> regs) : regs_(std::move(regs)) {
    total_ = 1;
    for (const auto& r : regs_) {
      if (r.dim < 1) throw InvariantViolation("register dimension must be >= 1");
      for (const auto& s : regs_)
        if (&s != &r && s.label == r.label)
          throw InvariantViolation("duplicate register label: " + r.label);
      total_ *= r.dim;
    }
    if (regs_.empty()) throw InvariantViolation("empty register list");
  }

  static HilbertDim single(int d, std::string label = "A") {
    return HilbertDim({{std::move(label), d}});
  }

  int total() const { return total_; }
  const std::vector<RegisterSpec>& registers() const { return regs_; }

  int index_of(const std::string& label) const {
    for (std::size_t i = 0; i < regs_.size(); ++i)
      if (regs_[i].label == label) return static_cast<int>(i);
    throw RegisterError("unknown register label: " + label);
  }

  bool has(const std::string& label) const {
    for (const auto& r : regs_)
      if (r.label == label) return true;
    return false;
  }

  friend bool operator==(const HilbertDim& a, const HilbertDim& b) {
    return a.regs_ == b.regs_;
  }

  bool same_total(const HilbertDim& other) const { return total_ == other.total_; }

private:
  std::vector<RegisterSpec> regs_;
  int total_ = 0;
};

inline void require_same_dim(const HilbertDim& a, const HilbertDim& b) {
  if (a.total() != b.total()) throw DimensionMismatch("dimension mismatch");
}

/// Hermitian PSD matrix with trace in (0, 1]; sub-normalized states allowed.
class DensityOperator {
public:
  DensityOperator(Matrix m, HilbertDim dim) : m_(std::move(m)), dim_(std::move(dim)) {
    if (m_.rows() != m_.cols() || m_.rows() != dim_.total())
      throw DimensionMismatch("matrix shape does not match dimension");
    const double herm_dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > tol::hermitian)
      throw InvariantViolation("matrix not Hermitian within tolerance");
    m_ = 0.5 * (m_ + m_.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol::psd)
      throw InvariantViolation("matrix not PSD within tolerance");
    const double tr = m_.trace().real();
    if (tr <= 0.0 || tr > 1.0 + tol::trace)
      throw InvariantViolation("trace outside (0, 1]");
  }

  DensityOperator(Matrix m, int d) : DensityOperator(std::move(m), HilbertDim::single(d)) {}

  const Matrix& matrix() const { return m_; }
  const HilbertDim& dim() const { return dim_; }
  int d() const { return dim_.total(); }
  double trace() const { return m_.trace().real(); }
  bool normalized() const { return std::abs(trace() - 1.0) <= tol::trace; }

private:
  Matrix m_;
  HilbertDim dim_;
};

/// Unit complex vector.
class PureState {
public:
  PureState(Vector v, HilbertDim dim) : v_(std::move(v)), dim_(std::move(dim)) {
    if (v_.size() != dim_.total())
      throw DimensionMismatch("vector length does not match dimension");
    if (std::abs(v_.norm() - 1.0) > tol::unit)
      throw InvariantViolation("pure state not normalized");
  }

  PureState(Vector v, int d) : PureState(std::move(v), HilbertDim::single(d)) {}

  const Vector& vector() const { return v_; }
  const HilbertDim& dim() const { return dim_; }
  int d() const { return dim_.total(); }

  DensityOperator to_density() const {
    return DensityOperator(v_ * v_.adjoint(), dim_);
  }

private:
  Vector v_;
  HilbertDim dim_;
};

/// Finite list of (probability, pure state) pairs on one Hilbert space.
class Ensemble {
public:
  struct Item {
    double p;
    PureState psi;
  };

  Ensemble(std::vector<Item> items) : items_(std::move(items)) {
    if (items_.empty()) throw InvariantViolation("empty ensemble");
    double sum = 0.0;
    for (const auto& it : items_) {
      if (it.p < 0.0) throw InvariantViolation("negative probability");
      if (!(it.psi.dim() == items_.front().psi.dim()))
        throw DimensionMismatch("ensemble states on different spaces");
      sum += it.p;
    }
    if (std::abs(sum - 1.0) > tol::prob * items_.size() + tol::prob)
      throw InvariantViolation("ensemble probabilities do not sum to 1");
  }

  const std::vector<Item>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  const HilbertDim& dim() const { return items_.front().psi.dim(); }

  DensityOperator average_state() const {
    Matrix avg = Matrix::Zero(dim().total(), dim().total());
    for (const auto& it : items_)
      avg += it.p * (it.psi.vector() * it.psi.vector().adjoint());
    return DensityOperator(avg, dim());
  }

private:
  std::vector<Item> items_;
};

} // namespace oqc

#endif

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
#ifndef OQCLAB_QCORE_RANDOM_HPP
#define OQCLAB_QCORE_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <optional>

#include "oqclab/qcore/linalg.hpp"
#include "oqclab/qcore/types.hpp"

namespace oqc {

/// SplitMix64 step; used both as the base generator and for deriving
/// independent substreams from (seed, tag) pairs. Platform-independent,
/// unlike the standard-library distributions.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // decorrelate trivially related seeds
    splitmix64(state_);
  }

  static Rng substream(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t s = seed;
    std::uint64_t mixed = splitmix64(s) ^ (tag * 0xda942042e4dd58b5ULL);
    return Rng(mixed);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in (0, 1]; safe as a log argument.
  double uniform_pos() { return 1.0 - uniform(); }

  /// Standard normal via Box-Muller (self-contained for reproducibility).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

inline Vector gaussian_vector(int d, Rng& rng) {
  Vector v(d);
  for (int i = 0; i < d; ++i) v(i) = rng.complex_normal();
  return v;
}

/// Haar-random pure state: i.i.d. standard complex Gaussian entries,
/// optionally projected orthogonal to a constraint vector, then normalized.
inline PureState haar_pure_state(const HilbertDim& dim, Rng& rng,
                                 const std::optional<PureState>& orthogonal_to = std::nullopt) {
  const int d = dim.total();
  if (orthogonal_to && d < 2)
    throw InvariantViolation("orthogonality constraint needs dim >= 2");
  if (orthogonal_to) require_same_dim(dim, orthogonal_to->dim());
  for (;;) {
    Vector v = gaussian_vector(d, rng);
    if (orthogonal_to) {
      const Vector& c = orthogonal_to->vector();
      v -= c.dot(v) * c;
    }
    const double n = v.norm();
    if (n > 1e-8) return PureState(v / n, dim);
  }
}

inline PureState haar_pure_state(int d, Rng& rng,
                                 const std::optional<PureState>& orthogonal_to = std::nullopt) {
  return haar_pure_state(HilbertDim::single(d), rng, orthogonal_to);
}

/// Haar-random unitary via QR of a Ginibre matrix with phase fix.
inline Matrix random_unitary(int d, Rng& rng) {
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    Complex rii = r(i, i);
    Complex phase = (std::abs(rii) > 0) ? rii / std::abs(rii) : Complex(1, 0);
    q.col(i) *= phase;
  }
  return q;
}

/// Random full-rank (by default) density operator: GG^dag normalized.
inline DensityOperator random_density(const HilbertDim& dim, Rng& rng, int rank = 0) {
  const int d = dim.total();
  if (rank <= 0 || rank > d) rank = d;
  Matrix g(d, rank);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = rng.complex_normal();
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityOperator(m, dim);
}

inline DensityOperator random_density(int d, Rng& rng, int rank = 0) {
  return random_density(HilbertDim::single(d), rng, rank);
}

} // namespace oqc

#endif

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
#ifndef OQCLAB_SPLITSIM_CONVEX_SPLIT_HPP
#define OQCLAB_SPLITSIM_CONVEX_SPLIT_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "oqclab/qcore/linalg.hpp"
#include "oqclab/qcore/measures.hpp"
#include "oqclab/qcore/types.hpp"

namespace oqc::splitsim {

/// Inputs for the convex-split construction: states Psi_i planted in slot i
/// of a tensor mixture whose side marginals look like omega_i.
struct ConvexSplitInstance {
  std::vector<double> p;
  std::vector<DensityOperator> psi;
  std::vector<DensityOperator> omega;
  double delta = 0.0;

  int size() const { return static_cast<int>(p.size()); }

  /// Typical-set cap on the number of planted slots per string.
  int typ_zero_cap() const {
    return static_cast<int>(std::ceil((1.0 / delta) * std::log2(1.0 / delta)));
  }

  void validate() const {
    if (!(delta > 0.0 && delta < 1.0)) throw InvariantViolation("delta must be in (0,1)");
    if (p.size() < 2 || p.size() != psi.size() || p.size() != omega.size())
      throw InvariantViolation("instance lists must align and have >= 2 entries");
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!(p[i] > 0.0 && p[i] < 1.0 - delta))
        throw InvariantViolation("p_i must lie in (0, 1-delta)");
      require_same_dim(psi[i].dim(), omega[i].dim());
      require_same_dim(psi[i].dim(), psi[0].dim());
      const double cap = std::exp2(-dmax(psi[i], omega[i]));
      if (p[i] > cap + 1e-9)
        throw InvariantViolation("p_i exceeds 2^{-Dmax(Psi_i||omega_i)}");
      sum += p[i];
    }
    if (std::abs(sum - 1.0) > 1e-9) throw InvariantViolation("p must sum to 1");
  }
};

struct ConvexSplitResult {
  DensityOperator tau;
  std::vector<DensityOperator> tau_minus;   // tau^{(-i)}
  std::vector<double> normalization;        // N_i = Pr[Typ]
  std::vector<DensityOperator> psi_prime;   // omega_i = p_i Psi_i + (1-p_i) Psi'_i
};

namespace detail {

inline bool string_in_typ(std::uint32_t s, int n, int zero_cap) {
  int zeros = 0;
  for (int i = 0; i < n; ++i)
    if (!((s >> i) & 1u)) ++zeros;
  return zeros <= zero_cap;
}

} // namespace detail

/// Builds the decompositions, the truncated tensor mixtures tau^{(-i)}, and
/// tau = sum_i p_i Psi_i (slot i) otimes tau^{(-i)}. Enforced cap:
/// dim(C)^{|I|} <= 4096.
inline ConvexSplitResult convex_split_build(const ConvexSplitInstance& inst) {
  inst.validate();
  const int n = inst.size();
  const int dc = inst.psi[0].d();
  double total_dim = std::pow(static_cast<double>(dc), n);
  if (total_dim > 4096.0 + 0.5)
    throw InvariantViolation("tensor cap exceeded: dim(C)^{|I|} must be <= 4096");
  const int big = static_cast<int>(std::llround(total_dim));
  const int cap = inst.typ_zero_cap();

  // Psi'_i from omega_i = p_i Psi_i + (1-p_i) Psi'_i; PSD by feasibility
  std::vector<DensityOperator> psi_prime;
  psi_prime.reserve(n);
  for (int i = 0; i < n; ++i) {
    Matrix m = (inst.omega[i].matrix() - inst.p[i] * inst.psi[i].matrix()) /
               (1.0 - inst.p[i]);
    auto [vals, vecs] = hermitian_eig(m);
    Matrix clamped = vecs * clamp_spectrum(vals).asDiagonal() * vecs.adjoint();
    clamped /= clamped.trace().real();
    psi_prime.emplace_back(clamped, inst.psi[i].dim());
  }

  const HilbertDim big_dim = HilbertDim::single(big, "Cn");
  auto term_matrix = [&](int planted, std::uint32_t s_rest) {
    // full product over slots: planted slot carries Psi, the rest follow the
    // bits of s_rest (bit j of s_rest = slot j skipping the planted one;
    // bit 0 means Psi_j, bit 1 means Psi'_j)
    Matrix acc = Matrix::Identity(1, 1);
    int rest_pos = 0;
    for (int slot = 0; slot < n; ++slot) {
      const Matrix* factor;
      if (slot == planted) {
        factor = &inst.psi[slot].matrix();
      } else {
        const bool one = (s_rest >> rest_pos) & 1u;
        factor = one ? &psi_prime[slot].matrix() : &inst.psi[slot].matrix();
        ++rest_pos;
      }
      acc = kron(acc, *factor).eval();
    }
    return acc;
  };

  std::vector<DensityOperator> tau_minus;
  std::vector<double> norms(n, 0.0);
  Matrix tau_m = Matrix::Zero(big, big);
  const std::uint32_t rest_count = 1u << (n - 1);
  for (int i = 0; i < n; ++i) {
    Matrix acc_i = Matrix::Zero(big, big);
    double ni = 0.0;
    for (std::uint32_t s = 0; s < rest_count; ++s) {
      if (!detail::string_in_typ(s, n - 1, cap)) continue;
      double w = 1.0;
      int rest_pos = 0;
      for (int slot = 0; slot < n; ++slot) {
        if (slot == i) continue;
        const bool one = (s >> rest_pos) & 1u;
        w *= one ? (1.0 - inst.p[slot]) : inst.p[slot];
        ++rest_pos;
      }
      ni += w;
      acc_i += w * term_matrix(i, s);
    }
    norms[i] = ni;
    acc_i /= ni;
    tau_m += inst.p[i] * acc_i;
    // tau^{(-i)} as a state on the other n-1 slots
    // (recompute without the planted factor)
    const int small = big / dc;
    Matrix side = Matrix::Zero(small, small);
    for (std::uint32_t s = 0; s < rest_count; ++s) {
      if (!detail::string_in_typ(s, n - 1, cap)) continue;
      double w = 1.0;
      Matrix prod = Matrix::Identity(1, 1);
      int rest_pos = 0;
      for (int slot = 0; slot < n; ++slot) {
        if (slot == i) continue;
        const bool one = (s >> rest_pos) & 1u;
        w *= one ? (1.0 - inst.p[slot]) : inst.p[slot];
        prod = kron(prod, one ? psi_prime[slot].matrix() : inst.psi[slot].matrix()).eval();
        ++rest_pos;
      }
      side += (w / ni) * prod;
    }
    tau_minus.emplace_back(side, HilbertDim::single(small, "Crest"));
  }

  return {DensityOperator(tau_m, big_dim), std::move(tau_minus), std::move(norms),
          std::move(psi_prime)};
}

/// Max-relative entropy of tau against the full product of side states; the
/// construction promises <= 2 log2(1/delta).
inline double convex_split_dmax_certificate(const ConvexSplitInstance& inst,
                                            const ConvexSplitResult& result) {
  Matrix prod = Matrix::Identity(1, 1);
  for (const auto& w : inst.omega) prod = kron(prod, w.matrix()).eval();
  DensityOperator product_state(prod, result.tau.dim());
  return dmax(result.tau, product_state);
}

/// Coefficients q(s) of tau in the product decomposition, computed from the
/// construction; the certificate is q(s) <= p^s / delta^2 pointwise.
struct MixtureCoefficient {
  std::uint32_t s = 0;
  double q = 0.0;
  double p_s = 0.0;
};

inline std::vector<MixtureCoefficient> convex_split_coefficients(
    const ConvexSplitInstance& inst, const ConvexSplitResult& result) {
  const int n = inst.size();
  const int cap = inst.typ_zero_cap();
  std::vector<MixtureCoefficient> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    MixtureCoefficient mc;
    mc.s = s;
    mc.p_s = 1.0;
    for (int i = 0; i < n; ++i)
      mc.p_s *= ((s >> i) & 1u) ? (1.0 - inst.p[i]) : inst.p[i];
    double q = 0.0;
    for (int i = 0; i < n; ++i) {
      if ((s >> i) & 1u) continue;  // slot i must carry Psi_i
      // string restricted to the other slots, re-packed
      std::uint32_t rest = 0;
      int rest_pos = 0;
      for (int slot = 0; slot < n; ++slot) {
        if (slot == i) continue;
        if ((s >> slot) & 1u) rest |= (1u << rest_pos);
        ++rest_pos;
      }
      if (!detail::string_in_typ(rest, n - 1, cap)) continue;
      double w = inst.p[i] / result.normalization[i];
      for (int slot = 0; slot < n; ++slot) {
        if (slot == i) continue;
        w *= ((s >> slot) & 1u) ? (1.0 - inst.p[slot]) : inst.p[slot];
      }
      q += w;
    }
    mc.q = q;
    out.push_back(mc);
  }
  return out;
}

} // namespace oqc::splitsim

#endif

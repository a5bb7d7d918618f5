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
#ifndef OQCLAB_QCORE_PARTIAL_TRACE_HPP
#define OQCLAB_QCORE_PARTIAL_TRACE_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "oqclab/qcore/types.hpp"

namespace oqc {

namespace detail {

// Row-major strides: last register varies fastest.
inline std::vector<int> strides(const std::vector<RegisterSpec>& regs) {
  std::vector<int> s(regs.size());
  int acc = 1;
  for (int i = static_cast<int>(regs.size()) - 1; i >= 0; --i) {
    s[i] = acc;
    acc *= regs[i].dim;
  }
  return s;
}

} // namespace detail

/// Partial trace keeping the listed registers (in their original order).
/// Works on raw matrices so pure-state marginals can be built without
/// materializing the full density operator first.
inline Matrix partial_trace_matrix(const Matrix& m, const HilbertDim& dim,
                                   const std::vector<std::string>& keep) {
  const auto& regs = dim.registers();
  std::vector<bool> kept(regs.size(), false);
  for (const auto& label : keep) kept[dim.index_of(label)] = true;

  std::vector<int> keep_idx, trace_idx;
  for (std::size_t i = 0; i < regs.size(); ++i)
    (kept[i] ? keep_idx : trace_idx).push_back(static_cast<int>(i));

  const auto stride = detail::strides(regs);
  int dk = 1, dt = 1;
  for (int i : keep_idx) dk *= regs[i].dim;
  for (int i : trace_idx) dt *= regs[i].dim;

  // flat offsets of every kept / traced multi-index
  std::vector<int> keep_off(dk, 0), trace_off(dt, 0);
  {
    for (int v = 0; v < dk; ++v) {
      int rem = v, off = 0;
      for (int pos = static_cast<int>(keep_idx.size()) - 1; pos >= 0; --pos) {
        const int reg = keep_idx[pos];
        off += (rem % regs[reg].dim) * stride[reg];
        rem /= regs[reg].dim;
      }
      keep_off[v] = off;
    }
    for (int v = 0; v < dt; ++v) {
      int rem = v, off = 0;
      for (int pos = static_cast<int>(trace_idx.size()) - 1; pos >= 0; --pos) {
        const int reg = trace_idx[pos];
        off += (rem % regs[reg].dim) * stride[reg];
        rem /= regs[reg].dim;
      }
      trace_off[v] = off;
    }
  }

  Matrix out = Matrix::Zero(dk, dk);
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j) {
      Complex acc(0, 0);
      for (int t = 0; t < dt; ++t)
        acc += m(keep_off[i] + trace_off[t], keep_off[j] + trace_off[t]);
      out(i, j) = acc;
    }
  return out;
}

inline HilbertDim subdim(const HilbertDim& dim, const std::vector<std::string>& keep) {
  std::vector<RegisterSpec> kept;
  for (const auto& r : dim.registers())
    if (std::find(keep.begin(), keep.end(), r.label) != keep.end()) kept.push_back(r);
  if (kept.size() != keep.size()) throw RegisterError("unknown register label in keep list");
  return HilbertDim(kept);
}

inline DensityOperator partial_trace(const DensityOperator& rho,
                                     const std::vector<std::string>& keep) {
  return DensityOperator(partial_trace_matrix(rho.matrix(), rho.dim(), keep),
                         subdim(rho.dim(), keep));
}

/// Marginal of a pure state on the kept registers.
inline DensityOperator marginal(const PureState& psi, const std::vector<std::string>& keep) {
  const HilbertDim out_dim = subdim(psi.dim(), keep);
  // group amplitudes as (kept, traced) and contract; avoids the full d x d matrix
  const auto& regs = psi.dim().registers();
  std::vector<bool> kept_flag(regs.size(), false);
  for (const auto& label : keep) kept_flag[psi.dim().index_of(label)] = true;
  std::vector<int> keep_idx, trace_idx;
  for (std::size_t i = 0; i < regs.size(); ++i)
    (kept_flag[i] ? keep_idx : trace_idx).push_back(static_cast<int>(i));
  const auto stride = detail::strides(regs);
  int dk = 1, dt = 1;
  for (int i : keep_idx) dk *= regs[i].dim;
  for (int i : trace_idx) dt *= regs[i].dim;

  Matrix grouped(dk, dt);
  for (int i = 0; i < dk; ++i) {
    int rem = i, off_k = 0;
    for (int pos = static_cast<int>(keep_idx.size()) - 1; pos >= 0; --pos) {
      const int reg = keep_idx[pos];
      off_k += (rem % regs[reg].dim) * stride[reg];
      rem /= regs[reg].dim;
    }
    for (int t = 0; t < dt; ++t) {
      int remt = t, off_t = 0;
      for (int pos = static_cast<int>(trace_idx.size()) - 1; pos >= 0; --pos) {
        const int reg = trace_idx[pos];
        off_t += (remt % regs[reg].dim) * stride[reg];
        remt /= regs[reg].dim;
      }
      grouped(i, t) = psi.vector()(off_k + off_t);
    }
  }
  return DensityOperator(grouped * grouped.adjoint(), out_dim);
}

} // namespace oqc

#endif

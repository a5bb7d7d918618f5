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
#ifndef OQCLAB_CHANSIM_CHANSIM_HPP
#define OQCLAB_CHANSIM_CHANSIM_HPP

// Classical-quantum channel calculators: entanglement-assisted capacity of a
// cq channel, the one-shot capacity ceiling, and the simulation-cost floors.
// The floors are evaluated symbolically in floating point, so astronomically
// large d never gets materialized.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "oqclab/qcore/linalg.hpp"
#include "oqclab/qcore/measures.hpp"
#include "oqclab/qcore/types.hpp"

namespace oqc::chansim {

struct CqChannel {
  std::vector<PureState> outputs;  // |Psi_j>, one per classical input

  int input_size() const { return static_cast<int>(outputs.size()); }

  void validate() const {
    if (outputs.empty()) throw InvariantViolation("channel needs >= 1 output state");
    for (const auto& s : outputs) require_same_dim(s.dim(), outputs.front().dim());
  }

  DensityOperator output_mixture(const std::vector<double>& weights) const {
    validate();
    const int d = outputs.front().d();
    Matrix m = Matrix::Zero(d, d);
    for (std::size_t j = 0; j < outputs.size(); ++j)
      m += weights[j] * (outputs[j].vector() * outputs[j].vector().adjoint());
    return DensityOperator(m, outputs.front().dim());
  }
};

/// Entanglement-assisted classical capacity of a cq channel: entropy of the
/// uniform output mixture (the maximizer, by concavity).
inline double cq_capacity(const CqChannel& ch) {
  ch.validate();
  const double w = 1.0 / static_cast<double>(ch.input_size());
  return von_neumann_entropy(
      ch.output_mixture(std::vector<double>(ch.outputs.size(), w)));
}

/// Capacity of the same channel at a non-uniform input distribution; probe
/// for the concavity argument.
inline double cq_capacity_at(const CqChannel& ch, const std::vector<double>& weights) {
  return von_neumann_entropy(ch.output_mixture(weights));
}

/// One-shot eta-error capacity ceiling (C + H(eta)) / (1 - eta).
inline double one_shot_capacity_upper(double capacity, double eta) {
  if (!(eta > 0.0 && eta < 1.0)) throw InvariantViolation("eta must be in (0,1)");
  return (capacity + binary_entropy(eta)) / (1.0 - eta);
}

enum class SimMode { oneway, rounds, interactive };

struct SimLowerResult {
  double value = 0.0;
  double log2_d_delta_over_128 = 0.0;
  bool gate_ok = false;          // the mode's stated eta ceiling
  double gate_threshold = 0.0;   // (delta/8)^2 or (delta/8)^4
  double alt_gate_threshold = 0.0;  // (delta/10)^4, reported for interactive
};

/// Simulation-cost floors for the hard-ensemble channel, floored at 0. The
/// eta gates: one-way and bounded-round need eta < (delta/8)^2, interactive
/// eta < (delta/8)^4 (the sharper (delta/10)^4 variant is reported alongside).
/// The closed form is evaluated either way; gate_ok records admissibility.
inline SimLowerResult simulation_cost_lower(double d, double delta, double eta,
                                            SimMode mode, double r = 2.0) {
  if (!(delta > 0.0 && delta < 1.0)) throw InvariantViolation("delta must be in (0,1)");
  if (!(eta > 0.0 && eta < 1.0)) throw InvariantViolation("eta must be in (0,1)");
  SimLowerResult out;
  const double core = std::log2(d) + std::log2(delta) - 7.0;  // log2(d delta / 128)
  out.log2_d_delta_over_128 = core;
  const double gate2 = std::pow(delta / 8.0, 2.0);
  const double gate4 = std::pow(delta / 8.0, 4.0);
  switch (mode) {
    case SimMode::oneway:
      out.gate_threshold = gate2;
      out.gate_ok = eta < gate2;
      out.value = std::pow(1.0 - std::sqrt(eta), 2.0) * core;
      break;
    case SimMode::rounds:
      if (!(r > 1.0)) throw InvariantViolation("rounds mode needs r > 1");
      out.gate_threshold = gate2;
      out.gate_ok = eta < gate2;
      out.value = core / (20.0 * std::log2(r));
      break;
    case SimMode::interactive:
      out.gate_threshold = gate4;
      out.alt_gate_threshold = std::pow(delta / 10.0, 4.0);
      out.gate_ok = eta < gate4;
      out.value = core / (30.0 * (std::log2(std::log2(d)) - 2.0 * std::log2(eta)));
      break;
  }
  out.value = std::max(0.0, out.value);
  return out;
}

struct CrossoverResult {
  bool found = false;
  double log2_d_star = 0.0;
  double sim_lower = 0.0;
  double capacity_upper = 0.0;
};

/// Smallest d = 2^L (L scanned in quarter steps up to 60) where, at
/// delta = 1/log2 d and eta = (delta/8)^2 / 2, the one-way simulation floor
/// exceeds the one-shot capacity ceiling of the hard-ensemble channel.
inline CrossoverResult separation_crossover(double max_log2_d = 60.0) {
  CrossoverResult out;
  for (double l = 2.0; l <= max_log2_d; l += 0.25) {
    const double delta = 1.0 / l;
    const double eta = 0.5 * std::pow(delta / 8.0, 2.0);
    const double core = l + std::log2(delta) - 7.0;
    if (core <= 0.0) continue;
    const double sim = std::pow(1.0 - std::sqrt(eta), 2.0) * core;
    const double cap = delta * l + binary_entropy(delta) + 2.0;
    const double cap_upper = (cap + binary_entropy(eta)) / (1.0 - eta);
    if (sim > cap_upper) {
      out.found = true;
      out.log2_d_star = l;
      out.sim_lower = sim;
      out.capacity_upper = cap_upper;
      return out;
    }
  }
  return out;
}

} // namespace oqc::chansim

#endif

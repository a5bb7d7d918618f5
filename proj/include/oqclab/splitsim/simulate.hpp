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
#ifndef OQCLAB_SPLITSIM_SIMULATE_HPP
#define OQCLAB_SPLITSIM_SIMULATE_HPP

// Message-level Monte Carlo of the one-way splitting protocol. The classical
// message distribution is fully determined by (solution, delta); the output
// state error enters through the analytic bound, so no purification registers
// are materialized.

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "oqclab/codec/codec.hpp"
#include "oqclab/qcore/random.hpp"
#include "oqclab/splitsim/feasible.hpp"

namespace oqc::splitsim {

struct CostRecord {
  int x = 0;
  char branch = 'G';      // G: rejection-sampling branch, B: high-probability branch
  std::uint64_t k = 0;    // geometric index (G only)
  Tuple tuple;
  std::uint32_t flag_bits = 1;
  std::uint32_t k_bits = 0;
  std::uint32_t tuple_bits = 0;

  std::uint64_t total_bits() const { return flag_bits + k_bits + tuple_bits; }
};

struct SimulationResult {
  double mean_cost = 0.0;
  double stderr_cost = 0.0;
  double analytic_error_bound = 0.0;
  std::uint64_t trials = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;  // total bits -> count
  std::vector<CostRecord> records;                   // filled only on request
};

namespace detail {

struct PerInput {
  bool high_prob = false;  // some p(x, t) >= 1 - delta
  int t_star = -1;         // that tuple (largest p)
  std::vector<int> entry_idx;
  std::vector<double> cum_p;
};

inline std::vector<PerInput> index_solution(const Ensemble& ens, const FeasibleSolution& sol,
                                            double delta) {
  std::vector<PerInput> per(ens.size());
  for (std::size_t e = 0; e < sol.entries.size(); ++e) {
    const auto& entry = sol.entries[e];
    per[entry.x].entry_idx.push_back(static_cast<int>(e));
  }
  for (std::size_t x = 0; x < per.size(); ++x) {
    auto& px = per[x];
    double best = 0.0;
    double acc = 0.0;
    for (int ei : px.entry_idx) {
      const auto& entry = sol.entries[ei];
      acc += entry.p;
      px.cum_p.push_back(acc);
      if (entry.p >= 1.0 - delta && entry.p > best) {
        best = entry.p;
        px.high_prob = true;
        px.t_star = ei;
      }
    }
  }
  return per;
}

inline std::uint64_t sample_geometric(double q, Rng& rng) {
  // inverse CDF on the seeded uniform stream
  const double u = rng.uniform_pos();
  const double k = std::floor(std::log(u) / std::log1p(-q));
  return 1 + static_cast<std::uint64_t>(std::max(0.0, k));
}

} // namespace detail

/// Error bound carried by the achievability proof: the budget sum plus
/// 2 sqrt(delta) + delta.
inline double analytic_error_bound(const Ensemble& ens, const FeasibleSolution& sol,
                                   double delta) {
  double budget = 0.0;
  for (const auto& e : sol.entries)
    budget += ens.items()[e.x].p * e.p * e.eps * e.eps;
  return budget + 2.0 * std::sqrt(delta) + delta;
}

inline SimulationResult simulate_one_way_protocol(const Ensemble& ens,
                                                  const FeasibleSolution& sol, double delta,
                                                  std::uint64_t trials, std::uint64_t seed,
                                                  bool keep_records = false) {
  auto valid = validate_feasible_solution(ens, sol);
  if (!valid.ok)
    throw InvariantViolation("invalid feasible solution: " + valid.violations.front());
  if (!(delta > 0.0 && delta < 1.0)) throw InvariantViolation("delta must be in (0,1)");

  const auto per = detail::index_solution(ens, sol, delta);
  const codec::GeometricCodec geom(delta);
  const Tuple all_ones(static_cast<std::size_t>(sol.rounds), 1u);

  std::vector<double> cum_x;
  {
    double acc = 0.0;
    for (const auto& it : ens.items()) {
      acc += it.p;
      cum_x.push_back(acc);
    }
  }

  SimulationResult res;
  res.trials = trials;
  res.analytic_error_bound = analytic_error_bound(ens, sol, delta);
  long double sum = 0.0L, sum_sq = 0.0L;
  Rng rng = Rng::substream(seed, 0x73696d75ULL);

  for (std::uint64_t t = 0; t < trials; ++t) {
    const double ux = rng.uniform();
    int x = 0;
    while (x + 1 < static_cast<int>(cum_x.size()) && ux >= cum_x[x]) ++x;

    CostRecord rec;
    rec.x = x;
    const auto& px = per[x];
    if (px.high_prob) {
      rec.branch = 'B';
      const auto& star = sol.entries[px.t_star];
      const double u = rng.uniform();
      rec.tuple = (u < star.p) ? sol.tuples[star.t] : all_ones;
    } else {
      rec.branch = 'G';
      rec.k = detail::sample_geometric(geom.success_prob(), rng);
      rec.k_bits = static_cast<std::uint32_t>(geom.length(rec.k));
      const double u = rng.uniform();
      int pick = 0;
      while (pick + 1 < static_cast<int>(px.cum_p.size()) && u >= px.cum_p[pick]) ++pick;
      rec.tuple = sol.tuples[sol.entries[px.entry_idx[pick]].t];
    }
    rec.tuple_bits = static_cast<std::uint32_t>(codec::tuple_length(rec.tuple));
    const std::uint64_t bits = rec.total_bits();
    sum += static_cast<long double>(bits);
    sum_sq += static_cast<long double>(bits) * static_cast<long double>(bits);
    ++res.histogram[bits];
    if (keep_records) res.records.push_back(std::move(rec));
  }

  const double n = static_cast<double>(trials);
  res.mean_cost = static_cast<double>(sum / n);
  const double var =
      std::max(0.0L, (sum_sq - sum * sum / static_cast<long double>(n)) /
                         static_cast<long double>(n - 1));
  res.stderr_cost = std::sqrt(static_cast<double>(var) / n);
  return res;
}

/// Exact expected cost by direct summation over (x, tuple) and the geometric
/// series; the Monte Carlo mean must sit within a few standard errors.
inline double exact_expected_cost(const Ensemble& ens, const FeasibleSolution& sol,
                                  double delta) {
  const auto per = detail::index_solution(ens, sol, delta);
  const codec::GeometricCodec geom(delta);
  const Tuple all_ones(static_cast<std::size_t>(sol.rounds), 1u);
  const double e_geom = geom.expected_length();
  double total = 0.0;
  for (std::size_t x = 0; x < ens.size(); ++x) {
    const double px = ens.items()[x].p;
    const auto& info = per[x];
    double cost_x = 1.0;  // branch flag
    if (info.high_prob) {
      const auto& star = sol.entries[info.t_star];
      cost_x += star.p * static_cast<double>(codec::tuple_length(sol.tuples[star.t])) +
                (1.0 - star.p) * static_cast<double>(codec::tuple_length(all_ones));
    } else {
      cost_x += e_geom;
      for (int ei : info.entry_idx) {
        const auto& entry = sol.entries[ei];
        cost_x += entry.p * static_cast<double>(codec::tuple_length(sol.tuples[entry.t]));
      }
    }
    total += px * cost_x;
  }
  return total;
}

/// Expected-cost budget of the one-way protocol:
/// objective + 2r log2(max(objective, 2)) + 4r + 2 log2(4/delta).
inline double protocol_cost_budget(double objective, int rounds, double delta) {
  return objective +
         2.0 * rounds * std::log2(std::max(objective, 2.0)) + 4.0 * rounds +
         2.0 * std::log2(4.0 / delta);
}

} // namespace oqc::splitsim

#endif

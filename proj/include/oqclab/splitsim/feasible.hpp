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
#ifndef OQCLAB_SPLITSIM_FEASIBLE_HPP
#define OQCLAB_SPLITSIM_FEASIBLE_HPP

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "oqclab/codec/codec.hpp"
#include "oqclab/qcore/json_io.hpp"
#include "oqclab/qcore/measures.hpp"
#include "oqclab/qcore/partial_trace.hpp"
#include "oqclab/qcore/types.hpp"

namespace oqc::splitsim {

using codec::Tuple;

/// Witnessed feasible point of the expected-cost optimization: per message
/// tuple a side state omega on C, and per (input, tuple) a probability, an
/// error budget entry, and an explicit smoothed state certifying the
/// max-relative-entropy constraint.
struct FeasibleSolution {
  struct Entry {
    int x = 0;          // ensemble index
    int t = 0;          // tuple index
    double p = 0.0;
    double eps = 0.0;
    DensityOperator witness;
  };

  int rounds = 1;
  double eta = 0.0;
  std::vector<Tuple> tuples;
  std::vector<DensityOperator> omega;  // aligned with tuples
  std::vector<Entry> entries;

  double log2_product(int t) const {
    double acc = 0.0;
    for (auto v : tuples[t]) acc += std::log2(static_cast<double>(v));
    return acc;
  }
};

struct ValidationResult {
  bool ok = true;
  double objective = 0.0;
  std::vector<std::string> violations;

  void fail(std::string why) {
    ok = false;
    violations.push_back(std::move(why));
  }
};

/// C-marginal of ensemble member x; the ensemble lives on registers A' C.
inline DensityOperator c_marginal(const Ensemble& ens, int x) {
  return marginal(ens.items()[x].psi, {"C"});
}

inline ValidationResult validate_feasible_solution(const Ensemble& ens,
                                                   const FeasibleSolution& sol) {
  ValidationResult res;
  const int nx = static_cast<int>(ens.size());
  if (sol.rounds < 1) res.fail("rounds must be >= 1");
  for (const auto& t : sol.tuples) {
    if (static_cast<int>(t.size()) != sol.rounds) res.fail("tuple arity != rounds");
    for (auto v : t)
      if (v < 1) res.fail("tuple entries must be positive");
  }
  if (sol.tuples.size() != sol.omega.size()) {
    res.fail("omega list does not align with tuples");
    return res;
  }

  std::vector<DensityOperator> psi_c;
  psi_c.reserve(nx);
  for (int x = 0; x < nx; ++x) psi_c.push_back(c_marginal(ens, x));

  std::vector<double> per_x_sum(nx, 0.0);
  double err_budget = 0.0;
  double objective = 0.0;
  for (const auto& e : sol.entries) {
    if (e.x < 0 || e.x >= nx || e.t < 0 || e.t >= static_cast<int>(sol.tuples.size())) {
      res.fail("entry indices out of range");
      continue;
    }
    if (e.p < -1e-12 || e.p > 1.0 + 1e-9) res.fail("entry probability out of [0,1]");
    if (e.eps < 0.0 || e.eps > 1.0) res.fail("entry eps out of [0,1]");
    per_x_sum[e.x] += e.p;
    const double px = ens.items()[e.x].p;
    err_budget += px * e.p * e.eps * e.eps;
    objective += px * e.p * sol.log2_product(e.t);
    if (e.p > 0.0) {
      const double f = fidelity(e.witness, psi_c[e.x]);
      if (f < 1.0 - e.eps - 1e-9)
        res.fail("witness fidelity below 1 - eps at (x=" + std::to_string(e.x) +
                 ", t=" + std::to_string(e.t) + ")");
      const double cap = std::exp2(-dmax(e.witness, sol.omega[e.t]));
      if (e.p > cap + 1e-9)
        res.fail("p exceeds 2^{-Dmax(witness||omega)} at (x=" + std::to_string(e.x) +
                 ", t=" + std::to_string(e.t) + ")");
    }
  }
  for (int x = 0; x < nx; ++x)
    if (std::abs(per_x_sum[x] - 1.0) > 1e-9)
      res.fail("tuple probabilities for x=" + std::to_string(x) + " sum to " +
               std::to_string(per_x_sum[x]));
  if (err_budget > sol.eta * sol.eta + 1e-9)
    res.fail("error budget " + std::to_string(err_budget) + " exceeds eta^2");
  res.objective = objective;
  return res;
}

/// Identity-coding baseline: input x maps to tuple (rank(x), 1, ..., 1) with
/// omega equal to the state's own C-marginal, so every constraint is tight
/// at eps = 0.
inline FeasibleSolution baseline_solution(const Ensemble& ens, int rounds = 1,
                                          double eta = 0.5) {
  FeasibleSolution sol;
  sol.rounds = rounds;
  sol.eta = eta;
  for (int x = 0; x < static_cast<int>(ens.size()); ++x) {
    Tuple t(static_cast<std::size_t>(rounds), 1u);
    t[0] = static_cast<std::uint32_t>(x + 1);
    sol.tuples.push_back(t);
    sol.omega.push_back(c_marginal(ens, x));
    sol.entries.push_back({x, x, 1.0, 0.0, c_marginal(ens, x)});
  }
  return sol;
}

// --- JSON round trip (tuples as integer arrays; operators in the shared
// state schema) ---

inline Json to_json(const FeasibleSolution& sol) {
  Json tuples = Json::array();
  for (const auto& t : sol.tuples) tuples.push_back(t);
  Json omegas = Json::array();
  for (const auto& w : sol.omega) omegas.push_back(oqc::to_json(w));
  Json entries = Json::array();
  for (const auto& e : sol.entries)
    entries.push_back({{"x", e.x},
                       {"t", e.t},
                       {"p", e.p},
                       {"eps", e.eps},
                       {"witness", oqc::to_json(e.witness)}});
  return Json{{"rounds", sol.rounds},
              {"eta", sol.eta},
              {"tuples", tuples},
              {"omega", omegas},
              {"entries", entries}};
}

inline FeasibleSolution feasible_from_json(const Json& j) {
  FeasibleSolution sol;
  sol.rounds = j.at("rounds").get<int>();
  sol.eta = j.at("eta").get<double>();
  for (const auto& t : j.at("tuples")) sol.tuples.push_back(t.get<Tuple>());
  for (const auto& w : j.at("omega")) sol.omega.push_back(density_from_json(w));
  for (const auto& e : j.at("entries"))
    sol.entries.push_back({e.at("x").get<int>(), e.at("t").get<int>(),
                           e.at("p").get<double>(), e.at("eps").get<double>(),
                           density_from_json(e.at("witness"))});
  return sol;
}

} // namespace oqc::splitsim

#endif

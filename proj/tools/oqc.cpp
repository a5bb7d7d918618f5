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

// Command-line front end tying the modules into reproducible runs. Every
// artifact carries {inputs, seed, version, results, timestamp}; identical
// (config, seed) produce identical payloads apart from the timestamp.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oqclab/chansim/chansim.hpp"
#include "oqclab/codec/codec.hpp"
#include "oqclab/hardens/hardens.hpp"
#include "oqclab/qcore/json_io.hpp"
#include "oqclab/qcore/measures.hpp"
#include "oqclab/qcore/partial_trace.hpp"
#include "oqclab/redist/redist.hpp"
#include "oqclab/smooth/smooth.hpp"
#include "oqclab/splitsim/combinatorics.hpp"
#include "oqclab/splitsim/convex_split.hpp"
#include "oqclab/splitsim/simulate.hpp"
#include "oqclab/verify/acceptance.hpp"
#include "oqclab/version.hpp"

namespace {

using oqc::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitProperty = 3;

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

struct Output {
  Json inputs = Json::object();
  Json results = Json::object();
  std::uint64_t seed = 0;
  std::string out_path;  // empty: stdout

  void emit() const {
    Json artifact{{"inputs", inputs},
                  {"results", results},
                  {"seed", seed},
                  {"timestamp", iso_timestamp()},
                  {"version", oqc::kVersion}};
    if (out_path.empty())
      std::cout << artifact.dump(2) << "\n";
    else
      oqc::save_json_file(out_path, artifact);
  }
};

std::vector<std::string> split_labels(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

Json histogram_json(const std::map<std::uint64_t, std::uint64_t>& h) {
  Json out = Json::object();
  for (const auto& [bits, count] : h) out[std::to_string(bits)] = count;
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"oqclab: one-shot quantum communication laboratory"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string out_path, format = "json";
  app.add_option("--seed", seed, "base seed")->envname("OQC_SEED");
  app.add_option("--out", out_path, "output artifact path (default stdout)");
  app.add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  // --- ensemble ---
  auto* ensemble = app.add_subcommand("ensemble", "hard-ensemble construction");
  auto* ens_build = ensemble->add_subcommand("build", "sample and certify a hard ensemble");
  int eb_d = 8;
  double eb_delta = 0.25, eb_eps = 0.5;
  std::uint64_t eb_m = 4096;
  int eb_retries = 8;
  std::string eb_ens_out = "ensemble.json", eb_report_out;
  ens_build->add_option("--d", eb_d, "dimension (> 4)");
  ens_build->add_option("--delta", eb_delta, "anchor weight in (0, 1/4]");
  ens_build->add_option("--m", eb_m, "sample count");
  ens_build->add_option("--eps", eb_eps, "concentration tolerance");
  ens_build->add_option("--retries", eb_retries, "batch retries");
  ens_build->add_option("--ensemble-out", eb_ens_out, "ensemble file");
  ens_build->add_option("--report-out", eb_report_out, "report file (defaults to --out)");

  auto* ens_check = ensemble->add_subcommand("check", "re-run concentration checks");
  std::string ec_in;
  double ec_delta = 0.25, ec_eps = 0.5;
  ens_check->add_option("--in", ec_in, "ensemble file")->required();
  ens_check->add_option("--delta", ec_delta, "anchor weight");
  ens_check->add_option("--eps", ec_eps, "tolerance");

  // --- measures ---
  auto* measures = app.add_subcommand("measures", "information measures on JSON states");
  std::string m_op, m_a, m_b, m_parts_a = "A", m_parts_b = "B", m_parts_c = "C", m_cut = "A";
  measures->add_option("op", m_op, "dmax|entropy|fidelity|cqmi|mutual")->required();
  measures->add_option("--a", m_a, "first state file")->required();
  measures->add_option("--b", m_b, "second state file");
  measures->add_option("--cut", m_cut, "register cut for mutual information");
  measures->add_option("--parts-a", m_parts_a, "CQMI side A labels (comma separated)");
  measures->add_option("--parts-b", m_parts_b, "CQMI side B labels");
  measures->add_option("--parts-c", m_parts_c, "CQMI side C labels");

  // --- smooth ---
  auto* smooth_cmd = app.add_subcommand("smooth", "smoothed max-relative-entropy bounds");
  auto* sm_overlap = smooth_cmd->add_subcommand("overlap", "closed-form smoothed overlap");
  std::string so_state, so_omega;
  double so_k = 2.0, so_nu = 0.1;
  sm_overlap->add_option("--state", so_state, "pure state file")->required();
  sm_overlap->add_option("--omega", so_omega, "side state file")->required();
  sm_overlap->add_option("--k", so_k, "split threshold (> 1)");
  sm_overlap->add_option("--nu", so_nu, "smoothing radius");

  auto* sm_qstar = smooth_cmd->add_subcommand("qstar", "heuristic q* estimate");
  std::string sq_ens;
  double sq_nu = 0.05;
  int sq_candidates = 200;
  sm_qstar->add_option("--ens", sq_ens, "ensemble file")->required();
  sm_qstar->add_option("--nu", sq_nu, "smoothing radius");
  sm_qstar->add_option("--candidates", sq_candidates, "random side-state candidates");

  auto* sm_avg = smooth_cmd->add_subcommand("avg-bound", "ensemble-average bound");
  std::string sa_ens, sa_omega;
  double sa_nu = 0.01, sa_delta = 0.25;
  sm_avg->add_option("--ens", sa_ens, "ensemble file")->required();
  sm_avg->add_option("--omega", sa_omega, "side state file")->required();
  sm_avg->add_option("--nu", sa_nu, "smoothing radius (< delta/8)");
  sm_avg->add_option("--delta", sa_delta, "ensemble anchor weight");

  // --- split ---
  auto* split = app.add_subcommand("split", "state-splitting cost machinery");
  auto* sp_validate = split->add_subcommand("validate", "check a feasible solution");
  std::string sv_ens, sv_sol;
  sp_validate->add_option("--ens", sv_ens, "ensemble file (registers Ap, C)")->required();
  sp_validate->add_option("--sol", sv_sol, "feasible solution file")->required();

  auto* sp_sim = split->add_subcommand("simulate", "one-way protocol Monte Carlo");
  std::string ss_ens, ss_sol, ss_transcript, ss_records;
  double ss_delta = 0.25;
  std::uint64_t ss_trials = 100000;
  sp_sim->add_option("--ens", ss_ens, "ensemble file")->required();
  sp_sim->add_option("--sol", ss_sol, "feasible solution file (default: baseline)");
  sp_sim->add_option("--delta", ss_delta, "rejection-sampling delta");
  sp_sim->add_option("--trials", ss_trials, "Monte Carlo trials");
  sp_sim->add_option("--dump-transcript", ss_transcript, "binary transcript path");
  sp_sim->add_option("--records", ss_records, "per-trial CSV path");

  auto* sp_convex = split->add_subcommand("convex-split", "convex-split certificates");
  std::string sc_inst;
  sp_convex->add_option("--inst", sc_inst, "instance file {delta, p[], psi[], omega[]}")
      ->required();

  auto* sp_comb = split->add_subcommand("combinatorics", "tuple-count calculators");
  std::uint64_t cb_k = 0;
  std::uint32_t cb_r = 2;
  double cb_minexp_b = 0.0;
  sp_comb->add_option("--k", cb_k, "ordered factorizations of k");
  sp_comb->add_option("--r", cb_r, "tuple arity");
  sp_comb->add_option("--minexp-b", cb_minexp_b, "min expected log-product at budget b");

  // --- redist ---
  auto* redist_cmd = app.add_subcommand("redist", "state redistribution laboratory");
  auto* rd_build = redist_cmd->add_subcommand("build", "build a state pair");
  int rb_d = 2, rb_da = 2;
  double rb_beta = 4.0;
  std::string rb_mode = "fixed";
  rd_build->add_option("--d", rb_d, "|R'| = |B| = |C|");
  rd_build->add_option("--da", rb_da, "|R_A| = |A|");
  rd_build->add_option("--beta", rb_beta, "spectrum flatness (>= 1)");
  rd_build->add_option("--mode", rb_mode, "fixed|random C/B bases")
      ->check(CLI::IsMember({"fixed", "random"}));

  auto* rd_verify = redist_cmd->add_subcommand("verify", "rescaling identity deviation");
  std::string rv_in;
  rd_verify->add_option("--in", rv_in, "pair file from redist build")->required();

  auto* rd_quant = redist_cmd->add_subcommand("quantities", "information quantities");
  std::string rq_in;
  rd_quant->add_option("--in", rq_in, "pair file from redist build")->required();

  auto* rd_params = redist_cmd->add_subcommand("params", "separation parameter arithmetic");
  double rp_p = 0.5, rp_eps = 1e-16;
  rd_params->add_option("--p", rp_p, "exponent in (0,1)");
  rd_params->add_option("--eps", rp_eps, "target error");

  // --- channel ---
  auto* channel = app.add_subcommand("channel", "cq channel calculators");
  auto* ch_cap = channel->add_subcommand("capacity", "uniform-mixture capacity");
  std::string cc_ch;
  ch_cap->add_option("--ch", cc_ch, "channel file (ensemble schema; outputs)")->required();

  auto* ch_upper = channel->add_subcommand("upper", "one-shot capacity ceiling");
  double cu_capacity = 1.0, cu_eta = 0.01;
  ch_upper->add_option("--capacity", cu_capacity, "capacity C");
  ch_upper->add_option("--eta", cu_eta, "error");

  auto* ch_lower = channel->add_subcommand("sim-lower", "simulation-cost floor");
  double cl_d = 0.0, cl_delta = 0.1, cl_eta = 1e-4, cl_r = 2.0;
  std::string cl_mode = "oneway";
  ch_lower->add_option("--d", cl_d, "output dimension")->required();
  ch_lower->add_option("--delta", cl_delta, "anchor weight");
  ch_lower->add_option("--eta", cl_eta, "simulation error");
  ch_lower->add_option("--mode", cl_mode, "oneway|rounds|interactive")
      ->check(CLI::IsMember({"oneway", "rounds", "interactive"}));
  ch_lower->add_option("--r", cl_r, "round count for mode=rounds");

  auto* ch_cross = channel->add_subcommand("crossover", "separation crossover search");

  // --- verify-all ---
  auto* verify_all = app.add_subcommand("verify-all", "run the full invariant suite");
  bool va_quick = false;
  verify_all->add_flag("--quick", va_quick, "reduced case counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Output out;
  out.seed = seed;
  out.out_path = out_path;

  try {
    if (*ens_build) {
      oqc::hardens::HardEnsembleParams p{eb_d, eb_delta, eb_m, eb_eps, seed};
      const auto res = oqc::hardens::build_hard_ensemble(p, eb_retries);
      oqc::save_json_file(eb_ens_out, oqc::to_json(res.ensemble));
      out.inputs = {{"d", eb_d},     {"delta", eb_delta}, {"m", eb_m},
                    {"eps", eb_eps}, {"retries", eb_retries}, {"ensemble_file", eb_ens_out}};
      out.results = {{"batches_used", res.batches_used},
                     {"norm1", res.report.norm1},
                     {"norm2", res.report.norm2},
                     {"norm3", res.report.norm3},
                     {"unbiased1", res.report.unbiased1},
                     {"unbiased2", res.report.unbiased2},
                     {"unbiased3", res.report.unbiased3},
                     {"realized_eps", res.report.realized_eps()},
                     {"z3_evaluated", res.report.z3_evaluated},
                     {"prescribed_m_at_eps", oqc::hardens::HardEnsembleParams::prescribed_m(
                                                 eb_d, eb_eps)}};
      if (!eb_report_out.empty()) out.out_path = eb_report_out;
      out.emit();
      return kExitOk;
    }
    if (*ens_check) {
      const auto ens = oqc::ensemble_from_json(oqc::load_json_file(ec_in));
      // recover the raw samples |x_i> from the embedded states
      std::vector<oqc::PureState> samples;
      for (const auto& it : ens.items()) {
        oqc::Vector v = it.psi.vector();
        v(0) = 0.0;
        const double n = v.norm();
        if (n < 1e-9) throw oqc::InvariantViolation("state has no anchored component");
        samples.emplace_back(v / n, it.psi.dim());
      }
      const auto rep = oqc::hardens::concentration_check(samples, ec_delta, ec_eps);
      const auto eb = oqc::hardens::entropy_bound_check(ens, ec_delta, rep.realized_eps());
      out.inputs = {{"in", ec_in}, {"delta", ec_delta}, {"eps", ec_eps}};
      out.results = {{"norm1", rep.norm1},
                     {"norm2", rep.norm2},
                     {"norm3", rep.norm3},
                     {"passed", rep.all_passed()},
                     {"entropy", eb.s_avg},
                     {"entropy_bound", eb.bound},
                     {"entropy_ok", eb.ok}};
      out.emit();
      return rep.all_passed() ? kExitOk : kExitValidation;
    }
    if (*measures) {
      out.inputs = {{"op", m_op}, {"a", m_a}};
      const auto a = oqc::density_from_json(oqc::load_json_file(m_a));
      if (m_op == "entropy") {
        out.results = {{"value", oqc::von_neumann_entropy(a)}};
      } else if (m_op == "dmax" || m_op == "fidelity") {
        if (m_b.empty()) throw oqc::InvariantViolation("op needs --b");
        out.inputs["b"] = m_b;
        const auto b = oqc::density_from_json(oqc::load_json_file(m_b));
        const double v = (m_op == "dmax") ? oqc::dmax(a, b) : oqc::fidelity(a, b);
        out.results = {{"value", oqc::real_to_json(v)}};
      } else if (m_op == "mutual") {
        out.inputs["cut"] = m_cut;
        out.results = {{"value", oqc::mutual_information(a, split_labels(m_cut))}};
      } else if (m_op == "cqmi") {
        out.inputs["parts"] = {m_parts_a, m_parts_b, m_parts_c};
        out.results = {{"value", oqc::cqmi(a, split_labels(m_parts_a),
                                           split_labels(m_parts_b),
                                           split_labels(m_parts_c))}};
      } else {
        std::cerr << "unknown measures op: " << m_op << "\n";
        return kExitUsage;
      }
      out.emit();
      return kExitOk;
    }
    if (*sm_overlap) {
      const auto psi = oqc::pure_from_json(oqc::load_json_file(so_state));
      const auto omega = oqc::density_from_json(oqc::load_json_file(so_omega));
      const auto split_pair = oqc::smooth::split_projectors(omega, so_k);
      out.inputs = {{"state", so_state}, {"omega", so_omega}, {"k", so_k}, {"nu", so_nu}};
      out.results = {
          {"overlap", oqc::smooth::smoothed_overlap_closed_form(psi, split_pair.qminus,
                                                                so_nu)},
          {"lower_bound", oqc::smooth::smooth_dmax_lower_bound(psi, omega, so_nu, so_k)},
          {"upper_estimate",
           oqc::smooth::smooth_dmax_upper_estimate(psi, omega, so_nu, seed)},
          {"rank_plus", split_pair.rank_plus},
          {"rank_minus", split_pair.rank_minus}};
      out.emit();
      return kExitOk;
    }
    if (*sm_qstar) {
      const auto ens = oqc::ensemble_from_json(oqc::load_json_file(sq_ens));
      const auto cands = oqc::smooth::default_q_star_candidates(ens, seed, sq_candidates);
      const auto res = oqc::smooth::q_star_estimate(ens, cands, sq_nu);
      out.inputs = {{"ens", sq_ens}, {"nu", sq_nu}, {"candidates", sq_candidates}};
      out.results = {{"q_star", res.value},
                     {"regime", res.regime},
                     {"best_candidate", res.best_candidate},
                     {"best_sum", res.best_sum}};
      out.emit();
      return kExitOk;
    }
    if (*sm_avg) {
      const auto ens = oqc::ensemble_from_json(oqc::load_json_file(sa_ens));
      const auto omega = oqc::density_from_json(oqc::load_json_file(sa_omega));
      const auto diag =
          oqc::smooth::ensemble_avg_two_pow_neg_dmax_bound(ens, omega, sa_nu, sa_delta);
      out.inputs = {{"ens", sa_ens}, {"omega", sa_omega}, {"nu", sa_nu},
                    {"delta", sa_delta}};
      Json per = Json::array();
      for (double v : diag.per_state_lower_bounds) per.push_back(v);
      out.results = {{"bound", diag.bound},
                     {"bad_fraction", diag.bad_fraction},
                     {"bad_fraction_prediction", diag.bad_fraction_prediction},
                     {"k", diag.k},
                     {"nu", diag.nu},
                     {"q_rank", diag.q_rank},
                     {"per_state_lower_bounds", per}};
      out.emit();
      return kExitOk;
    }
    if (*sp_validate) {
      const auto ens = oqc::ensemble_from_json(oqc::load_json_file(sv_ens));
      const auto sol = oqc::splitsim::feasible_from_json(oqc::load_json_file(sv_sol));
      const auto res = oqc::splitsim::validate_feasible_solution(ens, sol);
      out.inputs = {{"ens", sv_ens}, {"sol", sv_sol}};
      out.results = {{"ok", res.ok},
                     {"objective", res.objective},
                     {"violations", res.violations}};
      out.emit();
      return res.ok ? kExitOk : kExitValidation;
    }
    if (*sp_sim) {
      const auto ens = oqc::ensemble_from_json(oqc::load_json_file(ss_ens));
      const auto sol = ss_sol.empty()
                           ? oqc::splitsim::baseline_solution(ens)
                           : oqc::splitsim::feasible_from_json(oqc::load_json_file(ss_sol));
      const bool keep = !ss_transcript.empty() || !ss_records.empty();
      const auto sim = oqc::splitsim::simulate_one_way_protocol(ens, sol, ss_delta,
                                                                ss_trials, seed, keep);
      if (!ss_transcript.empty()) {
        const oqc::codec::GeometricCodec geom(ss_delta);
        std::vector<oqc::codec::BitString> messages;
        messages.reserve(sim.records.size());
        for (const auto& rec : sim.records) {
          oqc::codec::BitString m;
          m.push(rec.branch == 'B' ? 1 : 0);
          if (rec.branch == 'G') m.append(geom.encode(rec.k));
          m.append(oqc::codec::tuple_encode(rec.tuple));
          messages.push_back(std::move(m));
        }
        std::ofstream tf(ss_transcript, std::ios::binary);
        oqc::codec::write_transcript(tf, messages);
      }
      if (!ss_records.empty()) {
        std::ofstream rf(ss_records);
        rf << "x,branch,k,tuple,flag_bits,k_bits,tuple_bits,total_bits\n";
        for (const auto& rec : sim.records) {
          rf << rec.x << "," << rec.branch << "," << rec.k << ",";
          for (std::size_t i = 0; i < rec.tuple.size(); ++i)
            rf << (i ? ";" : "") << rec.tuple[i];
          rf << "," << rec.flag_bits << "," << rec.k_bits << "," << rec.tuple_bits << ","
             << rec.total_bits() << "\n";
        }
      }
      out.inputs = {{"ens", ss_ens},       {"sol", ss_sol.empty() ? "baseline" : ss_sol},
                    {"delta", ss_delta},   {"trials", ss_trials},
                    {"transcript", ss_transcript}};
      out.results = {{"mean_cost", sim.mean_cost},
                     {"stderr", sim.stderr_cost},
                     {"analytic_error_bound", sim.analytic_error_bound},
                     {"exact_expected_cost",
                      oqc::splitsim::exact_expected_cost(ens, sol, ss_delta)},
                     {"histogram", histogram_json(sim.histogram)}};
      if (format == "csv" && out_path.empty() == false) {
        std::ofstream cf(out_path);
        cf << "total_bits,count\n";
        for (const auto& [bits, count] : sim.histogram) cf << bits << "," << count << "\n";
        return kExitOk;
      }
      out.emit();
      return kExitOk;
    }
    if (*sp_convex) {
      const Json j = oqc::load_json_file(sc_inst);
      oqc::splitsim::ConvexSplitInstance inst;
      inst.delta = j.at("delta").get<double>();
      for (const auto& v : j.at("p")) inst.p.push_back(v.get<double>());
      for (const auto& s : j.at("psi")) inst.psi.push_back(oqc::density_from_json(s));
      for (const auto& s : j.at("omega")) inst.omega.push_back(oqc::density_from_json(s));
      const auto res = oqc::splitsim::convex_split_build(inst);
      const double cert = oqc::splitsim::convex_split_dmax_certificate(inst, res);
      double q_ratio = 0.0;
      for (const auto& mc : oqc::splitsim::convex_split_coefficients(inst, res))
        if (mc.p_s > 0.0) q_ratio = std::max(q_ratio, mc.q / mc.p_s);
      Json norms = Json::array();
      for (double ni : res.normalization) norms.push_back(ni);
      out.inputs = {{"inst", sc_inst}, {"delta", inst.delta}};
      out.results = {{"dmax_certificate", cert},
                     {"budget", 2.0 * std::log2(1.0 / inst.delta)},
                     {"normalizations", norms},
                     {"max_q_over_ps", q_ratio},
                     {"q_budget", 1.0 / (inst.delta * inst.delta)}};
      out.emit();
      return kExitOk;
    }
    if (*sp_comb) {
      out.inputs = {{"k", cb_k}, {"r", cb_r}, {"minexp_b", cb_minexp_b}};
      Json results = Json::object();
      if (cb_k > 0)
        results["ordered_factorizations"] = oqc::splitsim::ordered_factorizations(cb_k, cb_r);
      if (cb_minexp_b > 0.0) {
        results["min_expected_log_product"] =
            oqc::splitsim::min_expected_log_product(cb_minexp_b, cb_r);
        results["analytic_floor"] =
            oqc::splitsim::min_expected_log_product_floor(cb_minexp_b, cb_r);
      }
      out.results = results;
      out.emit();
      return kExitOk;
    }
    if (*rd_build) {
      oqc::redist::RedistParams p{rb_d, rb_da, rb_beta,
                                  rb_mode == "fixed" ? oqc::redist::BasisMode::fixed_C
                                                     : oqc::redist::BasisMode::random_C,
                                  seed};
      const auto pair = oqc::redist::build_redist_pair(p);
      Json spectrum_json = Json::array();
      for (double e : pair.spectrum) spectrum_json.push_back(e);
      out.inputs = {{"d", rb_d}, {"da", rb_da}, {"beta", rb_beta}, {"mode", rb_mode}};
      out.results = {{"psi", oqc::to_json(pair.psi)},
                     {"ghz", oqc::to_json(pair.ghz)},
                     {"spectrum", spectrum_json},
                     {"spectrum_entropy", oqc::redist::spectrum_entropy(pair.spectrum)},
                     {"entropy_budget", 2.0 * std::log2(static_cast<double>(rb_d)) / rb_beta}};
      out.emit();
      return kExitOk;
    }
    if (*rd_verify || *rd_quant) {
      const std::string path = *rd_verify ? rv_in : rq_in;
      const Json j = oqc::load_json_file(path);
      const Json& res_j = j.contains("results") ? j.at("results") : j;
      const Json& in_j = j.contains("inputs") ? j.at("inputs") : j;
      oqc::redist::RedistParams p{in_j.at("d").get<int>(), in_j.at("da").get<int>(),
                                  in_j.at("beta").get<double>(),
                                  in_j.at("mode").get<std::string>() == "fixed"
                                      ? oqc::redist::BasisMode::fixed_C
                                      : oqc::redist::BasisMode::random_C,
                                  j.value("seed", 0ull)};
      oqc::redist::RedistStatePair pair{oqc::pure_from_json(res_j.at("psi")),
                                        oqc::pure_from_json(res_j.at("ghz")),
                                        res_j.at("spectrum").get<std::vector<double>>(), p};
      out.inputs = {{"in", path}};
      if (*rd_verify) {
        const double dev = oqc::redist::rescaling_deviation(pair);
        out.results = {{"rescaling_deviation", dev}, {"ok", dev <= 1e-9}};
        out.emit();
        return dev <= 1e-9 ? kExitOk : kExitValidation;
      }
      const auto q = oqc::redist::redist_quantities(pair);
      out.results = {{"cqmi_psi", q.cqmi_psi},
                     {"s_psi_c", q.s_psi_c},
                     {"imax_rb_ub", q.imax_rb_ub},
                     {"i_r_bc_ghz", q.i_r_bc_ghz},
                     {"avg_i_rp_bc", q.avg_i_rp_bc}};
      out.emit();
      return kExitOk;
    }
    if (*rd_params) {
      const auto sp = oqc::redist::redist_separation_params(rp_p, rp_eps);
      out.inputs = {{"p", rp_p}, {"eps", rp_eps}};
      out.results = {{"mu", sp.mu},
                     {"beta", sp.beta},
                     {"error_bound", sp.error_bound},
                     {"eps_max", sp.eps_max},
                     {"eps_admissible", sp.eps_admissible},
                     {"error_below_sixth", sp.error_below_sixth},
                     {"worst_case_budget_factor", sp.worst_case_budget_factor}};
      out.emit();
      return kExitOk;
    }
    if (*ch_cap) {
      const auto ens = oqc::ensemble_from_json(oqc::load_json_file(cc_ch));
      oqc::chansim::CqChannel ch;
      for (const auto& it : ens.items()) ch.outputs.push_back(it.psi);
      out.inputs = {{"ch", cc_ch}};
      out.results = {{"capacity", oqc::chansim::cq_capacity(ch)},
                     {"inputs_size", ch.input_size()}};
      out.emit();
      return kExitOk;
    }
    if (*ch_upper) {
      out.inputs = {{"capacity", cu_capacity}, {"eta", cu_eta}};
      out.results = {{"value", oqc::chansim::one_shot_capacity_upper(cu_capacity, cu_eta)}};
      out.emit();
      return kExitOk;
    }
    if (*ch_lower) {
      const auto mode = cl_mode == "oneway"   ? oqc::chansim::SimMode::oneway
                        : cl_mode == "rounds" ? oqc::chansim::SimMode::rounds
                                              : oqc::chansim::SimMode::interactive;
      const auto res = oqc::chansim::simulation_cost_lower(cl_d, cl_delta, cl_eta, mode,
                                                           cl_r);
      out.inputs = {{"d", cl_d}, {"delta", cl_delta}, {"eta", cl_eta}, {"mode", cl_mode},
                    {"r", cl_r}};
      out.results = {{"value", res.value},
                     {"log2_d_delta_over_128", res.log2_d_delta_over_128},
                     {"gate_ok", res.gate_ok},
                     {"gate_threshold", res.gate_threshold},
                     {"alt_gate_threshold", res.alt_gate_threshold}};
      out.emit();
      return res.gate_ok ? kExitOk : kExitValidation;
    }
    if (*ch_cross) {
      const auto res = oqc::chansim::separation_crossover();
      out.results = {{"found", res.found},
                     {"log2_d_star", res.log2_d_star},
                     {"sim_lower", res.sim_lower},
                     {"capacity_upper", res.capacity_upper}};
      out.emit();
      return kExitOk;
    }
    if (*verify_all) {
      const auto results = oqc::verify::run_all_criteria(va_quick);
      Json list = Json::array();
      int fails = 0;
      for (const auto& r : results) {
        std::cout << "[" << (r.passed ? "PASS" : "FAIL") << "] criterion " << r.id << ": "
                  << r.name << " (" << r.seconds << "s) -- " << r.details << "\n";
        list.push_back({{"id", r.id},
                        {"name", r.name},
                        {"passed", r.passed},
                        {"seconds", r.seconds},
                        {"details", r.details}});
        if (!r.passed) ++fails;
      }
      out.inputs = {{"quick", va_quick}};
      out.results = {{"criteria", list}, {"failures", fails}};
      if (!out_path.empty()) out.emit();
      return fails == 0 ? kExitOk : kExitProperty;
    }
  } catch (const oqc::DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const oqc::InvariantViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const oqc::RegisterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  std::cerr << "no subcommand executed\n";
  return kExitUsage;
}

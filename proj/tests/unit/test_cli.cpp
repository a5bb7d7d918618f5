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
#include <catch2/catch.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "oqclab/qcore/json_io.hpp"
#include "oqclab/qcore/measures.hpp"
#include "oqclab/qcore/random.hpp"
#include "oqclab/version.hpp"

#ifndef OQC_CLI_PATH
#define OQC_CLI_PATH "oqc"
#endif

using namespace oqc;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  const std::string out_file = "/tmp/oqc_cli_test_stdout.txt";
  const std::string cmd =
      std::string(OQC_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WEXITSTATUS(raw);
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  res.stdout_text = ss.str();
  return res;
}

Json strip_timestamp(const std::string& text) {
  Json j = Json::parse(text);
  j.erase("timestamp");
  return j;
}

std::string write_state(const std::string& name, const DensityOperator& rho) {
  const std::string path = "/tmp/" + name;
  save_json_file(path, to_json(rho));
  return path;
}

} // namespace

TEST_CASE("cli: identical config and seed give identical payloads") {
  // small ensemble file
  Rng rng(1101);
  const HilbertDim dim({{"Ap", 1}, {"C", 2}});
  std::vector<Ensemble::Item> items;
  for (int i = 0; i < 3; ++i) items.push_back({1.0 / 3, haar_pure_state(dim, rng)});
  save_json_file("/tmp/oqc_cli_ens.json", to_json(Ensemble(std::move(items))));

  const std::string args =
      "--seed 7 split simulate --ens /tmp/oqc_cli_ens.json --trials 20000 --delta 0.25";
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(strip_timestamp(a.stdout_text) == strip_timestamp(b.stdout_text));
  // a different seed changes the payload
  const auto c = run_cli(
      "--seed 8 split simulate --ens /tmp/oqc_cli_ens.json --trials 20000 --delta 0.25");
  CHECK(strip_timestamp(a.stdout_text) != strip_timestamp(c.stdout_text));
}

TEST_CASE("cli: dimension mismatch exits with the validation code") {
  Rng rng(1102);
  const auto a2 = write_state("oqc_cli_a2.json", random_density(2, rng));
  const auto b3 = write_state("oqc_cli_b3.json", random_density(3, rng));
  const auto res = run_cli("measures dmax --a " + a2 + " --b " + b3);
  CHECK(res.exit_code == 2);
}

TEST_CASE("cli: measures agree with the library") {
  Rng rng(1103);
  const auto rho = random_density(3, rng);
  const auto sigma = random_density(3, rng);
  const auto pa = write_state("oqc_cli_m1.json", rho);
  const auto pb = write_state("oqc_cli_m2.json", sigma);
  const auto res = run_cli("measures fidelity --a " + pa + " --b " + pb);
  REQUIRE(res.exit_code == 0);
  const Json j = Json::parse(res.stdout_text);
  CHECK(j["results"]["value"].get<double>() == Approx(fidelity(rho, sigma)).margin(1e-12));
  CHECK(j["version"].get<std::string>() == std::string(kVersion));
  CHECK(j.contains("seed"));
}

TEST_CASE("cli: channel calculators and usage errors") {
  const auto ok = run_cli("channel upper --capacity 1 --eta 0.01");
  REQUIRE(ok.exit_code == 0);
  CHECK(Json::parse(ok.stdout_text)["results"]["value"].get<double>() ==
        Approx(1.0917).margin(1e-4));
  // unknown flags are rejected (usage error)
  const auto bad = run_cli("channel upper --capacity 1 --eta 0.01 --bogus 3");
  CHECK(bad.exit_code == 1);
  // failed eta gate surfaces as a validation exit
  const auto gate =
      run_cli("channel sim-lower --d 1099511627776 --delta 0.03125 --eta 1e-4");
  CHECK(gate.exit_code == 2);
}

TEST_CASE("cli: ensemble build then check round trip") {
  const auto build = run_cli(
      "--seed 11 --out /tmp/oqc_cli_report.json ensemble build --d 6 --delta 0.2 "
      "--m 128 --eps 1.2 --ensemble-out /tmp/oqc_cli_hard.json");
  REQUIRE(build.exit_code == 0);
  const Json report = load_json_file("/tmp/oqc_cli_report.json");
  CHECK(report["results"]["realized_eps"].get<double>() <= 1.2);
  const auto check = run_cli("ensemble check --in /tmp/oqc_cli_hard.json --delta 0.2 "
                             "--eps 1.2");
  REQUIRE(check.exit_code == 0);
  const Json cj = Json::parse(check.stdout_text);
  CHECK(cj["results"]["passed"].get<bool>());
  CHECK(cj["results"]["entropy_ok"].get<bool>());
}

TEST_CASE("cli: redist build, verify, quantities pipeline") {
  const auto build = run_cli(
      "--seed 5 --out /tmp/oqc_cli_pair.json redist build --d 2 --da 2 --beta 4 "
      "--mode fixed");
  REQUIRE(build.exit_code == 0);
  const auto verify = run_cli("redist verify --in /tmp/oqc_cli_pair.json");
  REQUIRE(verify.exit_code == 0);
  CHECK(Json::parse(verify.stdout_text)["results"]["ok"].get<bool>());
  const auto quant = run_cli("redist quantities --in /tmp/oqc_cli_pair.json");
  REQUIRE(quant.exit_code == 0);
  const Json qj = Json::parse(quant.stdout_text);
  CHECK(qj["results"]["i_r_bc_ghz"].get<double>() == Approx(2.0).margin(1e-9));
  CHECK(qj["results"]["imax_rb_ub"].get<double>() == Approx(1.0).margin(1e-9));
}

TEST_CASE("cli: verify-all quick run exits clean") {
  const auto res = run_cli("verify-all --quick");
  CHECK(res.exit_code == 0);
  CHECK(res.stdout_text.find("[PASS]") != std::string::npos);
  CHECK(res.stdout_text.find("[FAIL]") == std::string::npos);
}

TEST_CASE("cli: transcript dump has the expected container format") {
  const auto res = run_cli(
      "--seed 3 split simulate --ens /tmp/oqc_cli_ens.json --trials 50 --delta 0.25 "
      "--dump-transcript /tmp/oqc_cli_transcript.bin");
  REQUIRE(res.exit_code == 0);
  std::ifstream tf("/tmp/oqc_cli_transcript.bin", std::ios::binary);
  char magic[4];
  tf.read(magic, 4);
  CHECK(std::string(magic, 4) == "OQC1");
}

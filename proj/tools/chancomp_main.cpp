// Copyright 2026 The chancomp authors
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

// Command-line front end. Talks to the library exclusively through the
// C API in chancomp/capi.h.
//
// Exit codes: 0 success, 2 validation error, 3 violation found where theory
// predicts none (regression alarm).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chancomp/capi.h"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitAlarm = 3;

int write_output(const chancomp_report* rep, const std::string& path) {
  if (path.empty()) {
    std::fwrite(chancomp_report_text(rep), 1, chancomp_report_size(rep), stdout);
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return kExitValidation;
  }
  out.write(chancomp_report_text(rep), static_cast<std::streamsize>(chancomp_report_size(rep)));
  return out ? 0 : kExitValidation;
}

int finish(chancomp_status status, chancomp_report* rep, const std::string& out_path) {
  if (status != CHANCOMP_OK) {
    std::cerr << "error: " << chancomp_last_error() << "\n";
    return status == CHANCOMP_ERR_INVALID_ARGUMENT ? kExitValidation : 1;
  }
  int rc = write_output(rep, out_path);
  if (rc == 0 && chancomp_report_alarms(rep) > 0) rc = kExitAlarm;
  chancomp_report_free(rep);
  return rc;
}

bool load_distribution(const std::string& path, std::vector<double>& dist) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open distribution file: " << path << "\n";
    return false;
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    std::cerr << "error: invalid JSON in " << path << ": " << e.what() << "\n";
    return false;
  }
  if (!j.is_array() || j.size() != 8) {
    std::cerr << "error: distribution file must hold a JSON array of 8 probabilities\n";
    return false;
  }
  dist.clear();
  for (const auto& v : j) {
    if (!v.is_number()) {
      std::cerr << "error: distribution entries must be numbers\n";
      return false;
    }
    dist.push_back(v.get<double>());
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compatibility regions, joint-map certificates, and lemma property "
               "suites for noisy identity qubit channels"};
  app.require_subcommand(1);

  chancomp_region_config region_cfg;
  chancomp_region_config_init(&region_cfg);
  std::string region_out;
  std::string region_format = "csv";
  auto* region = app.add_subcommand("region", "Sweep the (eta1, eta2) grid and classify each point");
  region->add_option("--grid", region_cfg.grid_n, "Grid points per axis (inclusive endpoints)")
      ->check(CLI::Range(2, 4096));
  region->add_option("--out", region_out, "Output file (default: stdout)");
  region->add_option("--format", region_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  region->add_option("--seed", region_cfg.seed, "Seed recorded in JSON metadata");
  region->add_option("--tol", region_cfg.tol, "Boundary tolerance band");

  double eta1 = 0.0, eta2 = 0.0;
  chancomp_certify_config certify_cfg;
  chancomp_certify_config_init(&certify_cfg);
  std::string certify_out;
  auto* certify = app.add_subcommand("certify", "Certify one (eta1, eta2) pair");
  certify->add_option("eta1", eta1, "First shrinking factor")->required();
  certify->add_option("eta2", eta2, "Second shrinking factor")->required();
  certify->add_option("--cert-grid", certify_cfg.cert_grid, "Sphere lattice size");
  certify->add_option("--cert-samples", certify_cfg.cert_samples, "Random product pairs");
  certify->add_option("--tol", certify_cfg.tol, "Positivity tolerance");
  certify->add_option("--seed", certify_cfg.seed, "Random sweep seed");
  certify->add_option("--gamma", certify_cfg.gamma,
                      "Cross coefficient of the constructed joint (default eta1*eta2)");
  certify->add_option("--out", certify_out, "Output file (default: stdout)");

  chancomp_lemmas_config lemmas_cfg;
  chancomp_lemmas_config_init(&lemmas_cfg);
  std::string lemmas_out;
  std::string dist_path;
  long lemmas_samples = 0;
  auto* lemmas = app.add_subcommand("lemmas", "Run the lemma property sweeps");
  lemmas->add_option("--seed", lemmas_cfg.seed, "Sweep seed");
  lemmas->add_option("--samples", lemmas_samples,
                     "Simplex sample count; other sweeps scale proportionally");
  lemmas->add_option("--dist", dist_path, "JSON file with 8 probabilities to check");
  lemmas->add_option("--out", lemmas_out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  chancomp_report* rep = nullptr;
  if (region->parsed()) {
    region_cfg.json = region_format == "json" ? 1 : 0;
    const chancomp_status status = chancomp_region_run(&region_cfg, &rep);
    return finish(status, rep, region_out);
  }
  if (certify->parsed()) {
    const chancomp_status status = chancomp_certify_run(eta1, eta2, &certify_cfg, &rep);
    return finish(status, rep, certify_out);
  }
  // lemmas
  if (lemmas_samples > 0) {
    lemmas_cfg.simplex_samples = lemmas_samples;
    lemmas_cfg.clifford_samples = std::max(1L, lemmas_samples / 100);
    lemmas_cfg.jm_samples = std::max(1L, lemmas_samples / 10);
  }
  std::vector<double> dist;
  if (!dist_path.empty()) {
    if (!load_distribution(dist_path, dist)) return kExitValidation;
    lemmas_cfg.dist8 = dist.data();
  }
  const chancomp_status status = chancomp_lemmas_run(&lemmas_cfg, &rep);
  return finish(status, rep, lemmas_out);
}

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

#include <doctest.h>

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chancomp/reports.hpp"
#include "test_helpers.hpp"

using namespace chancomp;
using nlohmann::json;

TEST_CASE("region CSV schema and boundary rows") {
  RegionConfig cfg;
  cfg.grid_n = 11;
  const std::string csv = region_report(cfg);

  std::istringstream in(csv);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "eta1,eta2,quantum,almost_quantum,min_tensor,class");

  int rows = 0;
  bool found_gap_row = false;
  while (std::getline(in, line)) {
    ++rows;
    if (line == "0.9,0.4,0,0,1,min_tensor_only") found_gap_row = true;
  }
  CHECK(rows == 121);
  CHECK(found_gap_row);
}

TEST_CASE("point classification at the named boundary values") {
  const double third = 2.0 / 3.0;
  CHECK(std::string(classify_point(third, third).cls) == "quantum");
  CHECK(std::string(classify_point(third + 1e-3, third + 1e-3).cls) == "min_tensor_only");

  const double r = 1.0 / std::sqrt(2.0);
  CHECK(classify_point(r, r).min_tensor);
  CHECK_FALSE(classify_point(r + 1e-3, r + 1e-3).min_tensor);

  CHECK(std::string(classify_point(0.7071, 0.7071).cls) == "min_tensor_only");
  CHECK(std::string(classify_point(1.0, 1.0).cls) == "incompatible");
}

TEST_CASE("region output is byte deterministic") {
  RegionConfig cfg;
  cfg.grid_n = 41;
  CHECK(region_report(cfg) == region_report(cfg));
  cfg.json = true;
  const std::string once = region_report(cfg);
  CHECK(once == region_report(cfg));
  const json parsed = json::parse(once);
  CHECK(parsed["grid_n"] == 41);
  CHECK(parsed["rows"].size() == 41 * 41);
}

TEST_CASE("certify report at the symmetric min-tensor boundary point") {
  CertifyConfig cfg;
  cfg.cert_grid = 80;
  cfg.cert_samples = 1000;
  const double r = 1.0 / std::sqrt(2.0);
  const json rep = certify_report(r, r, cfg);

  CHECK(rep["predicates"]["quantum"] == false);
  CHECK(rep["predicates"]["min_tensor"] == true);
  CHECK(rep["min_tensor_joint"]["certificate"]["status"] == "certified");
  CHECK(rep["quantum_joint"]["constructed"] == false);

  const auto& reg = rep["gamma_regression"];
  CHECK(reg["certificate"]["status"] == "violated");
  CHECK(std::abs(reg["pinned_point"]["min_eig"].get<double>() - (-0.0518)) < 1e-3);
  CHECK(reg["pinned_point"]["cos_nm"] == -0.5);
  CHECK(rep["regression_alarms"] == 0);
}

TEST_CASE("certify report at a quantum-compatible point") {
  CertifyConfig cfg;
  cfg.cert_grid = 80;
  cfg.cert_samples = 1000;
  const json rep = certify_report(2.0 / 3.0, 2.0 / 3.0, cfg);
  CHECK(rep["predicates"]["quantum"] == true);
  CHECK(rep["min_tensor_joint"]["certificate"]["status"] == "certified");
  CHECK(rep["quantum_joint"]["constructed"] == true);
  CHECK(rep["quantum_joint"]["choi_min_eig"].get<double>() >= -1e-9);
  CHECK(rep["quantum_joint"]["marginal_error"].get<double>() <= 1e-9);
  CHECK(rep["regression_alarms"] == 0);
}

TEST_CASE("certify report outside both regions carries a witness") {
  CertifyConfig cfg;
  cfg.cert_grid = 80;
  cfg.cert_samples = 1000;
  const json rep = certify_report(0.8, 0.8, cfg);
  CHECK(rep["predicates"]["min_tensor"] == false);
  CHECK(rep["min_tensor_joint"]["certificate"]["status"] == "violated");
  const auto& witness = rep["min_tensor_joint"]["certificate"]["witness"];
  REQUIRE(!witness.is_null());
  const auto n = witness["n"].get<std::vector<double>>();
  const auto m = witness["m"].get<std::vector<double>>();
  REQUIRE(n.size() == 3);
  REQUIRE(m.size() == 3);
  // Witness angle obeys the closed form c = (1 - s)/(2 eta1 eta2).
  const double want_c = (1.0 - 2.0 * 0.64) / (2.0 * 0.64);
  CHECK(n[0] * m[0] + n[1] * m[1] + n[2] * m[2] == doctest::Approx(want_c).epsilon(1e-3));
  CHECK(rep["regression_alarms"] == 0);
}

TEST_CASE("certify honours a gamma override") {
  CertifyConfig cfg;
  cfg.cert_grid = 80;
  cfg.cert_samples = 1000;
  cfg.gamma = 1.0;
  const double r = 1.0 / std::sqrt(2.0);
  const json rep = certify_report(r, r, cfg);
  CHECK(rep["min_tensor_joint"]["gamma"] == 1.0);
  CHECK(rep["min_tensor_joint"]["certificate"]["status"] == "violated");
  // Worst case of (1/4)[(1+c) - sqrt(1+c)] is -1/16.
  CHECK(rep["min_tensor_joint"]["certificate"]["worst_min_eig"].get<double>() ==
        doctest::Approx(-0.0625).epsilon(1e-5));
  CHECK(rep["regression_alarms"] == 0);  // explicit override is not an alarm
}

TEST_CASE("certify report is byte deterministic for a fixed seed") {
  CertifyConfig cfg;
  cfg.cert_grid = 60;
  cfg.cert_samples = 500;
  cfg.seed = 777;
  const std::string a = dump_json(certify_report(0.72, 0.72, cfg));
  const std::string b = dump_json(certify_report(0.72, 0.72, cfg));
  CHECK(a == b);
}

TEST_CASE("certify rejects invalid input") {
  CHECK_THROWS_AS(certify_report(1.2, 0.5, CertifyConfig{}), std::invalid_argument);
  CertifyConfig bad;
  bad.tol = -1.0;
  CHECK_THROWS_AS(certify_report(0.5, 0.5, bad), std::invalid_argument);
}

TEST_CASE("lemmas report runs clean with reduced samples") {
  LemmasConfig cfg;
  cfg.seed = 42;
  cfg.clifford_samples = 200;
  cfg.simplex_samples = 20000;
  cfg.jm_samples = 2000;
  const json rep = lemmas_report(cfg);
  CHECK(rep["violations"] == 0);
  CHECK(rep["clifford"]["violations"] == 0);
  CHECK(rep["tripartite"]["violations"] == 0);
  CHECK(rep["tripartite"]["worst_margin"].get<double>() >= -1e-12);
  CHECK(rep["joint_measurability"]["criterion_disagreements"] == 0);

  const std::string a = dump_json(lemmas_report(cfg));
  const std::string b = dump_json(lemmas_report(cfg));
  CHECK(a == b);
}

TEST_CASE("lemmas report checks a supplied distribution") {
  LemmasConfig cfg;
  cfg.clifford_samples = 10;
  cfg.simplex_samples = 10;
  cfg.jm_samples = 10;
  cfg.extra_distribution = {{0.125, 0.125, 0.125, 0.125, 0.125, 0.125, 0.125, 0.125}};
  const json rep = lemmas_report(cfg);
  CHECK(rep["input_distribution"]["pass"] == true);

  cfg.extra_distribution = {{-0.1, 1.1, 0, 0, 0, 0, 0, 0}};
  CHECK_THROWS_AS(lemmas_report(cfg), std::invalid_argument);
}

TEST_CASE("harness report serialises with links and frame") {
  Rng rng(91);
  double e1, e2;
  const AlmostQuantumDecomposition d = chancomp::testing::random_valid_decomposition(rng, &e1, &e2);
  const HarnessReport rep = compatibility_bound_harness(d, e1, e2);
  const json j = harness_json(rep);
  CHECK(j["passed"] == true);
  CHECK(j["final_lhs"].get<double>() <= 1.0 + 1e-9);
  CHECK(j["frame"].contains("x1"));
  CHECK(j["links"].is_array());
  bool found_final = false;
  for (const auto& link : j["links"])
    if (link["name"] == "final_bound") found_final = link["pass"].get<bool>();
  CHECK(found_final);
}

TEST_CASE("probe report serialises") {
  CertifyOptions opt;
  opt.grid = 40;
  opt.random_samples = 200;
  const double r = 1.0 / std::sqrt(2.0);
  const json j = probe_json(uniqueness_probe(r, r, 5, 1e-2, 3, opt));
  CHECK(j["directions"] == 5);
  CHECK(j.contains("fraction_at_epsilon"));
}

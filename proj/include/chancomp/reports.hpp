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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "chancomp/almost_quantum.hpp"
#include "chancomp/joint_maps.hpp"

namespace chancomp {

// ---- region sweep -----------------------------------------------------

struct RegionConfig {
  int grid_n = 101;
  double tol = 1e-9;
  std::uint64_t seed = 0;  // carried into JSON metadata; the sweep itself is closed-form
  bool json = false;
};

struct RegionRow {
  double eta1, eta2;
  bool quantum, almost_quantum, min_tensor;
  const char* cls;  // "quantum" | "min_tensor_only" | "incompatible"
};

RegionRow classify_point(double eta1, double eta2, double tol = 1e-9);
std::vector<RegionRow> region_rows(const RegionConfig& cfg);

/// CSV with header eta1,eta2,quantum,almost_quantum,min_tensor,class
/// (or the JSON equivalent). Byte-deterministic for a fixed config.
std::string region_report(const RegionConfig& cfg);

// ---- point certification ----------------------------------------------

struct CertifyConfig {
  int cert_grid = 200;
  int cert_samples = 10000;
  std::uint64_t seed = 12345;
  double tol = 1e-9;
  std::optional<double> gamma;  // override for the constructed joint
};

/// Full certification record for one (eta1, eta2): predicates, the
/// constructed min-tensor joint's certificate, the quantum joint when the
/// pair is compatible, and the 2*eta1*eta2 coefficient regression with its
/// pinned evaluation at n.m = -1/2.
nlohmann::json certify_report(double eta1, double eta2, const CertifyConfig& cfg);

// ---- lemma property sweeps ----------------------------------------------

struct LemmasConfig {
  std::uint64_t seed = 12345;
  long clifford_samples = 10000;
  long simplex_samples = 1000000;
  long jm_samples = 100000;
  std::optional<std::array<double, 8>> extra_distribution;  // validated, then checked
};

nlohmann::json lemmas_report(const LemmasConfig& cfg);

// ---- serialisation helpers ----------------------------------------------

nlohmann::json certificate_json(const PositivityCertificate& cert);
nlohmann::json harness_json(const HarnessReport& rep);
nlohmann::json probe_json(const UniquenessProbeReport& rep);

/// Total violations-where-theory-predicts-none in a report (regression alarm
/// count; drives the CLI exit code).
int report_alarms(const nlohmann::json& report);

std::string dump_json(const nlohmann::json& j);

}  // namespace chancomp

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

#include "chancomp/capi.h"

#include <array>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "chancomp/reports.hpp"

struct chancomp_report {
  std::string text;
  int alarms = 0;
};

namespace {

thread_local std::string g_last_error;

chancomp_status fail(chancomp_status code, const char* msg) {
  g_last_error = msg;
  return code;
}

template <typename Fn>
chancomp_status run_guarded(chancomp_report** out, const Fn& fn) {
  if (out == nullptr) return fail(CHANCOMP_ERR_INVALID_ARGUMENT, "output pointer is null");
  *out = nullptr;
  try {
    *out = fn();
    g_last_error.clear();
    return CHANCOMP_OK;
  } catch (const std::invalid_argument& e) {
    return fail(CHANCOMP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(CHANCOMP_ERR_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

void chancomp_region_config_init(chancomp_region_config* cfg) {
  if (!cfg) return;
  cfg->grid_n = 101;
  cfg->tol = 1e-9;
  cfg->seed = 0;
  cfg->json = 0;
}

void chancomp_certify_config_init(chancomp_certify_config* cfg) {
  if (!cfg) return;
  cfg->cert_grid = 200;
  cfg->cert_samples = 10000;
  cfg->seed = 12345;
  cfg->tol = 1e-9;
  cfg->gamma = std::nan("");
}

void chancomp_lemmas_config_init(chancomp_lemmas_config* cfg) {
  if (!cfg) return;
  cfg->seed = 12345;
  cfg->clifford_samples = 10000;
  cfg->simplex_samples = 1000000;
  cfg->jm_samples = 100000;
  cfg->dist8 = nullptr;
}

chancomp_status chancomp_region_run(const chancomp_region_config* cfg, chancomp_report** out) {
  if (!cfg) return fail(CHANCOMP_ERR_INVALID_ARGUMENT, "config pointer is null");
  return run_guarded(out, [&cfg] {
    chancomp::RegionConfig rc;
    rc.grid_n = cfg->grid_n;
    rc.tol = cfg->tol;
    rc.seed = cfg->seed;
    rc.json = cfg->json != 0;
    auto rep = std::make_unique<chancomp_report>();
    rep->text = chancomp::region_report(rc);
    rep->alarms = 0;
    return rep.release();
  });
}

chancomp_status chancomp_certify_run(double eta1, double eta2,
                                     const chancomp_certify_config* cfg, chancomp_report** out) {
  if (!cfg) return fail(CHANCOMP_ERR_INVALID_ARGUMENT, "config pointer is null");
  return run_guarded(out, [&] {
    chancomp::CertifyConfig cc;
    cc.cert_grid = cfg->cert_grid;
    cc.cert_samples = cfg->cert_samples;
    cc.seed = cfg->seed;
    cc.tol = cfg->tol;
    if (!std::isnan(cfg->gamma)) cc.gamma = cfg->gamma;
    const nlohmann::json j = chancomp::certify_report(eta1, eta2, cc);
    auto rep = std::make_unique<chancomp_report>();
    rep->text = chancomp::dump_json(j);
    rep->alarms = chancomp::report_alarms(j);
    return rep.release();
  });
}

chancomp_status chancomp_lemmas_run(const chancomp_lemmas_config* cfg, chancomp_report** out) {
  if (!cfg) return fail(CHANCOMP_ERR_INVALID_ARGUMENT, "config pointer is null");
  return run_guarded(out, [&cfg] {
    chancomp::LemmasConfig lc;
    lc.seed = cfg->seed;
    lc.clifford_samples = cfg->clifford_samples;
    lc.simplex_samples = cfg->simplex_samples;
    lc.jm_samples = cfg->jm_samples;
    if (cfg->dist8) {
      std::array<double, 8> d;
      for (int i = 0; i < 8; ++i) d[static_cast<std::size_t>(i)] = cfg->dist8[i];
      lc.extra_distribution = d;
    }
    const nlohmann::json j = chancomp::lemmas_report(lc);
    auto rep = std::make_unique<chancomp_report>();
    rep->text = chancomp::dump_json(j);
    rep->alarms = chancomp::report_alarms(j);
    return rep.release();
  });
}

const char* chancomp_report_text(const chancomp_report* rep) {
  return rep ? rep->text.c_str() : "";
}

size_t chancomp_report_size(const chancomp_report* rep) { return rep ? rep->text.size() : 0; }

int chancomp_report_alarms(const chancomp_report* rep) { return rep ? rep->alarms : 0; }

void chancomp_report_free(chancomp_report* rep) { delete rep; }

const char* chancomp_last_error(void) { return g_last_error.c_str(); }

const char* chancomp_version(void) { return "0.1.0"; }

}  // extern "C"

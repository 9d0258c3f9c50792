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

#include "chancomp/reports.hpp"

#include <cmath>
#include <array>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "chancomp/lemmas.hpp"
#include "chancomp/parallel.hpp"
#include "chancomp/quantum_joint.hpp"
#include "chancomp/rng.hpp"

namespace chancomp {

using nlohmann::json;

namespace {

std::string fmt_eta(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

json vec_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

}  // namespace

RegionRow classify_point(double eta1, double eta2, double tol) {
  RegionRow row{};
  row.eta1 = eta1;
  row.eta2 = eta2;
  row.quantum = quantum_compatible(eta1, eta2, tol);
  row.almost_quantum = almost_quantum_compatible(eta1, eta2, tol);
  row.min_tensor = min_tensor_compatible(eta1, eta2, tol);
  row.cls = row.quantum ? "quantum" : (row.min_tensor ? "min_tensor_only" : "incompatible");
  return row;
}

std::vector<RegionRow> region_rows(const RegionConfig& cfg) {
  if (cfg.grid_n < 2) throw std::invalid_argument("region: grid_n must be >= 2");
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("region: tol must be positive");
  const long n = cfg.grid_n;
  std::vector<RegionRow> rows(static_cast<std::size_t>(n * n));
  const double step = 1.0 / (n - 1);
  parallel_chunks(n * n, [&](int, long lo, long hi) {
    for (long k = lo; k < hi; ++k) {
      const double e1 = static_cast<double>(k / n) * step;
      const double e2 = static_cast<double>(k % n) * step;
      rows[static_cast<std::size_t>(k)] = classify_point(e1, e2, cfg.tol);
    }
  });
  return rows;
}

std::string region_report(const RegionConfig& cfg) {
  const std::vector<RegionRow> rows = region_rows(cfg);
  if (!cfg.json) {
    std::string out = "eta1,eta2,quantum,almost_quantum,min_tensor,class\n";
    out.reserve(rows.size() * 40 + out.size());
    for (const RegionRow& r : rows) {
      out += fmt_eta(r.eta1);
      out += ',';
      out += fmt_eta(r.eta2);
      out += ',';
      out += r.quantum ? '1' : '0';
      out += ',';
      out += r.almost_quantum ? '1' : '0';
      out += ',';
      out += r.min_tensor ? '1' : '0';
      out += ',';
      out += r.cls;
      out += '\n';
    }
    return out;
  }
  json j;
  j["format"] = "region";
  j["grid_n"] = cfg.grid_n;
  j["tol"] = cfg.tol;
  j["seed"] = cfg.seed;
  json arr = json::array();
  for (const RegionRow& r : rows) {
    arr.push_back({{"eta1", r.eta1},
                   {"eta2", r.eta2},
                   {"quantum", r.quantum ? 1 : 0},
                   {"almost_quantum", r.almost_quantum ? 1 : 0},
                   {"min_tensor", r.min_tensor ? 1 : 0},
                   {"class", r.cls}});
  }
  j["rows"] = std::move(arr);
  return dump_json(j);
}

json certificate_json(const PositivityCertificate& cert) {
  json j;
  j["status"] = cert.certified ? "certified" : "violated";
  j["worst_min_eig"] = cert.worst_min_eig;
  if (cert.witness) {
    j["witness"] = {{"n", vec_json(cert.witness->first)}, {"m", vec_json(cert.witness->second)}};
  } else {
    j["witness"] = nullptr;
  }
  j["grid"] = cert.grid;
  j["random_samples"] = cert.random_samples;
  j["samples_used"] = cert.samples_used;
  j["seed"] = cert.seed;
  j["tol"] = cert.tol;
  return j;
}

json certify_report(double eta1, double eta2, const CertifyConfig& cfg) {
  if (!(eta1 >= 0.0 && eta1 <= 1.0 && eta2 >= 0.0 && eta2 <= 1.0))
    throw std::invalid_argument("certify: eta outside [0, 1]");
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("certify: tol must be positive");

  const CertifyOptions opt{cfg.cert_grid, cfg.cert_samples, cfg.seed, cfg.tol};
  int alarms = 0;

  json rep;
  rep["eta1"] = eta1;
  rep["eta2"] = eta2;
  rep["tol"] = cfg.tol;

  const RegionRow row = classify_point(eta1, eta2, cfg.tol);
  rep["predicates"] = {{"quantum", row.quantum},
                       {"almost_quantum", row.almost_quantum},
                       {"min_tensor", row.min_tensor},
                       {"class", row.cls}};

  {
    const double gamma = cfg.gamma.value_or(eta1 * eta2);
    const BilinearJointMap j = construct_min_tensor_joint(eta1, eta2, gamma);
    const PositivityCertificate cert = certify_min_tensor_positivity(j, opt);
    rep["min_tensor_joint"] = {{"gamma", gamma}, {"certificate", certificate_json(cert)}};
    if (!cfg.gamma) {
      // With the default coefficient the closed form decides; disagreement
      // between predicate and certifier is a regression alarm.
      if (row.min_tensor && !cert.certified) ++alarms;
      if (!row.min_tensor && eta1 * eta1 + eta2 * eta2 > 1.0 + 1e-6 && cert.certified) ++alarms;
    }
  }

  if (row.quantum) {
    const BilinearJointMap qj = quantum_joint_channel(eta1, eta2, cfg.tol);
    const auto [left, right] = marginals(qj);
    const double marg_err =
        std::max((left.pt - noisy_identity(eta1).pt).cwiseAbs().maxCoeff(),
                 (right.pt - noisy_identity(eta2).pt).cwiseAbs().maxCoeff());
    const double cmin = min_eig(joint_choi(qj));
    rep["quantum_joint"] = {{"constructed", true},
                            {"choi_min_eig", cmin},
                            {"marginal_error", marg_err}};
    if (cmin < -cfg.tol || marg_err > cfg.tol) ++alarms;
  } else {
    rep["quantum_joint"] = {{"constructed", false}, {"reason", "pair is not quantum compatible"}};
  }

  {
    const double gamma_doubled = 2.0 * eta1 * eta2;
    const BilinearJointMap j = construct_min_tensor_joint(eta1, eta2, gamma_doubled);
    const PositivityCertificate cert = certify_min_tensor_positivity(j, opt);
    // Pinned regression point: n.m = -1/2 in the xy plane.
    const Vec3 n(1.0, 0.0, 0.0);
    const Vec3 m(-0.5, std::sqrt(3.0) / 2.0, 0.0);
    rep["gamma_regression"] = {
        {"gamma", gamma_doubled},
        {"certificate", certificate_json(cert)},
        {"pinned_point", {{"cos_nm", -0.5}, {"min_eig", product_min_eig(j, n, m)}}}};
  }

  rep["regression_alarms"] = alarms;
  return rep;
}

json lemmas_report(const LemmasConfig& cfg) {
  if (cfg.clifford_samples < 1 || cfg.simplex_samples < 1 || cfg.jm_samples < 1)
    throw std::invalid_argument("lemmas: sample counts must be positive");
  json rep;
  rep["seed"] = cfg.seed;
  long violations = 0;

  {
    Rng rng(cfg.seed);
    long bad = 0;
    double worst_linear = -std::numeric_limits<double>::infinity();
    double worst_sum = -std::numeric_limits<double>::infinity();
    for (long k = 0; k < cfg.clifford_samples; ++k) {
      const Vec3 e1 = rng.unit_vec();
      const Vec3 e3 = random_unit_perp(rng, e1);
      const Vec3 p = rng.unit_vec();
      const Vec3 q = random_unit_perp(rng, p);
      const Vec3 r = rng.unit_vec();
      const Vec3 s = random_unit_perp(rng, r);
      const CMatrix id2 = pauli(0);
      const AnticommutingSet set{{kron(kron(bloch_op(e1), bloch_op(p)), id2),
                                  kron(kron(bloch_op(e3), id2), bloch_op(r)),
                                  kron(kron(id2, bloch_op(q)), bloch_op(s))}};
      const CMatrix rho = random_state(rng, 8);
      const std::vector<double> x = {rng.normal(), rng.normal(), rng.normal()};
      const auto [linear, sum_sq] = clifford_bound(set, rho, x);
      worst_linear = std::max(worst_linear, linear);
      worst_sum = std::max(worst_sum, sum_sq - 1.0);
      if (linear > 1e-10 || sum_sq > 1.0 + 1e-10) ++bad;
    }
    rep["clifford"] = {{"samples", cfg.clifford_samples},
                       {"violations", bad},
                       {"worst_linear_excess", worst_linear},
                       {"worst_sum_excess", worst_sum}};
    violations += bad;
  }

  {
    Rng rng(cfg.seed + 1);
    long bad = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (long k = 0; k < cfg.simplex_samples; ++k) {
      std::array<double, 8> p;
      double sum = 0.0;
      for (double& v : p) {
        double u;
        do {
          u = rng.uniform();
        } while (u <= 0.0);
        v = -std::log(u);
        sum += v;
      }
      for (double& v : p) v /= sum;
      const double margin = correlation_inequality_margin(TripartiteDistribution{p});
      worst = std::min(worst, margin);
      if (margin < -1e-12) ++bad;
    }
    // Deterministic point masses: the margin is an exact small integer there.
    double worst_vertex = std::numeric_limits<double>::infinity();
    for (int v = 0; v < 8; ++v) {
      std::array<double, 8> p{};
      p[static_cast<std::size_t>(v)] = 1.0;
      const double margin = correlation_inequality_margin(TripartiteDistribution{p});
      worst_vertex = std::min(worst_vertex, margin);
      if (margin < 0.0) ++bad;
    }
    rep["tripartite"] = {{"samples", cfg.simplex_samples},
                         {"violations", bad},
                         {"worst_margin", worst},
                         {"worst_vertex_margin", worst_vertex}};
    violations += bad;
  }

  {
    Rng rng(cfg.seed + 2);
    long disagreements = 0;
    long feasible = 0;
    double worst_marginal = 0.0;
    for (long k = 0; k < cfg.jm_samples; ++k) {
      const UnbiasedObservable x{rng.ball_vec()};
      const UnbiasedObservable y{rng.ball_vec()};
      const auto [quad, sum] = jm_margins(x, y);
      if (std::abs(quad) > 1e-9 && std::abs(sum) > 1e-9 && (quad > 0.0) != (sum > 0.0))
        ++disagreements;
      if (quad >= 0.0 && sum >= 0.0) {
        ++feasible;
        const JointPovm povm = joint_povm_unbiased(x, y);
        for (int a = 0; a < 2; ++a) {
          const HermitianOp2& g0 = povm.effects[static_cast<std::size_t>(2 * a)];
          const HermitianOp2& g1 = povm.effects[static_cast<std::size_t>(2 * a + 1)];
          const double sgn = a == 0 ? 1.0 : -1.0;
          const double err = std::max(std::abs(g0.a0 + g1.a0 - 0.5),
                                      (g0.a + g1.a - 0.5 * sgn * x.bloch).cwiseAbs().maxCoeff());
          worst_marginal = std::max(worst_marginal, err);
        }
      }
    }
    rep["joint_measurability"] = {{"samples", cfg.jm_samples},
                                  {"feasible_pairs", feasible},
                                  {"criterion_disagreements", disagreements},
                                  {"worst_povm_marginal_error", worst_marginal}};
    violations += disagreements;
    if (worst_marginal > 1e-12) ++violations;
  }

  if (cfg.extra_distribution) {
    const TripartiteDistribution d = TripartiteDistribution::validated(*cfg.extra_distribution);
    const double margin = correlation_inequality_margin(d);
    rep["input_distribution"] = {{"margin", margin}, {"pass", margin >= -1e-12}};
    if (margin < -1e-12) ++violations;
  }

  rep["violations"] = violations;
  return rep;
}

json harness_json(const HarnessReport& rep) {
  json links = json::array();
  for (const HarnessLink& l : rep.links)
    links.push_back({{"name", l.name}, {"margin", l.margin}, {"pass", l.pass}});
  return json{{"eta1", rep.eta1},
              {"eta2", rep.eta2},
              {"tol", rep.tol},
              {"frame",
               {{"e1", vec_json(rep.frame.e1)},
                {"e2", vec_json(rep.frame.e2)},
                {"e3", vec_json(rep.frame.e3)},
                {"p", vec_json(rep.frame.p)},
                {"q", vec_json(rep.frame.q)},
                {"r", vec_json(rep.frame.r)},
                {"s", vec_json(rep.frame.s)},
                {"x1", rep.frame.x1},
                {"y1", rep.frame.y1},
                {"z2", rep.frame.z2},
                {"zp2", rep.frame.zp2},
                {"y2", rep.frame.y2},
                {"theta1", rep.frame.theta1},
                {"theta2", rep.frame.theta2},
                {"degenerate", rep.frame.degenerate}}},
              {"marginal_error", rep.marginal_error},
              {"rho", {{"trace", rep.rho_trace}, {"min_eig", rep.rho_min_eig}}},
              {"anticommutator_norm", rep.anticommutator_norm},
              {"correlators", {{"c1", rep.corr1}, {"c2", rep.corr2}, {"c3", rep.corr3}}},
              {"pairwise", {{"p12", rep.p12}, {"p13", rep.p13}, {"p23", rep.p23}}},
              {"clifford_sum", rep.clifford_sum},
              {"final_lhs", rep.final_lhs},
              {"links", std::move(links)},
              {"passed", rep.passed}};
}

json probe_json(const UniquenessProbeReport& rep) {
  json j{{"eta1", rep.eta1},
         {"eta2", rep.eta2},
         {"epsilon", rep.epsilon},
         {"directions", rep.directions},
         {"seed", rep.seed},
         {"violated_at_epsilon", rep.violated_at_epsilon},
         {"violated_at_epsilon_tenth", rep.violated_at_epsilon_tenth},
         {"fraction_at_epsilon", rep.fraction_at_epsilon},
         {"fraction_at_epsilon_tenth", rep.fraction_at_epsilon_tenth}};
  if (rep.sample_witness) {
    j["sample_witness"] = {{"n", vec_json(rep.sample_witness->first)},
                           {"m", vec_json(rep.sample_witness->second)}};
  } else {
    j["sample_witness"] = nullptr;
  }
  return j;
}

int report_alarms(const json& report) {
  if (report.contains("regression_alarms")) return report["regression_alarms"].get<int>();
  if (report.contains("violations")) return report["violations"].get<int>();
  return 0;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace chancomp

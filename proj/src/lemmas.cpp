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

#include "chancomp/lemmas.hpp"

#include <cmath>
#include <stdexcept>

namespace chancomp {

double AnticommutingSet::worst_deviation() const {
  double worst = 0.0;
  for (std::size_t n = 0; n < ops.size(); ++n)
    for (std::size_t m = n; m < ops.size(); ++m) {
      CMatrix dev = ops[n] * ops[m] + ops[m] * ops[n];
      if (n == m) dev -= 2.0 * CMatrix::Identity(dev.rows(), dev.cols());
      worst = std::max(worst, dev.norm());
    }
  return worst;
}

std::pair<double, double> clifford_bound(const AnticommutingSet& set, const CMatrix& rho,
                                         const std::vector<double>& x, double tol) {
  if (set.ops.empty()) throw std::invalid_argument("clifford_bound: empty set");
  if (x.size() != set.ops.size())
    throw std::invalid_argument("clifford_bound: coefficient count mismatch");
  if (set.worst_deviation() > 1e-10)
    throw std::invalid_argument("clifford_bound: anticommutation relations violated");
  if (rho.rows() != set.ops.front().rows())
    throw std::invalid_argument("clifford_bound: dimension mismatch");
  if (std::abs(rho.trace().real() - 1.0) > tol || min_eig(rho) < -tol)
    throw std::invalid_argument("clifford_bound: rho is not a state");

  double ex = 0.0;
  double norm_x = 0.0;
  double sum_sq = 0.0;
  for (std::size_t n = 0; n < set.ops.size(); ++n) {
    const double e = real_trace_product(rho, set.ops[n]);
    ex += x[n] * e;
    norm_x += x[n] * x[n];
    sum_sq += e * e;
  }
  return {std::abs(ex) - std::sqrt(norm_x), sum_sq};
}

TripartiteDistribution TripartiteDistribution::validated(const std::array<double, 8>& p) {
  double sum = 0.0;
  for (const double v : p) {
    if (v < -1e-12) throw std::invalid_argument("TripartiteDistribution: negative entry");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("TripartiteDistribution: entries do not sum to 1");
  return TripartiteDistribution{p};
}

std::tuple<double, double, double> tripartite_correlators(const TripartiteDistribution& d) {
  double p12 = 0.0, p23 = 0.0, p13 = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const double w = d.p[static_cast<std::size_t>(4 * a + 2 * b + c)];
        p12 += w * ((a ^ b) ? -1.0 : 1.0);
        p23 += w * ((b ^ c) ? -1.0 : 1.0);
        p13 += w * ((a ^ c) ? -1.0 : 1.0);
      }
  return {p12, p23, p13};
}

double correlation_inequality_margin(const TripartiteDistribution& d) {
  const auto [p12, p23, p13] = tripartite_correlators(d);
  return p23 - p12 - p13 + 1.0;
}

bool check_correlation_inequality(const TripartiteDistribution& d, double tol) {
  return correlation_inequality_margin(d) >= -tol;
}

bool jm_unbiased(const UnbiasedObservable& x, const UnbiasedObservable& y, double tol) {
  return jm_margins(x, y).first >= -tol;
}

std::pair<double, double> jm_margins(const UnbiasedObservable& x, const UnbiasedObservable& y) {
  const double dot = x.bloch.dot(y.bloch);
  const double quad = 1.0 + dot * dot - x.bloch.squaredNorm() - y.bloch.squaredNorm();
  const double sum = 2.0 - (x.bloch + y.bloch).norm() - (x.bloch - y.bloch).norm();
  return {quad, sum};
}

JointPovm joint_povm_unbiased(const UnbiasedObservable& x, const UnbiasedObservable& y) {
  if (x.bloch.norm() > 1.0 + 1e-12 || y.bloch.norm() > 1.0 + 1e-12)
    throw std::invalid_argument("joint_povm_unbiased: bloch vector exceeds the unit ball");
  if (!jm_unbiased(x, y))
    throw std::invalid_argument("joint_povm_unbiased: pair is not jointly measurable");

  const double lo = (x.bloch + y.bloch).norm() - 1.0;
  const double hi = 1.0 - (x.bloch - y.bloch).norm();
  const double gamma = 0.5 * (lo + hi);

  JointPovm povm;
  povm.gamma_window = {lo, hi};
  povm.gamma = gamma;
  int k = 0;
  for (const double a : {1.0, -1.0})
    for (const double b : {1.0, -1.0}) {
      povm.effects[static_cast<std::size_t>(k++)] =
          HermitianOp2{0.25 * (1.0 + a * b * gamma), 0.25 * (a * x.bloch + b * y.bloch)};
    }
  return povm;
}

}  // namespace chancomp

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

#include "chancomp/channels.hpp"

#include <cmath>
#include <algorithm>
#include <stdexcept>

#include "chancomp/rng.hpp"

namespace chancomp {

HermitianOp2 QubitChannel::apply(const HermitianOp2& h) const {
  const Eigen::Vector4d in(h.a0, h.a.x(), h.a.y(), h.a.z());
  const Eigen::Vector4d out = pt * in;
  return {out(0), {out(1), out(2), out(3)}};
}

bool QubitChannel::is_unital(double tol) const {
  return std::abs(pt(0, 0) - 1.0) <= tol && std::abs(pt(1, 0)) <= tol &&
         std::abs(pt(2, 0)) <= tol && std::abs(pt(3, 0)) <= tol;
}

QubitChannel noisy_identity(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("noisy_identity: eta outside [0, 1]");
  QubitChannel ch;
  ch.pt = Eigen::Vector4d(1.0, eta, eta, eta).asDiagonal();
  return ch;
}

QubitChannel compose(const QubitChannel& outer, const QubitChannel& inner) {
  QubitChannel ch;
  ch.pt = outer.pt * inner.pt;
  return ch;
}

QubitChannel transpose_map() {
  QubitChannel ch;
  ch.pt = Eigen::Vector4d(1.0, 1.0, -1.0, 1.0).asDiagonal();
  return ch;
}

QubitChannel schrodinger_dual(const QubitChannel& ch) {
  QubitChannel d;
  d.pt = ch.pt.transpose();
  return d;
}

CMatrix choi(const QubitChannel& ch) {
  // (id (x) ch*)(|phi+><phi+|) = (1/4) sum_{b,n} pt(b,n) sigma_b^T (x) sigma_n.
  CMatrix c = CMatrix::Zero(4, 4);
  for (int b = 0; b < 4; ++b)
    for (int n = 0; n < 4; ++n) {
      const double w = ch.pt(b, n);
      if (w == 0.0) continue;
      c += 0.25 * w * kron(pauli(b).transpose(), pauli(n));
    }
  return c;
}

bool is_cp(const QubitChannel& ch, double tol) { return min_eig(choi(ch)) >= -tol; }

Eigen::Matrix4d PositiveUnitalMap::pt() const {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = 1.0;
  for (int j = 0; j < 3; ++j) {
    m(0, j + 1) = v(j);
    for (int i = 0; i < 3; ++i) m(i + 1, j + 1) = a(j, i);
  }
  return m;
}

HermitianOp2 PositiveUnitalMap::apply(const HermitianOp2& h) const {
  return {h.a0 + v.dot(h.a), a.transpose() * h.a};
}

PositiveUnitalMap identity_map() { return {}; }

PositiveUnitalMap scaled_identity_map(double t) {
  PositiveUnitalMap th;
  th.a = t * Eigen::Matrix3d::Identity();
  return th;
}

PositiveUnitalMap transpose_unital_map() {
  PositiveUnitalMap th;
  th.a = Eigen::Vector3d(1.0, -1.0, 1.0).asDiagonal();
  return th;
}

PositiveUnitalMap rotation_map(const Eigen::Matrix3d& r) {
  PositiveUnitalMap th;
  th.a = r.transpose();  // apply() uses a^T, so the Bloch action is n -> r n
  return th;
}

namespace {

double pu_margin(const PositiveUnitalMap& th, const Vec3& n) {
  return 1.0 + th.v.dot(n) - (th.a.transpose() * n).norm();
}

Vec3 from_angles(double theta, double phi) {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

// Pattern search over spherical coordinates, minimising f.
template <typename F>
void refine_direction(const F& f, double& theta, double& phi, double& best) {
  double step = 0.3;
  while (step > 1e-8) {
    bool improved = false;
    const double cand[4][2] = {{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}};
    for (const auto& d : cand) {
      const double t = theta + d[0], p = phi + d[1];
      const double val = f(from_angles(t, p));
      if (val < best) {
        best = val;
        theta = t;
        phi = p;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }
}

}  // namespace

SphereScan positive_unital_margin(const PositiveUnitalMap& th, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("positive_unital_margin: samples < 1");
  SphereScan scan{pu_margin(th, Vec3(0, 0, 1)), Vec3(0, 0, 1)};
  auto consider = [&](const Vec3& n) {
    const double m = pu_margin(th, n);
    if (m < scan.worst_margin) {
      scan.worst_margin = m;
      scan.worst_n = n;
    }
  };
  for (const Vec3& n : fibonacci_sphere(samples)) consider(n);
  Rng rng(seed);
  for (int k = 0; k < samples; ++k) consider(rng.unit_vec());

  double theta = std::acos(std::clamp(scan.worst_n.z(), -1.0, 1.0));
  double phi = std::atan2(scan.worst_n.y(), scan.worst_n.x());
  refine_direction([&](const Vec3& n) { return pu_margin(th, n); }, theta, phi,
                   scan.worst_margin);
  scan.worst_n = from_angles(theta, phi);
  return scan;
}

bool is_positive_unital(const PositiveUnitalMap& th, int samples, std::uint64_t seed, double tol) {
  return positive_unital_margin(th, samples, seed).worst_margin >= -tol;
}

}  // namespace chancomp

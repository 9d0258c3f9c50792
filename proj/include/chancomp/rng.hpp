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

#include <cmath>
#include <cstdint>
#include <vector>

#include "chancomp/pauli.hpp"

namespace chancomp {

// xoshiro256** seeded through splitmix64. Hand-rolled rather than
// <random> distributions so that seeded sweeps are bit-reproducible
// across standard libraries and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& w : s_) {
      x += 0x9e3779b97f4a7c15ull;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
      w = z ^ (z >> 31);
    }
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (always consumes two uniforms).
  double normal() {
    double u;
    do {
      u = uniform();
    } while (u <= 0.0);
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
  }

  /// Uniform on the unit sphere.
  Vec3 unit_vec() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * M_PI);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
  }

  /// Uniform in the closed unit ball.
  Vec3 ball_vec() { return std::cbrt(uniform()) * unit_vec(); }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
};

/// Ginibre-sampled density matrix: G G^dag normalised to unit trace.
inline CMatrix random_state(Rng& rng, int dim) {
  CMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

/// Random unit vector orthogonal to v.
inline Vec3 random_unit_perp(Rng& rng, const Vec3& v) {
  while (true) {
    const Vec3 c = v.cross(rng.unit_vec());
    const double n = c.norm();
    if (n > 1e-6) return c / n;
  }
}

/// Proper rotation about a random axis by a uniform angle.
inline Eigen::Matrix3d random_rotation(Rng& rng) {
  const Vec3 axis = rng.unit_vec();
  const double angle = rng.uniform(0.0, 2.0 * M_PI);
  return Eigen::AngleAxisd(angle, axis).toRotationMatrix();
}

/// Deterministic near-uniform sphere covering with n points.
inline std::vector<Vec3> fibonacci_sphere(int n) {
  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(n));
  const double golden = M_PI * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < n; ++k) {
    const double z = 1.0 - (2.0 * k + 1.0) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * k;
    pts.push_back({r * std::cos(phi), r * std::sin(phi), z});
  }
  return pts;
}

}  // namespace chancomp

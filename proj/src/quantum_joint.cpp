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

#include "chancomp/quantum_joint.hpp"

#include <cmath>
#include <algorithm>
#include <stdexcept>

namespace chancomp {

namespace {

double region_value(double eta1, double eta2) {
  const double r = 1.0 - eta1 - eta2;
  return eta1 * eta1 + eta2 * eta2 + r * r;
}

void check_range(double eta1, double eta2, const char* who) {
  if (!(eta1 >= 0.0 && eta1 <= 1.0 && eta2 >= 0.0 && eta2 <= 1.0))
    throw std::invalid_argument(std::string(who) + ": eta outside [0, 1]");
}

}  // namespace

bool quantum_compatible(double eta1, double eta2, double tol) {
  check_range(eta1, eta2, "quantum_compatible");
  return region_value(eta1, eta2) <= 1.0 + tol;
}

double boundary_eta2(double eta1) {
  if (!(eta1 >= 0.0 && eta1 <= 1.0)) throw std::invalid_argument("boundary_eta2: eta1 outside [0, 1]");
  const double disc = (1.0 - eta1) * (1.0 + 3.0 * eta1);
  const double root = ((1.0 - eta1) + std::sqrt(std::max(disc, 0.0))) / 2.0;
  return std::clamp(root, 0.0, 1.0);
}

ClonerParams cloner_params(double eta1, double eta2) {
  check_range(eta1, eta2, "cloner_params");
  if (std::abs(region_value(eta1, eta2) - 1.0) > 1e-9)
    throw std::invalid_argument("cloner_params: point is not on the compatibility boundary");
  if (eta1 + eta2 < 1.0 - 1e-12)
    throw std::invalid_argument("cloner_params: requires eta1 + eta2 >= 1");
  return {std::sqrt(std::max(0.0, 1.0 - eta2)), std::sqrt(std::max(0.0, 1.0 - eta1))};
}

Isometry8x2 cloner_isometry(double eta1, double eta2) {
  const auto [alpha, beta] = cloner_params(eta1, eta2);
  Isometry8x2 v = Isometry8x2::Zero();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int p = 0; p < 2; ++p) {
    // alpha |p>_B |phi+>_CE: components |p 0 0> and |p 1 1>
    v(4 * p + 0, p) += alpha * inv_sqrt2;
    v(4 * p + 3, p) += alpha * inv_sqrt2;
    // beta |k>_B |p>_C |k>_E summed over k
    for (int k = 0; k < 2; ++k) v(4 * k + 2 * p + k, p) += beta * inv_sqrt2;
  }
  return v;
}

BilinearJointMap quantum_joint_channel(double eta1, double eta2, double tol) {
  if (!quantum_compatible(eta1, eta2, tol))
    throw std::invalid_argument("quantum_joint_channel: pair is not quantum compatible");

  const double top = boundary_eta2(eta1);
  const Isometry8x2 v = cloner_isometry(eta1, top);

  BilinearJointMap boundary;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const CMatrix z8 = kron(pauli_pair(mu, nu), pauli(0));
      const CMatrix out = v.adjoint() * z8 * v;
      const HermitianOp2 h = op2_from_matrix(out);
      boundary.coeff(0, mu, nu) = h.a0;
      boundary.coeff(1, mu, nu) = h.a.x();
      boundary.coeff(2, mu, nu) = h.a.y();
      boundary.coeff(3, mu, nu) = h.a.z();
    }

  // Precompose slot two with the noisy identity of ratio eta2 / top, which
  // scales the nu >= 1 columns. top = 0 only at eta1 = 1, where eta2 = 0.
  const double ratio = top > 1e-12 ? std::min(eta2 / top, 1.0) : 0.0;
  BilinearJointMap j = boundary;
  for (int alpha = 0; alpha < 4; ++alpha)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 1; nu < 4; ++nu) j.coeff(alpha, mu, nu) = ratio * boundary.coeff(alpha, mu, nu);
  return j;
}

}  // namespace chancomp

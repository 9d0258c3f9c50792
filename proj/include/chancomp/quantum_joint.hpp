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

#include "chancomp/joint_maps.hpp"
#include "chancomp/pauli.hpp"

namespace chancomp {

/// Closed-form region predicate: eta1^2 + eta2^2 + (1 - eta1 - eta2)^2 <= 1
/// (+ tol band).
bool quantum_compatible(double eta1, double eta2, double tol = kPosTol);

/// The larger root of eta2^2 + (eta1 - 1) eta2 + eta1^2 - eta1 = 0, clamped to
/// [0, 1]: the top of the compatible region above eta1.
double boundary_eta2(double eta1);

/// alpha = sqrt(1 - eta2), beta = sqrt(1 - eta1). On the boundary these
/// satisfy alpha^2 + alpha beta + beta^2 = 1 and alpha beta = eta1 + eta2 - 1.
struct ClonerParams {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Requires the boundary identity within 1e-9 and eta1 + eta2 >= 1.
ClonerParams cloner_params(double eta1, double eta2);

using Isometry8x2 = Eigen::Matrix<Complex, 8, 2>;

/// V|psi> = alpha |psi>_B |phi+>_CE + beta |psi>_C |phi+>_BE, factor order
/// B (x) C (x) E. An isometry exactly when (eta1, eta2) sits on the boundary.
Isometry8x2 cloner_isometry(double eta1, double eta2);

/// A completely positive joint map with marginals (Lambda_eta1, Lambda_eta2):
/// on the boundary Z -> V^dag (Z (x) id_E) V; in the interior the boundary
/// joint at (eta1, boundary_eta2(eta1)) with slot two precomposed by the
/// noisy identity of ratio eta2 / boundary_eta2(eta1). Throws when the pair
/// is not quantum compatible.
BilinearJointMap quantum_joint_channel(double eta1, double eta2, double tol = kPosTol);

}  // namespace chancomp

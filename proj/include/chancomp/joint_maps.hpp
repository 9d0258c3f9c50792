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

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "chancomp/channels.hpp"
#include "chancomp/pauli.hpp"

namespace chancomp {

/// A linear map L(C^2 (x) C^2) -> L(C^2) given by its real coefficient tensor:
/// J(sigma_mu (x) sigma_nu) = sum_alpha coeff(alpha, mu, nu) sigma_alpha.
struct BilinearJointMap {
  std::array<double, 64> c{};

  double coeff(int alpha, int mu, int nu) const { return c[idx(alpha, mu, nu)]; }
  double& coeff(int alpha, int mu, int nu) { return c[idx(alpha, mu, nu)]; }

  static int idx(int alpha, int mu, int nu) { return (alpha << 4) | (mu << 2) | nu; }
};

/// Bilinear extension applied to e (x) f.
HermitianOp2 eval_product(const BilinearJointMap& j, const HermitianOp2& e, const HermitianOp2& f);

/// Min eigenvalue of J((id + n.sigma)/2 (x) (id + m.sigma)/2); the quantity
/// the min-tensor certifier sweeps.
double product_min_eig(const BilinearJointMap& j, const Vec3& n, const Vec3& m);

/// Left and right marginal channels (slot traced against id).
std::pair<QubitChannel, QubitChannel> marginals(const BilinearJointMap& j);

/// The joint map with marginals (Lambda_eta1, Lambda_eta2) and cross block
/// coeff(0, i, j) = gamma * delta_ij. gamma defaults to eta1 * eta2, which the
/// positivity sweep certifies on the whole disk eta1^2 + eta2^2 <= 1.
BilinearJointMap construct_min_tensor_joint(double eta1, double eta2,
                                            std::optional<double> gamma = std::nullopt);

/// Closed-form region predicate: eta1^2 + eta2^2 <= 1 (+ tol band).
bool min_tensor_compatible(double eta1, double eta2, double tol = kPosTol);

struct CertifyOptions {
  int grid = 200;             // Fibonacci lattice size; grid^2 product pairs
  int random_samples = 10000; // extra seeded uniform pairs
  std::uint64_t seed = 1;
  double tol = 1e-9;
};

struct PositivityCertificate {
  bool certified = false;
  double worst_min_eig = 0.0;
  std::optional<std::pair<Vec3, Vec3>> witness;  // present iff violated
  long samples_used = 0;
  std::uint64_t seed = 0;
  int grid = 0;
  int random_samples = 0;
  double tol = 0.0;
};

/// Sweeps product effects (rank-one products generate the min tensor cone)
/// over all lattice pairs plus seeded random pairs, then polishes the worst
/// point by pattern search on spherical coordinates. Certified iff the worst
/// sampled eigenvalue stays above -tol; otherwise the polished witness is
/// reported and revalidates by direct evaluation.
PositivityCertificate certify_min_tensor_positivity(const BilinearJointMap& j,
                                                    const CertifyOptions& opt = {});

/// 8x8 Choi matrix of the Schroedinger dual J*: L(C^2) -> L(C^4).
/// Factor order: (input qubit copy) (x) (output qubit pair); trace 1 when
/// J is unital.
CMatrix joint_choi(const BilinearJointMap& j);

/// <phi-| (id (x) T)(X) |phi-> id for X in L(C^4); positive on products of
/// positives yet not completely positive.
HermitianOp2 singlet_phi(const CMatrix& x4);

/// The same map as a coefficient tensor.
BilinearJointMap phi_joint_map();

struct UniquenessProbeReport {
  double eta1 = 0.0, eta2 = 0.0;
  double epsilon = 0.0;
  int directions = 0;
  std::uint64_t seed = 0;
  int violated_at_epsilon = 0;
  int violated_at_epsilon_tenth = 0;
  double fraction_at_epsilon = 0.0;
  double fraction_at_epsilon_tenth = 0.0;
  std::optional<std::pair<Vec3, Vec3>> sample_witness;  // from the first violated direction
};

/// Adds a normalised perturbation delta (supported on the cross block, so the
/// marginals are untouched) to the boundary joint and asks the certifier.
PositivityCertificate perturbed_boundary_certificate(double eta1, double eta2,
                                                     const std::array<double, 36>& cross_delta,
                                                     double epsilon, const CertifyOptions& opt);

/// Evidence sweep for uniqueness of the boundary joint map: random cross-block
/// directions at strengths epsilon and epsilon/10. Report only; nothing here
/// asserts uniqueness.
UniquenessProbeReport uniqueness_probe(double eta1, double eta2, int directions, double epsilon,
                                       std::uint64_t seed, const CertifyOptions& opt = {});

}  // namespace chancomp

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

#include <string>
#include <vector>

#include "chancomp/channels.hpp"
#include "chancomp/joint_maps.hpp"
#include "chancomp/pauli.hpp"

namespace chancomp {

/// A channel L(C^2 (x) C^2) -> L(C^2): a bilinear coefficient tensor that is
/// unital and completely positive. Construction validates both and caches the
/// 8x8 Choi matrix.
class BipartiteToSingleChannel {
 public:
  explicit BipartiteToSingleChannel(const BilinearJointMap& map, double tol = kPosTol);

  const BilinearJointMap& map() const { return map_; }
  const CMatrix& choi() const { return choi_; }
  double choi_min_eig() const { return choi_min_eig_; }

 private:
  BilinearJointMap map_;
  CMatrix choi_;
  double choi_min_eig_;
};

struct AlmostQuantumDecomposition {
  BipartiteToSingleChannel psi;
  PositiveUnitalMap theta1;
  PositiveUnitalMap theta2;
};

/// Same closed form as the quantum region: eta1^2 + eta2^2 + (1-eta1-eta2)^2 <= 1.
bool almost_quantum_compatible(double eta1, double eta2, double tol = kPosTol);

/// Psi . (Theta1 (x) Theta2) as a coefficient tensor.
BilinearJointMap compose_decomposition(const AlmostQuantumDecomposition& d);

/// The probe state rho = (id (x) Psi)*(|phi-><phi-|) on C^2 (x) C^2 (x) C^2.
CMatrix probe_state(const BipartiteToSingleChannel& psi);

/// Frame data extracted from a pair of positive unital maps: an orthonormal
/// basis with e2 in V = V1 cap V2 and e1 in V1 (V_i the orthogonal complement
/// of Theta_i's identity-component vector, or all of R^3 when that vector
/// vanishes), plus the image directions and scalars
///   Theta1(e1.s) = x1 p.s
///   Theta1(e2.s) = y1 (sin t1 p + cos t1 q).s
///   Theta2(e3.s) = zp2 id + z2 r.s
///   Theta2(e2.s) = y2 (sin t2 r + cos t2 s).s
/// with p.q = r.s = 0, y >= 0, and q, s flipped so y1 cos t1 <= 0 and
/// y2 cos t2 <= 0.
struct ProofFrame {
  Vec3 e1, e2, e3;
  Vec3 p, q, r, s;
  double x1 = 0.0, y1 = 0.0, z2 = 0.0, zp2 = 0.0, y2 = 0.0;
  double theta1 = 0.0, theta2 = 0.0;
  bool degenerate = false;  // x1 or z2 vanished; downstream ratios are unbounded
};

ProofFrame proof_frame(const PositiveUnitalMap& theta1, const PositiveUnitalMap& theta2);

struct HarnessLink {
  std::string name;
  double margin;  // >= 0 means the link holds; equality links use -|error|
  bool pass;
};

struct HarnessReport {
  double eta1 = 0.0, eta2 = 0.0, tol = 0.0;
  ProofFrame frame;
  double marginal_error = 0.0;
  double rho_trace = 0.0, rho_min_eig = 0.0;
  double anticommutator_norm = 0.0;
  double corr1 = 0.0, corr2 = 0.0, corr3 = 0.0;  // the three Clifford correlators
  double p12 = 0.0, p13 = 0.0, p23 = 0.0;
  double clifford_sum = 0.0;
  double final_lhs = 0.0;  // eta1^2/x1^2 + eta2^2/z2^2 + (eta1 + eta2 - 1)^2
  std::vector<HarnessLink> links;
  bool passed = false;
};

/// Reproduces the compatibility-bound derivation for a concrete decomposition:
/// builds the tripartite probe state, the anticommuting triple
/// {e1.s (x) p.s (x) id, e3.s (x) id (x) r.s, id (x) q.s (x) s.s}, the
/// three squared correlators, the pairwise-correlation chain through the
/// tripartite distribution, and the final bound
/// eta1^2/x1^2 + eta2^2/z2^2 + (eta1 + eta2 - 1)^2 <= 1.
/// Requires marginals (Lambda_eta1, Lambda_eta2) within tol and
/// eta1 + eta2 >= 1.
HarnessReport compatibility_bound_harness(const AlmostQuantumDecomposition& d, double eta1, double eta2,
                               double tol = 1e-9);

}  // namespace chancomp

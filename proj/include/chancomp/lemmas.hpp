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
#include <tuple>
#include <utility>
#include <vector>

#include "chancomp/pauli.hpp"

namespace chancomp {

/// Self-adjoint operators with En Em + Em En = 2 delta_nm id.
struct AnticommutingSet {
  std::vector<CMatrix> ops;

  /// Worst Frobenius deviation from the anticommutation relations.
  double worst_deviation() const;
};

/// Lemma bound for an anticommuting set: returns
///   ( |tr[rho E(x)]| - |x| ,  sum_n tr[rho E_n]^2 ).
/// The first component is <= 0 and the second <= 1 for every state.
/// Rejects sets violating the anticommutation invariant and non-states.
std::pair<double, double> clifford_bound(const AnticommutingSet& set, const CMatrix& rho,
                                         const std::vector<double>& x, double tol = kPosTol);

/// p(a,b,c) over {0,1}^3, index 4a + 2b + c.
struct TripartiteDistribution {
  std::array<double, 8> p{};

  /// Validates nonnegativity and normalisation (within 1e-12).
  static TripartiteDistribution validated(const std::array<double, 8>& p);
};

/// Pairwise correlators (p12, p23, p13) with p_jk = sum p(a,b,c) (-1)^(x_j xor x_k).
std::tuple<double, double, double> tripartite_correlators(const TripartiteDistribution& d);

/// p23 - p12 - p13 + 1; nonnegative for every distribution.
double correlation_inequality_margin(const TripartiteDistribution& d);

bool check_correlation_inequality(const TripartiteDistribution& d, double tol = 0.0);

/// Unbiased qubit observable with effects (id +/- bloch.sigma)/2.
struct UnbiasedObservable {
  Vec3 bloch;
};

/// Joint measurability of two unbiased qubit observables:
/// |x|^2 + |y|^2 <= 1 + (x.y)^2, equivalently |x+y| + |x-y| <= 2.
bool jm_unbiased(const UnbiasedObservable& x, const UnbiasedObservable& y, double tol = 1e-12);

/// Margins of both criterion forms: ( 1 + (x.y)^2 - |x|^2 - |y|^2 ,
/// 2 - |x+y| - |x-y| ). Same sign away from the boundary.
std::pair<double, double> jm_margins(const UnbiasedObservable& x, const UnbiasedObservable& y);

struct JointPovm {
  // Outcome order (a, b) = (+,+), (+,-), (-,+), (-,-).
  std::array<HermitianOp2, 4> effects;
  std::pair<double, double> gamma_window;  // [ |x+y| - 1, 1 - |x-y| ]
  double gamma;                            // midpoint of the window
};

/// Four-outcome joint observable G(a,b) = (1/4)[(1 + a b gamma) id +
/// (a x + b y).sigma] with exact marginals; throws for infeasible pairs.
JointPovm joint_povm_unbiased(const UnbiasedObservable& x, const UnbiasedObservable& y);

}  // namespace chancomp

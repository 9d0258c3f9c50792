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

#include <cstdint>

#include "chancomp/pauli.hpp"

namespace chancomp {

/// A linear map on qubit operators in the Heisenberg picture, stored as its
/// 4x4 real Pauli transfer matrix: ch(sigma_nu) = sum_mu pt(mu, nu) sigma_mu.
/// Composition is matrix product; the Schroedinger dual is the transpose
/// (qubit Paulis are self-dual under the Hilbert-Schmidt pairing).
struct QubitChannel {
  Eigen::Matrix4d pt = Eigen::Matrix4d::Identity();

  HermitianOp2 apply(const HermitianOp2& h) const;
  bool is_unital(double tol = kUnitTol) const;
};

/// eta * A + (1 - eta)/2 tr[A] id, the mix of identity and complete
/// depolarisation; pt = diag(1, eta, eta, eta). Throws for eta outside [0, 1].
QubitChannel noisy_identity(double eta);

/// Heisenberg composition outer . inner.
QubitChannel compose(const QubitChannel& outer, const QubitChannel& inner);

/// Transpose in the z basis: pt = diag(1, 1, -1, 1).
QubitChannel transpose_map();

/// The Schroedinger-picture dual (acts on states).
QubitChannel schrodinger_dual(const QubitChannel& ch);

/// Choi matrix of the Schroedinger dual, (id (x) ch*)(|phi+><phi+|).
/// Trace-1 normalisation, so eigenvalue thresholds read as probabilities.
CMatrix choi(const QubitChannel& ch);

/// Complete positivity test: min eigenvalue of choi(ch) >= -tol.
bool is_cp(const QubitChannel& ch, double tol = kPosTol);

/// Unital positive map Theta(id) = id, Theta(sigma_i) = v_i id + sum_j a(i,j) sigma_j.
/// Positivity is equivalent to 1 + v.n >= |a^T n| for all unit n.
struct PositiveUnitalMap {
  Vec3 v = Vec3::Zero();
  Eigen::Matrix3d a = Eigen::Matrix3d::Identity();

  /// The 4x4 unital Pauli-transfer extension [[1, v^T], [0, a^T]].
  Eigen::Matrix4d pt() const;
  HermitianOp2 apply(const HermitianOp2& h) const;
};

PositiveUnitalMap identity_map();
/// Bloch shrink by t: a = t * id.
PositiveUnitalMap scaled_identity_map(double t);
/// v = 0, a = diag(1, -1, 1); the z-basis transpose as a positive unital map.
PositiveUnitalMap transpose_unital_map();
/// Proper rotation r in SO(3) acting on Bloch vectors: n.sigma -> (r n).sigma.
PositiveUnitalMap rotation_map(const Eigen::Matrix3d& r);

struct SphereScan {
  double worst_margin;  // min over sampled unit n of 1 + v.n - |a^T n|
  Vec3 worst_n;
};

/// Worst positivity margin over a Fibonacci lattice of `samples` points plus
/// the same number of seeded random points, then local pattern-search
/// refinement from the worst point.
SphereScan positive_unital_margin(const PositiveUnitalMap& th, int samples, std::uint64_t seed);

/// Sampled positivity certificate: worst margin >= -tol.
bool is_positive_unital(const PositiveUnitalMap& th, int samples, std::uint64_t seed,
                        double tol = kPosTol);

}  // namespace chancomp

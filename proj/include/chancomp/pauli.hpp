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

#include <complex>
#include <utility>

#include <Eigen/Dense>

namespace chancomp {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Default tolerances. Everything here is at most 8x8 dense, so near-machine
// precision is attainable and these are deliberately tight.
inline constexpr double kUnitTol = 1e-12;
inline constexpr double kEigTol = 1e-11;
inline constexpr double kPosTol = 1e-9;

/// A qubit observable a0*id + a.sigma. Its eigenvalues are a0 -/+ |a| exactly.
struct HermitianOp2 {
  double a0 = 0.0;
  Vec3 a = Vec3::Zero();

  CMatrix to_matrix() const;  // dense 2x2
};

/// Closed-form spectrum of a HermitianOp2, sorted ascending.
std::pair<double, double> eig2(const HermitianOp2& h);

/// True iff 0 <= h <= id within tol, i.e. a0 - |a| >= -tol and a0 + |a| <= 1 + tol.
bool is_effect(const HermitianOp2& h, double tol = kPosTol);

/// sigma_mu for mu in 0..3 with ordering (id, sigma_x, sigma_y, sigma_z).
/// Computational basis |0>, |1> are the +1/-1 eigenstates of sigma_z.
const CMatrix& pauli(int mu);
/// sigma_mu (x) sigma_nu, 4x4.
CMatrix pauli_pair(int mu, int nu);
/// sigma_beta (x) sigma_mu (x) sigma_nu, 8x8.
CMatrix pauli_triple(int beta, int mu, int nu);

/// a.sigma as a dense 2x2 matrix.
CMatrix bloch_op(const Vec3& a);

/// (|00> + |11>)/sqrt(2) and (|01> - |10>)/sqrt(2) in C^4, basis order
/// |00>, |01>, |10>, |11>.
const CVector& phi_plus();
const CVector& phi_minus();

/// Tensor product (left (x) right). Output dimension is capped at 8.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Smallest eigenvalue of a Hermitian matrix, absolute error <= tol.
/// Cyclic complex Jacobi; converged when the off-diagonal Frobenius norm
/// drops below tol. Throws on non-Hermitian input or non-convergence.
double min_eig(const CMatrix& h, double tol = kEigTol);

/// All eigenvalues (ascending) via the same Jacobi sweep.
Eigen::VectorXd eig_all(const CMatrix& h, double tol = kEigTol);

/// Pauli coefficients of a 2x2 Hermitian matrix: a0 = tr(m)/2, a_i = tr(sigma_i m)/2.
HermitianOp2 op2_from_matrix(const CMatrix& m);

/// Re tr[a b] for equally sized square matrices.
double real_trace_product(const CMatrix& a, const CMatrix& b);

}  // namespace chancomp

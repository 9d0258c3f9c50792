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

#include "chancomp/pauli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace chancomp {

namespace {

std::array<CMatrix, 4> make_paulis() {
  const Complex i(0.0, 1.0);
  std::array<CMatrix, 4> s;
  for (auto& m : s) m = CMatrix::Zero(2, 2);
  s[0](0, 0) = 1;
  s[0](1, 1) = 1;
  s[1](0, 1) = 1;
  s[1](1, 0) = 1;
  s[2](0, 1) = -i;
  s[2](1, 0) = i;
  s[3](0, 0) = 1;
  s[3](1, 1) = -1;
  return s;
}

void check_pauli_index(int mu) {
  if (mu < 0 || mu > 3) throw std::invalid_argument("pauli index out of range");
}

}  // namespace

CMatrix HermitianOp2::to_matrix() const {
  CMatrix m = a0 * CMatrix::Identity(2, 2);
  m += bloch_op(a);
  return m;
}

std::pair<double, double> eig2(const HermitianOp2& h) {
  const double r = h.a.norm();
  return {h.a0 - r, h.a0 + r};
}

bool is_effect(const HermitianOp2& h, double tol) {
  const auto [lo, hi] = eig2(h);
  return lo >= -tol && hi <= 1.0 + tol;
}

const CMatrix& pauli(int mu) {
  static const std::array<CMatrix, 4> s = make_paulis();
  check_pauli_index(mu);
  return s[mu];
}

CMatrix pauli_pair(int mu, int nu) { return kron(pauli(mu), pauli(nu)); }

CMatrix pauli_triple(int beta, int mu, int nu) {
  return kron(kron(pauli(beta), pauli(mu)), pauli(nu));
}

CMatrix bloch_op(const Vec3& a) {
  CMatrix m = CMatrix::Zero(2, 2);
  const Complex i(0.0, 1.0);
  m(0, 0) = a.z();
  m(1, 1) = -a.z();
  m(0, 1) = a.x() - i * a.y();
  m(1, 0) = a.x() + i * a.y();
  return m;
}

const CVector& phi_plus() {
  static const CVector v = [] {
    CVector u = CVector::Zero(4);
    u(0) = u(3) = 1.0 / std::sqrt(2.0);
    return u;
  }();
  return v;
}

const CVector& phi_minus() {
  static const CVector v = [] {
    CVector u = CVector::Zero(4);
    u(1) = 1.0 / std::sqrt(2.0);
    u(2) = -u(1);
    return u;
  }();
  return v;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const auto ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  if (ra * rb > 8 || ca * cb > 8) throw std::invalid_argument("kron: output dimension exceeds 8");
  CMatrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < ca; ++j) out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  return out;
}

namespace {

void check_hermitian(const CMatrix& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("min_eig: matrix is not square");
  const double scale = 1.0 + h.cwiseAbs().maxCoeff();
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-9 * scale)
    throw std::invalid_argument("min_eig: matrix is not Hermitian");
}

double off_norm(const CMatrix& a) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One cyclic sweep of two-sided Jacobi rotations. Each rotation zeroes the
// (p,q) entry of the Hermitian working matrix.
void jacobi_sweep(CMatrix& a) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index p = 0; p < n - 1; ++p) {
    for (Eigen::Index q = p + 1; q < n; ++q) {
      const Complex apq = a(p, q);
      const double mag = std::abs(apq);
      if (mag < 1e-300) continue;
      const Complex phase = apq / mag;
      const double app = a(p, p).real();
      const double aqq = a(q, q).real();
      const double tau = (aqq - app) / (2.0 * mag);
      const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = t * c;
      const Complex sp = s * phase;
      // A <- U^dag A U with U = [[c, s*phase], [-s*conj(phase), c]] on (p,q).
      for (Eigen::Index k = 0; k < n; ++k) {
        const Complex akp = a(k, p), akq = a(k, q);
        a(k, p) = c * akp - std::conj(sp) * akq;
        a(k, q) = sp * akp + c * akq;
      }
      for (Eigen::Index k = 0; k < n; ++k) {
        const Complex apk = a(p, k), aqk = a(q, k);
        a(p, k) = c * apk - sp * aqk;
        a(q, k) = std::conj(sp) * apk + c * aqk;
      }
      a(p, q) = 0.0;
      a(q, p) = 0.0;
      a(p, p) = Complex(a(p, p).real(), 0.0);
      a(q, q) = Complex(a(q, q).real(), 0.0);
    }
  }
}

Eigen::VectorXd jacobi_eigvals(const CMatrix& h, double tol) {
  check_hermitian(h);
  CMatrix a = h;
  constexpr int kMaxSweeps = 64;
  int sweep = 0;
  while (off_norm(a) >= tol) {
    if (++sweep > kMaxSweeps) throw std::runtime_error("min_eig: Jacobi iteration did not converge");
    jacobi_sweep(a);
  }
  Eigen::VectorXd ev = a.diagonal().real();
  std::sort(ev.data(), ev.data() + ev.size());
  return ev;
}

}  // namespace

double min_eig(const CMatrix& h, double tol) { return jacobi_eigvals(h, tol)(0); }

Eigen::VectorXd eig_all(const CMatrix& h, double tol) { return jacobi_eigvals(h, tol); }

HermitianOp2 op2_from_matrix(const CMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("op2_from_matrix: expected 2x2");
  HermitianOp2 h;
  h.a0 = 0.5 * (m(0, 0) + m(1, 1)).real();
  h.a.x() = 0.5 * (m(0, 1) + m(1, 0)).real();
  h.a.y() = 0.5 * ((m(1, 0) - m(0, 1)) * Complex(0.0, -1.0)).real();
  h.a.z() = 0.5 * (m(0, 0) - m(1, 1)).real();
  return h;
}

double real_trace_product(const CMatrix& a, const CMatrix& b) {
  return (a.cwiseProduct(b.transpose())).sum().real();
}

}  // namespace chancomp

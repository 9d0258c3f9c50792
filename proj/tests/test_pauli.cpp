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

#include <doctest.h>

#include <cmath>

#include <Eigen/Eigenvalues>

#include "chancomp/pauli.hpp"
#include "chancomp/rng.hpp"

using namespace chancomp;

namespace {

// Independent eigensolver route used to check the in-repo Jacobi sweep.
Eigen::VectorXd eigen_oracle(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  REQUIRE(solver.info() == Eigen::Success);
  return solver.eigenvalues();
}

CMatrix swap_gate() {
  CMatrix s = CMatrix::Zero(4, 4);
  s(0, 0) = s(3, 3) = 1;
  s(1, 2) = s(2, 1) = 1;
  return s;
}

}  // namespace

TEST_CASE("eig2 closed form") {
  CHECK(eig2({1.0, Vec3::Zero()}) == std::pair{1.0, 1.0});
  CHECK(eig2({0.0, {0, 0, 1}}) == std::pair{-1.0, 1.0});

  const double r = 1.0 / std::sqrt(2.0);
  const auto [lo, hi] = eig2({0.5, {r, 0, 0}});
  CHECK(lo == doctest::Approx(-0.20711).epsilon(1e-4));
  CHECK(hi == doctest::Approx(1.20711).epsilon(1e-4));
}

TEST_CASE("eig2 trace and determinant identities") {
  Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    const HermitianOp2 h{rng.uniform(-2, 2), rng.uniform(0.0, 2.0) * rng.unit_vec()};
    const auto [lo, hi] = eig2(h);
    CHECK(lo + hi == doctest::Approx(2.0 * h.a0).epsilon(1e-14));
    CHECK(lo * hi == doctest::Approx(h.a0 * h.a0 - h.a.squaredNorm()).epsilon(1e-13));
  }
}

TEST_CASE("is_effect") {
  CHECK(is_effect({1.0, Vec3::Zero()}));
  CHECK(is_effect({0.5, {0, 0, 0.5}}));  // (id + sz)/2
  CHECK_FALSE(is_effect({2.0, Vec3::Zero()}));
  CHECK_FALSE(is_effect({0.5, {0, 0, 0.6}}));
}

TEST_CASE("pauli trace orthogonality over all 256 two-qubit pairs") {
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int mup = 0; mup < 4; ++mup)
        for (int nup = 0; nup < 4; ++nup) {
          const double tr = real_trace_product(pauli_pair(mu, nu), pauli_pair(mup, nup));
          const double want = (mu == mup && nu == nup) ? 4.0 : 0.0;
          CHECK(tr == doctest::Approx(want).epsilon(1e-14));
        }
}

TEST_CASE("singlet correlators are -delta_ij") {
  const CVector& s = phi_minus();
  for (int i = 1; i < 4; ++i)
    for (int j = 1; j < 4; ++j) {
      const Complex v = s.adjoint() * pauli_pair(i, j) * s;
      CHECK(v.real() == doctest::Approx(i == j ? -1.0 : 0.0).epsilon(1e-14));
      CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-14));
    }
}

TEST_CASE("kron basics") {
  CHECK((kron(pauli(0), pauli(0)) - CMatrix::Identity(4, 4)).norm() == 0.0);

  const CMatrix zz = kron(pauli(3), pauli(3));
  const Eigen::Vector4d want(1, -1, -1, 1);
  for (int i = 0; i < 4; ++i) CHECK(zz(i, i).real() == want(i));

  // diag(1,0) (x) diag(0,1): entrywise product oracle.
  CMatrix p0 = CMatrix::Zero(2, 2);
  p0(0, 0) = 1;
  CMatrix p1 = CMatrix::Zero(2, 2);
  p1(1, 1) = 1;
  const CMatrix prod = kron(p0, p1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          CHECK(prod(2 * i + k, 2 * j + l) == p0(i, j) * p1(k, l));

  CHECK_THROWS_AS(kron(CMatrix::Identity(4, 4), CMatrix::Identity(4, 4)), std::invalid_argument);
}

TEST_CASE("min_eig on fixed matrices") {
  CHECK(min_eig(CMatrix::Identity(4, 4)) == doctest::Approx(1.0).epsilon(1e-12));

  const CMatrix proj = phi_plus() * phi_plus().adjoint();
  CHECK(min_eig(proj) == doctest::Approx(0.0).epsilon(1e-12));

  // SWAP spectrum is {1, 1, 1, -1}; checked against the independent solver.
  const CMatrix swap = swap_gate();
  CHECK(min_eig(swap) == doctest::Approx(-1.0).epsilon(1e-12));
  const Eigen::VectorXd oracle = eigen_oracle(swap);
  const Eigen::VectorXd ours = eig_all(swap);
  for (int i = 0; i < 4; ++i) CHECK(ours(i) == doctest::Approx(oracle(i)).epsilon(1e-12));
}

TEST_CASE("min_eig agrees with the independent solver on random Hermitian input") {
  Rng rng(11);
  for (const int dim : {2, 3, 4, 5, 8}) {
    for (int k = 0; k < 40; ++k) {
      CMatrix g(dim, dim);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
      const CMatrix h = 0.5 * (g + g.adjoint());
      const Eigen::VectorXd oracle = eigen_oracle(h);
      const Eigen::VectorXd ours = eig_all(h, 1e-12);
      REQUIRE(ours.size() == oracle.size());
      for (int i = 0; i < dim; ++i)
        CHECK(std::abs(ours(i) - oracle(i)) <= 1e-10 * (1.0 + std::abs(oracle(i))));
    }
  }
}

TEST_CASE("min_eig matches eig2 on embedded 2x2 operators") {
  Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    const HermitianOp2 h{rng.uniform(-1, 1), rng.uniform(0.0, 1.5) * rng.unit_vec()};
    CHECK(min_eig(h.to_matrix()) == doctest::Approx(eig2(h).first).epsilon(1e-11));
  }
}

TEST_CASE("min_eig rejects non-Hermitian input") {
  CMatrix bad = CMatrix::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(min_eig(bad), std::invalid_argument);
}

TEST_CASE("op2_from_matrix round trip") {
  Rng rng(17);
  for (int k = 0; k < 50; ++k) {
    const HermitianOp2 h{rng.uniform(-1, 1), rng.uniform(0.0, 1.0) * rng.unit_vec()};
    const HermitianOp2 back = op2_from_matrix(h.to_matrix());
    CHECK(back.a0 == doctest::Approx(h.a0).epsilon(1e-14));
    CHECK((back.a - h.a).norm() == doctest::Approx(0.0).epsilon(1e-14));
  }
}

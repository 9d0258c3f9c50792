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

#include "chancomp/joint_maps.hpp"
#include "chancomp/quantum_joint.hpp"
#include "chancomp/rng.hpp"

using namespace chancomp;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// The map X (x) Y -> X tr[Y]/2 as a coefficient tensor.
BilinearJointMap trace_out_second() {
  BilinearJointMap j;
  for (int mu = 0; mu < 4; ++mu) j.coeff(mu, mu, 0) = 1.0;
  return j;
}

CertifyOptions quick_opts(std::uint64_t seed = 2024) {
  CertifyOptions opt;
  opt.grid = 80;
  opt.random_samples = 1000;
  opt.seed = seed;
  return opt;
}

}  // namespace

TEST_CASE("eval_product reproduces the construction's closed form") {
  const BilinearJointMap j = construct_min_tensor_joint(0.6, 0.7);

  const HermitianOp2 unit{1.0, Vec3::Zero()};
  const HermitianOp2 out = eval_product(j, unit, unit);
  CHECK(out.a0 == 1.0);
  CHECK(out.a.norm() == 0.0);

  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const Vec3 n = rng.unit_vec();
    const Vec3 m = rng.unit_vec();

    const HermitianOp2 left = eval_product(j, {0.5, 0.5 * n}, unit);
    CHECK(left.a0 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK((left.a - 0.5 * 0.6 * n).norm() <= 1e-15);

    // (1/4)[(1 + g n.m) id + (eta1 n + eta2 m).sigma] with g = eta1 eta2.
    const HermitianOp2 both = eval_product(j, {0.5, 0.5 * n}, {0.5, 0.5 * m});
    CHECK(both.a0 == doctest::Approx(0.25 * (1.0 + 0.42 * n.dot(m))).epsilon(1e-14));
    CHECK((both.a - 0.25 * (0.6 * n + 0.7 * m)).norm() <= 1e-14);
  }
}

TEST_CASE("marginals of constructed joints") {
  for (const double g : {0.0, 0.3, 1.0}) {
    const auto [left, right] = marginals(construct_min_tensor_joint(0.6, 0.7, g));
    CHECK((left.pt - noisy_identity(0.6).pt).norm() == 0.0);
    CHECK((right.pt - noisy_identity(0.7).pt).norm() == 0.0);
  }

  const auto [l2, r2] = marginals(trace_out_second());
  CHECK((l2.pt - Eigen::Matrix4d::Identity()).norm() == 0.0);
  CHECK((r2.pt - noisy_identity(0.0).pt).norm() == 0.0);

  const auto [l3, r3] = marginals(phi_joint_map());
  CHECK((l3.pt - noisy_identity(0.0).pt).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK((r3.pt - noisy_identity(0.0).pt).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("construction edge cases and frozen spot values") {
  // eta = (1/sqrt2, 1/sqrt2), default gamma = 1/2, n = m = e_z:
  // (1/4)[1.5 id + sqrt2 sigma_z], min eigenvalue (1.5 - sqrt2)/4.
  const BilinearJointMap j = construct_min_tensor_joint(kInvSqrt2, kInvSqrt2);
  const double got = product_min_eig(j, {0, 0, 1}, {0, 0, 1});
  CHECK(got == doctest::Approx((1.5 - std::sqrt(2.0)) / 4.0).epsilon(1e-12));
  CHECK(got == doctest::Approx(0.02145).epsilon(1e-3));

  // (1, 0) keeps only the trace-out blocks.
  const BilinearJointMap j10 = construct_min_tensor_joint(1.0, 0.0);
  for (int alpha = 0; alpha < 4; ++alpha)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        CHECK(j10.coeff(alpha, mu, nu) == trace_out_second().coeff(alpha, mu, nu));

  // Doubled cross coefficient 2 eta1 eta2 at the symmetric boundary point,
  // evaluated at n.m = -1/2: (1/4)(1/2 - 1/sqrt2).
  const BilinearJointMap jp = construct_min_tensor_joint(kInvSqrt2, kInvSqrt2, 1.0);
  const Vec3 n(1, 0, 0);
  const Vec3 m(-0.5, std::sqrt(3.0) / 2.0, 0);
  CHECK(product_min_eig(jp, n, m) ==
        doctest::Approx(0.25 * (0.5 - kInvSqrt2)).epsilon(1e-12));
  CHECK(product_min_eig(jp, n, m) == doctest::Approx(-0.05178).epsilon(1e-3));
}

TEST_CASE("min_tensor_compatible predicate") {
  CHECK(min_tensor_compatible(kInvSqrt2, kInvSqrt2));
  CHECK_FALSE(min_tensor_compatible(1.0, 1.0));
  CHECK(min_tensor_compatible(1.0, 0.0));
  CHECK_THROWS_AS(min_tensor_compatible(1.2, 0.0), std::invalid_argument);
}

TEST_CASE("certifier verdicts inside and outside the disk") {
  const auto inside = certify_min_tensor_positivity(construct_min_tensor_joint(0.6, 0.6),
                                                    quick_opts());
  CHECK(inside.certified);
  CHECK(inside.worst_min_eig >= -1e-9);
  CHECK_FALSE(inside.witness.has_value());

  const auto outside = certify_min_tensor_positivity(construct_min_tensor_joint(0.72, 0.72),
                                                     quick_opts());
  CHECK_FALSE(outside.certified);
  REQUIRE(outside.witness.has_value());
  // For gamma = eta1 eta2 and s = eta1^2 + eta2^2 > 1 the eigenvalue
  // (1/4)[1 + gamma c - sqrt(s + 2 gamma c)] is convex in c = n.m with its
  // minimum (1 - s)/8 at c = (1 - s)/(2 gamma), near-orthogonal directions.
  const double s = 2.0 * 0.72 * 0.72;
  const double want = (1.0 - s) / 8.0;
  const double want_c = (1.0 - s) / (2.0 * 0.72 * 0.72);
  CHECK(outside.worst_min_eig == doctest::Approx(want).epsilon(1e-9));
  CHECK(outside.witness->first.dot(outside.witness->second) ==
        doctest::Approx(want_c).epsilon(1e-3));
  // The reported witness revalidates by direct evaluation.
  CHECK(product_min_eig(construct_min_tensor_joint(0.72, 0.72), outside.witness->first,
                        outside.witness->second) == doctest::Approx(outside.worst_min_eig));
}

TEST_CASE("certifier finds the doubled-coefficient violation") {
  const auto cert = certify_min_tensor_positivity(
      construct_min_tensor_joint(kInvSqrt2, kInvSqrt2, 1.0), quick_opts());
  CHECK_FALSE(cert.certified);
  REQUIRE(cert.witness.has_value());
  // Global minimum of (1/4)[(1+c) - sqrt(1+c)] over c = n.m is -1/16 at c = -3/4.
  CHECK(cert.worst_min_eig == doctest::Approx(-0.0625).epsilon(1e-6));
  CHECK(cert.witness->first.dot(cert.witness->second) == doctest::Approx(-0.75).epsilon(1e-3));
}

TEST_CASE("certifier stays above -1e-9 across the seeded disk") {
  Rng rng(71);
  for (int k = 0; k < 25; ++k) {
    double e1, e2;
    do {
      e1 = rng.uniform(0.0, 1.0);
      e2 = rng.uniform(0.0, 1.0);
    } while (e1 * e1 + e2 * e2 > 1.0);
    const auto cert =
        certify_min_tensor_positivity(construct_min_tensor_joint(e1, e2), quick_opts(k));
    CHECK(cert.certified);
    CHECK(cert.worst_min_eig >= -1e-9);
  }
}

TEST_CASE("joint choi of the trace-out map is phi+ (x) id/2") {
  // Factor order: input copy (x) slot1 (x) slot2; the entangled pair lives
  // on (copy, slot1) and slot2 carries id/2.
  const CMatrix got = joint_choi(trace_out_second());
  const CMatrix want = kron(phi_plus() * phi_plus().adjoint(), 0.5 * CMatrix::Identity(2, 2));
  CHECK((got - want).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK(min_eig(got) >= -1e-12);
  CHECK(got.trace().real() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("non-CP of the min-tensor-only joint") {
  const CMatrix c = joint_choi(construct_min_tensor_joint(kInvSqrt2, kInvSqrt2));
  CHECK(min_eig(c) < -1e-3);
  CHECK(min_eig(c) == doctest::Approx(-0.0625).epsilon(1e-10));

  const CMatrix cq = joint_choi(quantum_joint_channel(2.0 / 3.0, 2.0 / 3.0));
  CHECK(min_eig(cq) >= -1e-9);
}

TEST_CASE("singlet phi map") {
  const CMatrix bell = phi_plus() * phi_plus().adjoint();
  const HermitianOp2 out = singlet_phi(bell);
  CHECK(out.a0 == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(out.a.norm() == 0.0);

  // Projector pair along z maps to zero.
  const CMatrix pz = kron(0.5 * (pauli(0) + pauli(3)), 0.5 * (pauli(0) + pauli(3)));
  CHECK(singlet_phi(pz).a0 == doctest::Approx(0.0).epsilon(1e-14));

  Rng rng(5);
  for (int k = 0; k < 1000; ++k) {
    const HermitianOp2 a{rng.uniform(0.0, 1.0), Vec3(rng.uniform(0.0, 1.0) * rng.unit_vec())};
    const HermitianOp2 b{rng.uniform(0.0, 1.0), Vec3(rng.uniform(0.0, 1.0) * rng.unit_vec())};
    if (eig2(a).first < 0.0 || eig2(b).first < 0.0) continue;
    const HermitianOp2 out2 = singlet_phi(kron(a.to_matrix(), b.to_matrix()));
    CHECK(out2.a0 >= -1e-12);
  }
}

TEST_CASE("phi joint map: min-tensor positive but not completely positive") {
  const BilinearJointMap phi = phi_joint_map();
  CHECK(phi.coeff(0, 0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(phi.coeff(0, 1, 1) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(phi.coeff(0, 2, 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(phi.coeff(0, 3, 3) == doctest::Approx(-1.0).epsilon(1e-14));

  const auto cert = certify_min_tensor_positivity(phi, quick_opts());
  CHECK(cert.certified);
  CHECK(min_eig(joint_choi(phi)) == doctest::Approx(-0.25).epsilon(1e-12));
}

TEST_CASE("quantum compatible implies min-tensor compatible on the grid") {
  for (int i = 0; i <= 100; ++i)
    for (int j = 0; j <= 100; ++j) {
      const double e1 = i / 100.0, e2 = j / 100.0;
      if (quantum_compatible(e1, e2)) CHECK(min_tensor_compatible(e1, e2));
    }
}

TEST_CASE("cross-block perturbations keep the marginals") {
  Rng rng(83);
  std::array<double, 36> delta;
  for (double& d : delta) d = rng.normal();
  BilinearJointMap j = construct_min_tensor_joint(0.5, 0.5);
  int k = 0;
  for (int alpha = 0; alpha < 4; ++alpha)
    for (int i = 1; i < 4; ++i)
      for (int jj = 1; jj < 4; ++jj) j.coeff(alpha, i, jj) += 0.01 * delta[k++];
  const auto [left, right] = marginals(j);
  CHECK((left.pt - noisy_identity(0.5).pt).norm() == 0.0);
  CHECK((right.pt - noisy_identity(0.5).pt).norm() == 0.0);
}

TEST_CASE("certifier agrees with a dense brute-force sweep on random maps") {
  Rng rng(101);
  for (int trial = 0; trial < 6; ++trial) {
    BilinearJointMap j = construct_min_tensor_joint(rng.uniform(0.4, 0.9), rng.uniform(0.4, 0.9));
    for (int alpha = 0; alpha < 4; ++alpha)
      for (int i = 1; i < 4; ++i)
        for (int jj = 1; jj < 4; ++jj) j.coeff(alpha, i, jj) += 0.1 * rng.normal();

    const auto cert = certify_min_tensor_positivity(j, quick_opts(trial));

    // Independent route: exhaustive coarse lattice without refinement.
    double brute = std::numeric_limits<double>::infinity();
    const auto dense = fibonacci_sphere(400);
    for (const Vec3& n : dense)
      for (const Vec3& m : dense) brute = std::min(brute, product_min_eig(j, n, m));

    // The refined certificate can only sharpen the brute-force minimum.
    CHECK(cert.worst_min_eig <= brute + 1e-12);
    // And cannot overshoot it by more than the lattice resolution.
    CHECK(cert.worst_min_eig >= brute - 0.05);
    if (brute < -1e-3) CHECK_FALSE(cert.certified);
  }
}

TEST_CASE("uniqueness probe at the symmetric boundary point") {
  CertifyOptions opt = quick_opts();
  opt.grid = 60;
  opt.random_samples = 500;

  // Zero perturbation leaves the boundary joint certified.
  const std::array<double, 36> zero{};
  CHECK(perturbed_boundary_certificate(kInvSqrt2, kInvSqrt2, zero, 1e-2, opt).certified);

  // A bare +epsilon on coeff(0,1,1) already breaks positivity.
  std::array<double, 36> delta{};
  delta[0] = 1.0;  // (alpha=0, i=1, j=1)
  const auto cert = perturbed_boundary_certificate(kInvSqrt2, kInvSqrt2, delta, 1e-2, opt);
  CHECK_FALSE(cert.certified);
  REQUIRE(cert.witness.has_value());

  const auto rep = uniqueness_probe(kInvSqrt2, kInvSqrt2, 20, 1e-2, 99, opt);
  CHECK(rep.directions == 20);
  CHECK(rep.violated_at_epsilon >= 0);
  CHECK(rep.violated_at_epsilon <= 20);
  CHECK(rep.fraction_at_epsilon == doctest::Approx(rep.violated_at_epsilon / 20.0));

  // Determinism of the probe.
  const auto rep2 = uniqueness_probe(kInvSqrt2, kInvSqrt2, 20, 1e-2, 99, opt);
  CHECK(rep.violated_at_epsilon == rep2.violated_at_epsilon);
  CHECK(rep.violated_at_epsilon_tenth == rep2.violated_at_epsilon_tenth);

  CHECK_THROWS_AS(uniqueness_probe(0.5, 0.5, 5, 1e-2, 1, opt), std::invalid_argument);
}

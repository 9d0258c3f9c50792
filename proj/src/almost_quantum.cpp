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

#include "chancomp/almost_quantum.hpp"

#include <cmath>
#include <algorithm>
#include <limits>
#include <stdexcept>

#include "chancomp/lemmas.hpp"
#include "chancomp/quantum_joint.hpp"

namespace chancomp {

BipartiteToSingleChannel::BipartiteToSingleChannel(const BilinearJointMap& map, double tol)
    : map_(map), choi_(joint_choi(map)) {
  for (int alpha = 0; alpha < 4; ++alpha) {
    const double want = alpha == 0 ? 1.0 : 0.0;
    if (std::abs(map.coeff(alpha, 0, 0) - want) > tol)
      throw std::invalid_argument("BipartiteToSingleChannel: map is not unital");
  }
  choi_min_eig_ = min_eig(choi_);
  if (choi_min_eig_ < -tol)
    throw std::invalid_argument("BipartiteToSingleChannel: map is not completely positive");
}

bool almost_quantum_compatible(double eta1, double eta2, double tol) {
  // Identical closed form to the quantum region.
  return quantum_compatible(eta1, eta2, tol);
}

BilinearJointMap compose_decomposition(const AlmostQuantumDecomposition& d) {
  const Eigen::Matrix4d t1 = d.theta1.pt();
  const Eigen::Matrix4d t2 = d.theta2.pt();
  BilinearJointMap out;
  for (int alpha = 0; alpha < 4; ++alpha)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        double acc = 0.0;
        for (int mup = 0; mup < 4; ++mup)
          for (int nup = 0; nup < 4; ++nup)
            acc += d.psi.map().coeff(alpha, mup, nup) * t1(mup, mu) * t2(nup, nu);
        out.coeff(alpha, mu, nu) = acc;
      }
  return out;
}

CMatrix probe_state(const BipartiteToSingleChannel& psi) {
  // tr[rho (sigma_b (x) Z)] = <phi-| sigma_b (x) Psi(Z) |phi->, so the Pauli
  // coefficients of rho are Psi's with the sign of the singlet correlators.
  CMatrix rho = CMatrix::Zero(8, 8);
  for (int b = 0; b < 4; ++b)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        const double w = psi.map().coeff(b, m, n);
        if (w == 0.0) continue;
        const double sign = b == 0 ? 1.0 : -1.0;
        rho += 0.125 * sign * w * pauli_triple(b, m, n);
      }
  return rho;
}

namespace {

constexpr double kFrameTol = 1e-9;

Vec3 canonical_sign(const Vec3& v) {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(v(i)) > 1e-9) return v(i) > 0.0 ? v : Vec3(-v);
  }
  return v;
}

// First fallback axis (in the given order) whose projection onto the plane
// orthogonal to `normal` survives; `normal` may be null for no constraint.
Vec3 project_fallback(const std::vector<Vec3>& order, const Vec3* normal) {
  for (const Vec3& axis : order) {
    Vec3 cand = axis;
    if (normal) cand -= cand.dot(*normal) * (*normal);
    const double n = cand.norm();
    if (n > 1e-6) return cand / n;
  }
  throw std::logic_error("proof_frame: no usable fallback axis");
}

Vec3 any_unit_perp(const Vec3& p) {
  const std::vector<Vec3> axes = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (const Vec3& axis : axes) {
    const Vec3 c = p.cross(axis);
    if (c.norm() > 0.5) return c.normalized();
  }
  return {1, 0, 0};
}

struct PlaneImage {
  double norm;        // length of the Bloch image
  double along;       // component along the reference direction
  double across;      // component along the flipped orthogonal direction (<= 0)
  double angle;       // atan2(along, across)
  Vec3 orth;          // the orthogonal direction after the sign flip
};

PlaneImage decompose_image(const Vec3& image, const Vec3& ref) {
  PlaneImage out;
  out.norm = image.norm();
  out.along = image.dot(ref);
  Vec3 res = image - out.along * ref;
  const double rn = res.norm();
  out.orth = rn > kFrameTol ? Vec3(res / rn) : any_unit_perp(ref);
  out.across = image.dot(out.orth);
  if (out.across > 0.0) {
    out.orth = -out.orth;
    out.across = -out.across;
  }
  out.angle = (out.norm > kFrameTol) ? std::atan2(out.along, out.across) : 0.0;
  return out;
}

}  // namespace

ProofFrame proof_frame(const PositiveUnitalMap& theta1, const PositiveUnitalMap& theta2) {
  const Vec3 v1 = theta1.v;
  const Vec3 v2 = theta2.v;
  const bool z1 = v1.norm() <= kUnitTol;
  const bool z2v = v2.norm() <= kUnitTol;
  const std::vector<Vec3> e2_order = {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  const std::vector<Vec3> e1_order = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

  ProofFrame f{};
  const Vec3 n1 = z1 ? Vec3::Zero() : Vec3(v1.normalized());
  const Vec3 n2 = z2v ? Vec3::Zero() : Vec3(v2.normalized());

  // e2 spans (or lies in) V = V1 cap V2.
  if (z1 && z2v) {
    f.e2 = project_fallback(e2_order, nullptr);
  } else if (z1) {
    f.e2 = project_fallback(e2_order, &n2);
  } else if (z2v) {
    f.e2 = project_fallback(e2_order, &n1);
  } else {
    const Vec3 cross = n1.cross(n2);
    if (cross.norm() > 1e-9) {
      f.e2 = canonical_sign(cross.normalized());
    } else {
      f.e2 = project_fallback(e2_order, &n1);  // parallel v's share a plane
    }
  }

  // e1 in V1, orthogonal to e2.
  if (z1) {
    f.e1 = project_fallback(e1_order, &f.e2);
  } else {
    f.e1 = canonical_sign(n1.cross(f.e2).normalized());
  }
  f.e3 = f.e1.cross(f.e2);

  // Theta1 images. e1, e2 lie in V1 so these have no identity component.
  const Vec3 img1 = theta1.apply({0.0, f.e1}).a;
  f.x1 = img1.norm();
  f.p = f.x1 > kFrameTol ? Vec3(img1 / f.x1) : f.e1;

  const PlaneImage d1 = decompose_image(theta1.apply({0.0, f.e2}).a, f.p);
  f.y1 = d1.norm;
  f.q = d1.orth;
  f.theta1 = d1.angle;

  // Theta2 images. e3 may pick up an identity component; e2 lies in V2.
  const HermitianOp2 i3 = theta2.apply({0.0, f.e3});
  f.zp2 = i3.a0;
  f.z2 = i3.a.norm();
  f.r = f.z2 > kFrameTol ? Vec3(i3.a / f.z2) : f.e3;

  const PlaneImage d2 = decompose_image(theta2.apply({0.0, f.e2}).a, f.r);
  f.y2 = d2.norm;
  f.s = d2.orth;
  f.theta2 = d2.angle;

  f.degenerate = f.x1 <= kFrameTol || f.z2 <= kFrameTol;
  return f;
}

namespace {

void push_link(HarnessReport& rep, const std::string& name, double margin, double tol) {
  const bool pass = std::isfinite(margin) && margin >= -tol;
  rep.links.push_back({name, margin, pass});
}

double safe_ratio_sq(double num, double den) {
  if (std::abs(den) < 1e-300) return std::numeric_limits<double>::infinity();
  const double r = num / den;
  return r * r;
}

}  // namespace

HarnessReport compatibility_bound_harness(const AlmostQuantumDecomposition& d, double eta1, double eta2,
                               double tol) {
  if (!(eta1 >= 0.0 && eta1 <= 1.0 && eta2 >= 0.0 && eta2 <= 1.0))
    throw std::invalid_argument("compatibility_bound_harness: eta outside [0, 1]");
  if (eta1 + eta2 < 1.0 - 1e-12)
    throw std::invalid_argument("compatibility_bound_harness: requires eta1 + eta2 >= 1");

  const BilinearJointMap composed = compose_decomposition(d);
  const auto [left, right] = marginals(composed);
  const double err1 = (left.pt - noisy_identity(eta1).pt).cwiseAbs().maxCoeff();
  const double err2 = (right.pt - noisy_identity(eta2).pt).cwiseAbs().maxCoeff();
  const double marg_err = std::max(err1, err2);
  if (marg_err > tol)
    throw std::invalid_argument("compatibility_bound_harness: marginals do not match (Lambda_eta1, Lambda_eta2)");

  HarnessReport rep;
  rep.eta1 = eta1;
  rep.eta2 = eta2;
  rep.tol = tol;
  rep.marginal_error = marg_err;
  rep.frame = proof_frame(d.theta1, d.theta2);
  const ProofFrame& f = rep.frame;

  push_link(rep, "marginals", -marg_err, tol);
  push_link(rep, "psi_is_channel", d.psi.choi_min_eig(), tol);
  const double th_margin =
      std::min(positive_unital_margin(d.theta1, 400, 0xC0FFEE).worst_margin,
               positive_unital_margin(d.theta2, 400, 0xC0FFEE).worst_margin);
  push_link(rep, "thetas_positive_unital", th_margin, tol);

  const CMatrix rho = probe_state(d.psi);
  rep.rho_trace = rho.trace().real();
  rep.rho_min_eig = min_eig(rho);
  push_link(rep, "rho_valid_state", std::min(rep.rho_min_eig, -std::abs(rep.rho_trace - 1.0)), tol);

  const CMatrix id2 = pauli(0);
  const CMatrix op1 = kron(kron(bloch_op(f.e1), bloch_op(f.p)), id2);
  const CMatrix op2 = kron(kron(bloch_op(f.e3), id2), bloch_op(f.r));
  const CMatrix op3 = kron(kron(id2, bloch_op(f.q)), bloch_op(f.s));
  AnticommutingSet triple{{op1, op2, op3}};
  rep.anticommutator_norm = triple.worst_deviation();
  push_link(rep, "anticommuting_triple", -rep.anticommutator_norm, tol);

  rep.corr1 = real_trace_product(rho, op1);
  rep.corr2 = real_trace_product(rho, op2);
  rep.corr3 = real_trace_product(rho, op3);

  const double want1 = safe_ratio_sq(eta1, f.x1);
  const double want2 = safe_ratio_sq(eta2, f.z2);
  push_link(rep, "first_correlator_identity", -std::abs(rep.corr1 * rep.corr1 - want1), tol);
  push_link(rep, "second_correlator_identity", -std::abs(rep.corr2 * rep.corr2 - want2), tol);

  // Tripartite distribution over the effects built from e2, q, s.
  const CMatrix eff1[2] = {0.5 * (id2 + bloch_op(f.e2)), 0.5 * (id2 - bloch_op(f.e2))};
  const CMatrix eff2[2] = {0.5 * (id2 + bloch_op(f.q)), 0.5 * (id2 - bloch_op(f.q))};
  const CMatrix eff3[2] = {0.5 * (id2 + bloch_op(f.s)), 0.5 * (id2 - bloch_op(f.s))};
  double p[2][2][2];
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        p[a][b][c] = real_trace_product(rho, kron(kron(eff1[a], eff2[b]), eff3[c]));

  rep.p12 = rep.p13 = rep.p23 = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        rep.p12 += p[a][b][c] * ((a ^ b) ? -1.0 : 1.0);
        rep.p13 += p[a][b][c] * ((a ^ c) ? -1.0 : 1.0);
        rep.p23 += p[a][b][c] * ((b ^ c) ? -1.0 : 1.0);
      }

  const double yc1 = f.y1 * std::cos(f.theta1);
  const double yc2 = f.y2 * std::cos(f.theta2);
  const double p12_expected = std::abs(yc1) > 1e-9 ? -eta1 / yc1
                                                   : std::numeric_limits<double>::quiet_NaN();
  const double p13_expected = std::abs(yc2) > 1e-9 ? -eta2 / yc2
                                                   : std::numeric_limits<double>::quiet_NaN();
  push_link(rep, "p12_identity", -std::abs(rep.p12 - p12_expected), tol);
  push_link(rep, "p13_identity", -std::abs(rep.p13 - p13_expected), tol);
  push_link(rep, "p12_lower", rep.p12 - eta1, tol);
  push_link(rep, "p13_lower", rep.p13 - eta2, tol);
  push_link(rep, "p23_consistency", -std::abs(rep.p23 - rep.corr3), tol);
  push_link(rep, "correlation_chain", rep.p23 - (rep.p12 + rep.p13 - 1.0), tol);
  push_link(rep, "p23_lower_vs_etas", rep.p23 - (eta1 + eta2 - 1.0), tol);

  rep.clifford_sum = rep.corr1 * rep.corr1 + rep.corr2 * rep.corr2 + rep.corr3 * rep.corr3;
  push_link(rep, "clifford_sum", 1.0 - rep.clifford_sum, tol);
  push_link(rep, "zp2_range", std::min(f.zp2, 1.0 - f.zp2), tol);
  // Positivity of the thetas bounds every frame scalar.
  const double range_margin =
      std::min(std::min(1.0 - f.x1, 1.0 - f.y1),
               std::min(1.0 - f.y2, (1.0 - std::abs(f.zp2)) - f.z2));
  push_link(rep, "frame_scalar_ranges", range_margin, tol);

  const double excess = eta1 + eta2 - 1.0;
  rep.final_lhs = want1 + want2 + excess * excess;
  push_link(rep, "final_bound", 1.0 - rep.final_lhs, tol);

  rep.passed = true;
  for (const auto& link : rep.links) rep.passed = rep.passed && link.pass;
  return rep;
}

}  // namespace chancomp

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

#include "chancomp/joint_maps.hpp"

#include <cmath>
#include <algorithm>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "chancomp/parallel.hpp"
#include "chancomp/rng.hpp"

namespace chancomp {

HermitianOp2 eval_product(const BilinearJointMap& j, const HermitianOp2& e, const HermitianOp2& f) {
  const double u[4] = {e.a0, e.a.x(), e.a.y(), e.a.z()};
  const double w[4] = {f.a0, f.a.x(), f.a.y(), f.a.z()};
  double out[4] = {0.0, 0.0, 0.0, 0.0};
  for (int mu = 0; mu < 4; ++mu) {
    if (u[mu] == 0.0) continue;
    for (int nu = 0; nu < 4; ++nu) {
      const double uw = u[mu] * w[nu];
      if (uw == 0.0) continue;
      for (int alpha = 0; alpha < 4; ++alpha) out[alpha] += uw * j.coeff(alpha, mu, nu);
    }
  }
  return {out[0], {out[1], out[2], out[3]}};
}

double product_min_eig(const BilinearJointMap& j, const Vec3& n, const Vec3& m) {
  const HermitianOp2 e{0.5, 0.5 * n};
  const HermitianOp2 f{0.5, 0.5 * m};
  return eig2(eval_product(j, e, f)).first;
}

std::pair<QubitChannel, QubitChannel> marginals(const BilinearJointMap& j) {
  QubitChannel left, right;
  for (int alpha = 0; alpha < 4; ++alpha)
    for (int mu = 0; mu < 4; ++mu) {
      left.pt(alpha, mu) = j.coeff(alpha, mu, 0);
      right.pt(alpha, mu) = j.coeff(alpha, 0, mu);
    }
  return {left, right};
}

BilinearJointMap construct_min_tensor_joint(double eta1, double eta2,
                                            std::optional<double> gamma) {
  if (!(eta1 >= 0.0 && eta1 <= 1.0 && eta2 >= 0.0 && eta2 <= 1.0))
    throw std::invalid_argument("construct_min_tensor_joint: eta outside [0, 1]");
  const double g = gamma.value_or(eta1 * eta2);
  BilinearJointMap j;
  j.coeff(0, 0, 0) = 1.0;
  for (int i = 1; i < 4; ++i) {
    j.coeff(i, i, 0) = eta1;
    j.coeff(i, 0, i) = eta2;
    j.coeff(0, i, i) = g;
  }
  return j;
}

bool min_tensor_compatible(double eta1, double eta2, double tol) {
  if (!(eta1 >= 0.0 && eta1 <= 1.0 && eta2 >= 0.0 && eta2 <= 1.0))
    throw std::invalid_argument("min_tensor_compatible: eta outside [0, 1]");
  return eta1 * eta1 + eta2 * eta2 <= 1.0 + tol;
}

namespace {

struct PairSample {
  double value;
  long index;  // deterministic tie-break when merging parallel chunks
  Vec3 n, m;
};

Vec3 from_angles(double theta, double phi) {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

// Pattern search on the four spherical coordinates of (n, m).
void refine_pair(const BilinearJointMap& j, Vec3& n, Vec3& m, double& best) {
  double ang[4] = {std::acos(std::clamp(n.z(), -1.0, 1.0)), std::atan2(n.y(), n.x()),
                   std::acos(std::clamp(m.z(), -1.0, 1.0)), std::atan2(m.y(), m.x())};
  double step = 0.3;
  while (step > 1e-8) {
    bool improved = false;
    for (int k = 0; k < 4; ++k) {
      for (const double sgn : {1.0, -1.0}) {
        double trial[4] = {ang[0], ang[1], ang[2], ang[3]};
        trial[k] += sgn * step;
        const Vec3 tn = from_angles(trial[0], trial[1]);
        const Vec3 tm = from_angles(trial[2], trial[3]);
        const double val = product_min_eig(j, tn, tm);
        if (val < best) {
          best = val;
          for (int q = 0; q < 4; ++q) ang[q] = trial[q];
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  n = from_angles(ang[0], ang[1]);
  m = from_angles(ang[2], ang[3]);
}

}  // namespace

PositivityCertificate certify_min_tensor_positivity(const BilinearJointMap& j,
                                                    const CertifyOptions& opt) {
  if (opt.grid < 8) throw std::invalid_argument("certify_min_tensor_positivity: grid < 8");
  if (opt.random_samples < 0)
    throw std::invalid_argument("certify_min_tensor_positivity: random_samples < 0");

  const std::vector<Vec3> lattice = fibonacci_sphere(opt.grid);
  const long pairs = static_cast<long>(opt.grid) * opt.grid;

  PairSample worst{product_min_eig(j, lattice[0], lattice[0]), 0, lattice[0], lattice[0]};
  std::mutex merge_mutex;
  parallel_chunks(pairs, [&](int, long lo, long hi) {
    PairSample local{std::numeric_limits<double>::infinity(), -1, lattice[0], lattice[0]};
    for (long k = lo; k < hi; ++k) {
      const Vec3& n = lattice[static_cast<std::size_t>(k / opt.grid)];
      const Vec3& m = lattice[static_cast<std::size_t>(k % opt.grid)];
      const double v = product_min_eig(j, n, m);
      if (v < local.value) local = {v, k, n, m};
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    if (local.value < worst.value || (local.value == worst.value && local.index < worst.index))
      worst = local;
  });

  Rng rng(opt.seed);
  for (int k = 0; k < opt.random_samples; ++k) {
    const Vec3 n = rng.unit_vec();
    const Vec3 m = rng.unit_vec();
    const double v = product_min_eig(j, n, m);
    if (v < worst.value) worst = {v, pairs + k, n, m};
  }

  refine_pair(j, worst.n, worst.m, worst.value);

  PositivityCertificate cert;
  cert.worst_min_eig = worst.value;
  cert.samples_used = pairs + opt.random_samples;
  cert.seed = opt.seed;
  cert.grid = opt.grid;
  cert.random_samples = opt.random_samples;
  cert.tol = opt.tol;
  cert.certified = worst.value >= -opt.tol;
  if (!cert.certified) cert.witness = std::make_pair(worst.n, worst.m);
  return cert;
}

CMatrix joint_choi(const BilinearJointMap& j) {
  // (1/8) sum coeff(b, m, n) sigma_b^T (x) sigma_m (x) sigma_n.
  CMatrix c = CMatrix::Zero(8, 8);
  for (int b = 0; b < 4; ++b)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        const double w = j.coeff(b, m, n);
        if (w == 0.0) continue;
        c += 0.125 * w * kron(pauli(b).transpose(), pauli_pair(m, n));
      }
  return c;
}

HermitianOp2 singlet_phi(const CMatrix& x4) {
  if (x4.rows() != 4 || x4.cols() != 4) throw std::invalid_argument("singlet_phi: expected 4x4");
  // (id (x) T)(X) indexwise: X'[(i,j),(k,l)] = X[(i,l),(k,j)].
  CMatrix xt(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int jj = 0; jj < 2; ++jj)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) xt(2 * i + jj, 2 * k + l) = x4(2 * i + l, 2 * k + jj);
  const Complex val = phi_minus().adjoint() * xt * phi_minus();
  return {val.real(), Vec3::Zero()};
}

BilinearJointMap phi_joint_map() {
  BilinearJointMap j;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const HermitianOp2 out = singlet_phi(pauli_pair(mu, nu));
      j.coeff(0, mu, nu) = out.a0;
    }
  return j;
}

PositivityCertificate perturbed_boundary_certificate(double eta1, double eta2,
                                                     const std::array<double, 36>& cross_delta,
                                                     double epsilon, const CertifyOptions& opt) {
  BilinearJointMap j = construct_min_tensor_joint(eta1, eta2);
  double norm = 0.0;
  for (const double d : cross_delta) norm += d * d;
  norm = std::sqrt(norm);
  if (norm == 0.0) norm = 1.0;
  int k = 0;
  for (int alpha = 0; alpha < 4; ++alpha)
    for (int i = 1; i < 4; ++i)
      for (int jj = 1; jj < 4; ++jj) j.coeff(alpha, i, jj) += epsilon * cross_delta[k++] / norm;
  return certify_min_tensor_positivity(j, opt);
}

UniquenessProbeReport uniqueness_probe(double eta1, double eta2, int directions, double epsilon,
                                       std::uint64_t seed, const CertifyOptions& opt) {
  if (std::abs(eta1 * eta1 + eta2 * eta2 - 1.0) > 1e-12)
    throw std::invalid_argument("uniqueness_probe: (eta1, eta2) must sit on eta1^2 + eta2^2 = 1");
  if (!(epsilon > 0.0)) throw std::invalid_argument("uniqueness_probe: epsilon must be positive");

  UniquenessProbeReport rep;
  rep.eta1 = eta1;
  rep.eta2 = eta2;
  rep.epsilon = epsilon;
  rep.directions = directions;
  rep.seed = seed;

  Rng rng(seed);
  for (int d = 0; d < directions; ++d) {
    std::array<double, 36> delta;
    for (double& x : delta) x = rng.normal();
    const auto at_eps = perturbed_boundary_certificate(eta1, eta2, delta, epsilon, opt);
    if (!at_eps.certified) {
      ++rep.violated_at_epsilon;
      if (!rep.sample_witness) rep.sample_witness = at_eps.witness;
    }
    const auto at_tenth = perturbed_boundary_certificate(eta1, eta2, delta, epsilon / 10.0, opt);
    if (!at_tenth.certified) ++rep.violated_at_epsilon_tenth;
  }
  if (directions > 0) {
    rep.fraction_at_epsilon = static_cast<double>(rep.violated_at_epsilon) / directions;
    rep.fraction_at_epsilon_tenth = static_cast<double>(rep.violated_at_epsilon_tenth) / directions;
  }
  return rep;
}

}  // namespace chancomp

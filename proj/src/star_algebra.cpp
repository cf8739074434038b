// Copyright 2026 The qsym Authors
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

#include "qsym/star_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qsym/errors.hpp"

namespace qsym {

AlgebraElement::AlgebraElement(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw DimensionError("algebra elements are square matrices");
  }
}

AlgebraElement AlgebraElement::identity(int dim) {
  return AlgebraElement(ComplexMatrix::Identity(dim, dim));
}

AlgebraElement AlgebraElement::zero(int dim) {
  return AlgebraElement(ComplexMatrix::Zero(dim, dim));
}

namespace {

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

void check_same_dim(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("algebra elements of dimensions " +
                         std::to_string(a.dim()) + " and " +
                         std::to_string(b.dim()));
  }
}

}  // namespace

double AlgebraElement::norm() const { return operator_norm(m_); }

double AlgebraElement::projection_defect() const {
  return std::max(operator_norm(m_ - m_.adjoint()), operator_norm(m_ - m_ * m_));
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  check_same_dim(*this, o);
  return AlgebraElement(m_ + o.m_);
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  check_same_dim(*this, o);
  return AlgebraElement(m_ - o.m_);
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  check_same_dim(*this, o);
  return AlgebraElement(m_ * o.m_);
}

AlgebraElement AlgebraElement::operator*(std::complex<double> s) const {
  return AlgebraElement(m_ * s);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_same_dim(*this, o);
  m_ += o.m_;
  return *this;
}

double commutator_norm(const AlgebraElement& a, const AlgebraElement& b) {
  check_same_dim(a, b);
  return operator_norm(a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

ComplexMatrix random_unitary(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix z(dim, dim);
  for (int c = 0; c < dim; ++c) {
    for (int r = 0; r < dim; ++r) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(r, c) = {re, im};
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < dim; ++c) {
    const auto d = r(c, c);
    if (std::abs(d) > 0.0) q.col(c) *= d / std::abs(d);
  }
  return q;
}

namespace {

std::complex<double> root_of_unity(int order, int power) {
  const double angle = 2.0 * std::numbers::pi * power / order;
  return {std::cos(angle), std::sin(angle)};
}

// p_k = (1/n) sum_{j=0}^{n-1} w^{-kj} X^j for a unitary X with X^n = 1.
std::vector<AlgebraElement> spectral_projections(const ComplexMatrix& x, int n) {
  const auto dim = x.rows();
  std::vector<ComplexMatrix> powers{ComplexMatrix::Identity(dim, dim)};
  for (int j = 1; j < n; ++j) powers.push_back(powers.back() * x);
  std::vector<AlgebraElement> out;
  for (int k = 1; k <= n; ++k) {
    ComplexMatrix acc = ComplexMatrix::Zero(dim, dim);
    for (int j = 0; j < n; ++j) {
      acc += root_of_unity(n, -((k * j) % n)) * powers[static_cast<std::size_t>(j)];
    }
    out.emplace_back(acc / static_cast<double>(n));
  }
  return out;
}

FreeProductRep make_rep(int n, int m, const ComplexMatrix& mixing,
                        std::optional<std::uint64_t> seed) {
  const int dim = n * m;
  ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix v0 = ComplexMatrix::Zero(dim, dim);
  for (int idx = 0; idx < dim; ++idx) {
    u(idx, idx) = root_of_unity(n, idx / m);
    v0(idx, idx) = root_of_unity(m, idx % m);
  }
  const ComplexMatrix v = mixing * v0 * mixing.adjoint();
  FreeProductRep rep;
  rep.n = n;
  rep.m = m;
  rep.seed = seed;
  rep.p = spectral_projections(u, n);
  rep.q = spectral_projections(v, m);
  return rep;
}

void check_orders(int n, int m) {
  if (n < 2 || m < 2) {
    throw UsageError("free product model needs n, m >= 2, got n = " +
                     std::to_string(n) + ", m = " + std::to_string(m));
  }
}

}  // namespace

FreeProductRep rep_free_product(int n, int m, std::uint64_t seed) {
  check_orders(n, m);
  return make_rep(n, m, random_unitary(n * m, seed), seed);
}

FreeProductRep rep_commuting_product(int n, int m) {
  check_orders(n, m);
  return make_rep(n, m, ComplexMatrix::Identity(n * m, n * m), std::nullopt);
}

MagicUnitary assemble_witness(const Permutation& sigma, const Permutation& tau,
                              const FreeProductRep& rep) {
  if (sigma.size() != tau.size()) {
    throw DimensionError("sigma and tau act on different vertex sets");
  }
  if (static_cast<int>(rep.p.size()) != rep.n ||
      static_cast<int>(rep.q.size()) != rep.m) {
    throw DimensionError("representation projection counts do not match n, m");
  }
  const int r = sigma.size();
  const int dim = rep.dim();
  MagicUnitary u;
  u.r = r;
  u.dim = dim;
  u.seed = rep.seed;
  u.entries.assign(static_cast<std::size_t>(r) * r, AlgebraElement::zero(dim));
  for (int l = 1; l <= rep.m; ++l) {
    const auto tau_l = tau.pow(l);
    for (int i = 0; i < r; ++i) {
      u.entries[static_cast<std::size_t>(i) * r + tau_l(i)] +=
          rep.q[static_cast<std::size_t>(l - 1)];
    }
  }
  for (int k = 1; k <= rep.n; ++k) {
    const auto sigma_k = sigma.pow(k);
    for (int i = 0; i < r; ++i) {
      u.entries[static_cast<std::size_t>(i) * r + sigma_k(i)] +=
          rep.p[static_cast<std::size_t>(k - 1)];
    }
  }
  for (int i = 0; i < r; ++i) {
    auto& diag = u.entries[static_cast<std::size_t>(i) * r + i];
    diag = diag - AlgebraElement::identity(dim);
  }
  return u;
}

MagicUnitary build_witness(const Graph& g, const Permutation& sigma,
                           const Permutation& tau, const FreeProductRep& rep) {
  if (sigma.size() != g.n_vertices() || tau.size() != g.n_vertices()) {
    throw DimensionError("sigma and tau must act on the graph's vertices");
  }
  if (sigma.is_identity()) throw UsageError("hypothesis failed: sigma is trivial");
  if (tau.is_identity()) throw UsageError("hypothesis failed: tau is trivial");
  if (!is_automorphism(g, sigma)) {
    throw UsageError("hypothesis failed: sigma is not an automorphism");
  }
  if (!is_automorphism(g, tau)) {
    throw UsageError("hypothesis failed: tau is not an automorphism");
  }
  if (!are_disjoint(sigma, tau)) {
    throw UsageError("hypothesis failed: sigma and tau are not disjoint");
  }
  if (sigma.order() != rep.n) {
    throw UsageError("hypothesis failed: order(sigma) = " +
                     std::to_string(sigma.order()) + " but the model has " +
                     std::to_string(rep.n) + " projections p_k");
  }
  if (tau.order() != rep.m) {
    throw UsageError("hypothesis failed: order(tau) = " +
                     std::to_string(tau.order()) + " but the model has " +
                     std::to_string(rep.m) + " projections q_l");
  }
  return assemble_witness(sigma, tau, rep);
}

MagicUnitary classical_magic_unitary(const Permutation& pi, int dim) {
  MagicUnitary u;
  u.r = pi.size();
  u.dim = dim;
  u.entries.assign(static_cast<std::size_t>(u.r) * u.r, AlgebraElement::zero(dim));
  for (int i = 0; i < u.r; ++i) {
    u.entries[static_cast<std::size_t>(i) * u.r + pi(i)] =
        AlgebraElement::identity(dim);
  }
  return u;
}

WitnessReport certify_witness(const Graph& g, const MagicUnitary& u,
                              const Tolerances& tol) {
  if (u.r != g.n_vertices()) {
    throw DimensionError("magic unitary is " + std::to_string(u.r) + " x " +
                         std::to_string(u.r) + " but the graph has " +
                         std::to_string(g.n_vertices()) + " vertices");
  }
  const int r = u.r;
  const auto one = AlgebraElement::identity(u.dim);
  WitnessReport report;
  report.seed = u.seed;

  for (const auto& e : u.entries) {
    report.projection_defect = std::max(report.projection_defect, e.projection_defect());
  }
  for (int i = 0; i < r; ++i) {
    auto row = AlgebraElement::zero(u.dim);
    auto col = AlgebraElement::zero(u.dim);
    for (int j = 0; j < r; ++j) {
      row += u(i, j);
      col += u(j, i);
    }
    report.rowsum_defect = std::max(report.rowsum_defect, (row - one).norm());
    report.colsum_defect = std::max(report.colsum_defect, (col - one).norm());
  }
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      auto diff = AlgebraElement::zero(u.dim);
      for (int k = 0; k < r; ++k) {
        if (g.adjacent(k, j)) diff += u(i, k);
        if (g.adjacent(i, k)) diff = diff - u(k, j);
      }
      report.commutation_defect = std::max(report.commutation_defect, diff.norm());
    }
  }

  // Entries repeat heavily (sums over the same index sets), so compare the
  // distinct ones only.
  std::vector<const AlgebraElement*> distinct;
  for (const auto& e : u.entries) {
    const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                  [&](const AlgebraElement* d) { return *d == e; });
    if (!seen) distinct.push_back(&e);
  }
  for (std::size_t a = 0; a < distinct.size(); ++a) {
    for (std::size_t b = a + 1; b < distinct.size(); ++b) {
      report.noncomm_certificate = std::max(
          report.noncomm_certificate, commutator_norm(*distinct[a], *distinct[b]));
    }
  }

  report.pass = report.projection_defect <= tol.algebraic &&
                report.rowsum_defect <= tol.algebraic &&
                report.colsum_defect <= tol.algebraic &&
                report.commutation_defect <= tol.algebraic;
  return report;
}

namespace {

std::vector<int> cycle_minima(const Permutation& p) {
  std::vector<int> reps;
  for (const auto& cycle : p.cycles()) reps.push_back(cycle.front());
  return reps;
}

std::vector<double> recover(const MagicUnitary& u, const Permutation& perm,
                            const std::vector<int>& reps,
                            const std::vector<AlgebraElement>& targets) {
  std::vector<double> residuals;
  for (std::size_t k = 1; k <= targets.size(); ++k) {
    const auto perm_k = perm.pow(static_cast<std::int64_t>(k));
    auto product = AlgebraElement::identity(u.dim);
    for (int s : reps) product = product * u(s, perm_k(s));
    residuals.push_back((product - targets[k - 1]).norm());
  }
  return residuals;
}

}  // namespace

RecoveryReport recovery_products(const MagicUnitary& u, const Permutation& sigma,
                                 const Permutation& tau,
                                 const FreeProductRep& rep,
                                 const Tolerances& tol) {
  if (sigma.size() != u.r || tau.size() != u.r) {
    throw DimensionError("permutations do not match the magic unitary size");
  }
  RecoveryReport report;
  report.sigma_representatives = cycle_minima(sigma);
  report.tau_representatives = cycle_minima(tau);
  report.sigma_residuals = recover(u, sigma, report.sigma_representatives, rep.p);
  report.tau_residuals = recover(u, tau, report.tau_representatives, rep.q);
  for (double r : report.sigma_residuals) report.max_residual = std::max(report.max_residual, r);
  for (double r : report.tau_residuals) report.max_residual = std::max(report.max_residual, r);
  report.pass = report.max_residual <= tol.algebraic;
  return report;
}

}  // namespace qsym

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

#include <doctest.h>

#include "fixtures.hpp"
#include "qsym/boolean_group.hpp"
#include "qsym/errors.hpp"
#include "qsym/star_algebra.hpp"

using namespace qsym;
using testing::clebsch_figure;
using testing::clebsch_sigma;
using testing::clebsch_tau;

namespace {

double distance(const AlgebraElement& a, const AlgebraElement& b) { return (a - b).norm(); }

double max_pq_commutator(const FreeProductRep& rep) {
  double c = 0.0;
  for (const auto& p : rep.p) {
    for (const auto& q : rep.q) c = std::max(c, commutator_norm(p, q));
  }
  return c;
}

Graph two_triangles() {
  const std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  return Graph(6, edges);
}

}  // namespace

TEST_CASE("algebra element arithmetic") {
  const auto one = AlgebraElement::identity(3);
  const auto zero = AlgebraElement::zero(3);
  CHECK(one.is_projection(1e-15));
  CHECK(zero.is_projection(1e-15));
  CHECK((one + zero) == one);
  CHECK((one * 2.0).norm() == doctest::Approx(2.0));
  ComplexMatrix nil = ComplexMatrix::Zero(2, 2);
  nil(0, 1) = 1.0;
  const AlgebraElement x(nil);
  CHECK(x.norm() == doctest::Approx(1.0));
  CHECK_FALSE(x.is_projection(0.5));
  CHECK(commutator_norm(x, x.adjoint()) == doctest::Approx(1.0));
}

TEST_CASE("free product model projections") {
  const auto rep = rep_free_product(2, 2, 42);
  const auto one = AlgebraElement::identity(4);
  CHECK(distance(rep.p[0] + rep.p[1], one) < 1e-12);
  CHECK(distance(rep.q[0] + rep.q[1], one) < 1e-12);
  for (const auto& e : rep.p) CHECK(e.projection_defect() < 1e-12);
  for (const auto& e : rep.q) CHECK(e.projection_defect() < 1e-12);
  // Seeded regression value of max ||[p_k, q_l]||.
  CHECK(max_pq_commutator(rep) == doctest::Approx(0.23657187341250835).epsilon(1e-9));
  CHECK(max_pq_commutator(rep) > 0.01);

  for (std::uint64_t seed : {0u, 1u, 7u, 123u}) {
    const auto r = rep_free_product(2, 2, seed);
    CHECK(distance(r.p[0] + r.p[1], one) < 1e-12);
    CHECK(distance(r.q[0] + r.q[1], one) < 1e-12);
  }

  const auto rep42 = rep_free_product(4, 2, 42);
  for (int k = 0; k < 4; ++k) {
    for (int kk = 0; kk < 4; ++kk) {
      if (k != kk) CHECK((rep42.p[k] * rep42.p[kk]).norm() < 1e-12);
    }
  }
  CHECK(max_pq_commutator(rep_commuting_product(3, 2)) == 0.0);
  CHECK_THROWS_AS(rep_free_product(1, 2, 42), UsageError);
}

TEST_CASE("random unitaries are unitary and seeded") {
  const auto u = random_unitary(6, 9);
  CHECK((u * u.adjoint() - ComplexMatrix::Identity(6, 6)).norm() < 1e-12);
  CHECK(u == random_unitary(6, 9));
  CHECK_FALSE(u == random_unitary(6, 10));
}

TEST_CASE("K_4 witness is the displayed 4 x 4 matrix") {
  const auto sigma = Permutation::from_cycles(4, {{0, 1}});
  const auto tau = Permutation::from_cycles(4, {{2, 3}});
  const auto rep = rep_free_product(2, 2, 42);
  const auto u = build_witness(complete_graph(4), sigma, tau, rep);
  const auto one = AlgebraElement::identity(4);
  const auto zero = AlgebraElement::zero(4);
  const auto& p = rep.p[1];
  const auto& q = rep.q[1];
  const std::vector<AlgebraElement> expected{
      p,        one - p,  zero,     zero,     //
      one - p,  p,        zero,     zero,     //
      zero,     zero,     q,        one - q,  //
      zero,     zero,     one - q,  q};
  for (std::size_t s = 0; s < expected.size(); ++s) CHECK(distance(u.entries[s], expected[s]) < 1e-14);

  const auto report = certify_witness(complete_graph(4), u);
  CHECK(report.pass);
  CHECK(report.witnesses_quantum_symmetry());

  const auto recovery = recovery_products(u, sigma, tau, rep);
  CHECK(recovery.pass);
  CHECK(recovery.sigma_representatives == std::vector<int>{0});
  CHECK(recovery.tau_representatives == std::vector<int>{2});
  // u'_{0 sigma(0)} = 1 - p = p_1 and u'_{0 0} = p = p_2.
  CHECK(distance(u(0, 1), rep.p[0]) < 1e-14);
  CHECK(distance(u(0, 0), rep.p[1]) < 1e-14);
}

TEST_CASE("Clebsch witness is four copies of the 4 x 4 block") {
  const auto g = clebsch_figure();
  const auto rep = rep_free_product(2, 2, 42);
  const auto u = build_witness(g, clebsch_sigma(), clebsch_tau(), rep);
  const auto one = AlgebraElement::identity(4);
  const auto zero = AlgebraElement::zero(4);
  const auto& p = rep.p[1];
  const auto& q = rep.q[1];
  const std::vector<AlgebraElement> block{
      q,        zero,     zero,     one - q,  //
      zero,     p,        one - p,  zero,     //
      zero,     one - p,  p,        zero,     //
      one - q,  zero,     zero,     q};
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      const auto& want = (i / 4 == j / 4)
                             ? block[static_cast<std::size_t>((i % 4) * 4 + j % 4)]
                             : zero;
      if (distance(u(i, j), want) > 1e-14) FAIL("entry (" << i << ", " << j << ") differs");
    }
  }
  const auto report = certify_witness(g, u);
  CHECK(report.projection_defect <= 1e-10);
  CHECK(report.rowsum_defect <= 1e-10);
  CHECK(report.colsum_defect <= 1e-10);
  CHECK(report.commutation_defect <= 1e-10);
  CHECK(report.noncomm_certificate > 0.01);
  CHECK(report.seed == std::optional<std::uint64_t>(42));
  CHECK(recovery_products(u, clebsch_sigma(), clebsch_tau(), rep).max_residual <= 1e-10);
}

TEST_CASE("common fixed points get the identity") {
  const auto sigma = Permutation::from_cycles(5, {{0, 1}});
  const auto tau = Permutation::from_cycles(5, {{2, 3}});
  const auto rep = rep_free_product(2, 2, 3);
  const auto u = build_witness(complete_graph(5), sigma, tau, rep);
  CHECK(distance(u(4, 4), AlgebraElement::identity(4)) < 1e-14);
  CHECK(certify_witness(complete_graph(5), u).pass);
}

TEST_CASE("single cycles recover every projection") {
  const auto g = two_triangles();
  const auto sigma = Permutation::from_cycles(6, {{0, 1, 2}});
  const auto tau = Permutation::from_cycles(6, {{3, 4, 5}});
  const auto rep = rep_free_product(3, 3, 42);
  const auto u = build_witness(g, sigma, tau, rep);
  CHECK(certify_witness(g, u).witnesses_quantum_symmetry());
  const auto recovery = recovery_products(u, sigma, tau, rep);
  CHECK(recovery.sigma_representatives.size() == 1);
  CHECK(recovery.sigma_residuals.size() == 3);
  CHECK(recovery.pass);
  for (int k = 1; k <= 3; ++k) CHECK(distance(u(0, sigma.pow(k)(0)), rep.p[k - 1]) < 1e-12);
}

TEST_CASE("witness hypotheses are enforced") {
  const auto g = complete_graph(4);
  const auto rep = rep_free_product(2, 2, 42);
  const auto s = Permutation::from_cycles(4, {{0, 1}});
  const auto overlap = Permutation::from_cycles(4, {{1, 2}});
  CHECK_THROWS_AS(build_witness(g, s, overlap, rep), UsageError);
  CHECK_THROWS_AS(build_witness(g, s, Permutation::identity(4), rep), UsageError);
  CHECK_THROWS_AS(build_witness(g, s, Permutation::from_cycles(4, {{1, 2, 3}}), rep),
                  UsageError);
  CHECK_THROWS_AS(build_witness(cycle_graph(4), Permutation::from_cycles(4, {{0, 1}}),
                                Permutation::from_cycles(4, {{2, 3}}), rep),
                  UsageError);
  CHECK_THROWS_AS(build_witness(g, Permutation::identity(5), s, rep), DimensionError);

  // Forcing the formula through with overlapping supports breaks the entries.
  const auto broken = assemble_witness(s, overlap, rep);
  const auto report = certify_witness(g, broken);
  CHECK(report.projection_defect > 1e-3);
  CHECK_FALSE(report.pass);
}

TEST_CASE("classical and commuting witnesses have no certificate") {
  const auto g = folded_cube(5);
  const auto autos = automorphisms(g);
  const auto classical = classical_magic_unitary(autos[7], 2);
  const auto report = certify_witness(g, classical);
  CHECK(report.pass);
  CHECK(report.noncomm_certificate == 0.0);
  CHECK_FALSE(report.witnesses_quantum_symmetry());

  const auto commuting = rep_commuting_product(2, 2);
  const auto u = build_witness(clebsch_figure(), clebsch_sigma(), clebsch_tau(), commuting);
  const auto creport = certify_witness(clebsch_figure(), u);
  CHECK(creport.pass);
  CHECK(creport.noncomm_certificate < 1e-14);
  CHECK_FALSE(creport.seed.has_value());
}

TEST_CASE("witness is functorial under unitary conjugation") {
  const auto rep = rep_free_product(2, 2, 42);
  const auto w = random_unitary(4, 99);
  FreeProductRep moved = rep;
  for (auto& e : moved.p) e = AlgebraElement(w * e.matrix() * w.adjoint());
  for (auto& e : moved.q) e = AlgebraElement(w * e.matrix() * w.adjoint());
  const auto g = clebsch_figure();
  const auto u = build_witness(g, clebsch_sigma(), clebsch_tau(), rep);
  const auto v = build_witness(g, clebsch_sigma(), clebsch_tau(), moved);
  double worst = 0.0;
  for (std::size_t s = 0; s < u.entries.size(); ++s) {
    const AlgebraElement conj(w * u.entries[s].matrix() * w.adjoint());
    worst = std::max(worst, distance(conj, v.entries[s]));
  }
  CHECK(worst < 1e-12);
  CHECK(certify_witness(g, v).noncomm_certificate ==
        doctest::Approx(certify_witness(g, u).noncomm_certificate).epsilon(1e-9));
}

TEST_CASE("certify_witness checks sizes") {
  const auto u = classical_magic_unitary(Permutation::identity(4), 1);
  CHECK_THROWS_AS(certify_witness(cycle_graph(5), u), DimensionError);
}

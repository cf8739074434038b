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

#include <map>
#include <set>

#include <Eigen/Eigenvalues>

#include "qsym/boolean_group.hpp"
#include "qsym/errors.hpp"
#include "qsym/spectral.hpp"

using namespace qsym;

namespace {

std::int64_t binomial(int n, int k) {
  std::int64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

std::map<int, std::size_t> level_table(const SpectrumReport& r) {
  std::map<int, std::size_t> table;
  for (const auto& l : r.levels) table[l.lambda] = l.multiplicity;
  return table;
}

}  // namespace

TEST_CASE("eigenvalue of a word") {
  CHECK(eigenvalue_of_bits(GroupWord(4, 0), 5) == 5);
  CHECK(eigenvalue_of_bits(GroupWord(4, 0b0011), 5) == 1);
  CHECK(eigenvalue_of_bits(GroupWord(4, 0b0001), 5) == 1);
  CHECK_THROWS_AS(eigenvalue_of_bits(GroupWord(3, 0), 5), DimensionError);
}

TEST_CASE("closed form levels") {
  const auto data5 = eigen_data(5);
  REQUIRE(data5.levels.size() == 3);
  CHECK(data5.levels[0].lambda == 5);
  CHECK(data5.levels[1].lambda == 1);
  CHECK(data5.levels[2].lambda == -3);
  CHECK(data5.levels[1].basis.size() == 10);
  CHECK(data5.levels[2].basis.size() == 5);

  CHECK(level_table(verify_spectrum(3)) == std::map<int, std::size_t>{{3, 1}, {-1, 3}});
  CHECK(level_table(verify_spectrum(7)) ==
        std::map<int, std::size_t>{{7, 1}, {3, 21}, {-1, 35}, {-5, 7}});

  for (int n = 3; n <= 13; n += 2) {
    const auto data = eigen_data(n);
    for (const auto& level : data.levels) {
      CHECK(level.k % 2 == 0);
      CHECK(level.lambda == n - 2 * level.k);
      CHECK(static_cast<std::int64_t>(level.basis.size()) == binomial(n, level.k));
      for (const auto& w : level.basis) {
        CHECK((w.length() == level.k || w.length() == level.k - 1));
        if (eigenvalue_of_bits(w, n) != level.lambda) FAIL("word off its level");
      }
    }
  }
  CHECK_THROWS_AS(eigen_data(4), UsageError);
  CHECK_THROWS_AS(eigen_data(15), CapacityError);
}

TEST_CASE("levels are maximal for odd n") {
  for (int n = 3; n <= 11; n += 2) {
    const auto data = eigen_data(n);
    std::set<int> lambdas;
    for (const auto& level : data.levels) CHECK(lambdas.insert(level.lambda).second);
  }
}

TEST_CASE("spectrum matches the dense solver") {
  for (int n = 3; n <= 11; n += 2) {
    const auto report = verify_spectrum(n);
    CHECK(report.numeric_match);
    CHECK(report.max_residual <= 1e-9);
    CHECK(report.max_numeric_deviation <= 1e-9);
    CHECK(report.pass(Tolerances{}));
  }
  // Even n is outside the closed form with k even, but the grouping by lambda
  // still reproduces the numeric spectrum.
  for (int n : {4, 6, 8}) CHECK(verify_spectrum(n).pass(Tolerances{}));
}

TEST_CASE("Walsh characters of a level are orthogonal") {
  for (int n : {5, 7}) {
    for (const auto& level : eigen_data(n).levels) {
      for (std::size_t a = 0; a < level.basis.size(); ++a) {
        const auto va = character_vector(level.basis[a]);
        for (std::size_t b = a; b < level.basis.size(); ++b) {
          const double dot = va.dot(character_vector(level.basis[b]));
          CHECK(dot == (a == b ? std::ldexp(1.0, n - 1) : 0.0));
        }
      }
    }
  }
}

TEST_CASE("eigenprojections") {
  const auto p0 = eigenprojection(5, 0);
  CHECK((p0 - Eigen::MatrixXd::Constant(16, 16, 1.0 / 16)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(eigenprojection(5, 1), UsageError);

  const auto projs5 = eigenprojections(5);
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(16, 16);
  for (const auto& p : projs5) sum += p;
  CHECK((sum - Eigen::MatrixXd::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-10);

  const auto eps = adjacency_matrix(folded_cube(7));
  const auto data = eigen_data(7);
  const auto projs7 = eigenprojections(7);
  for (std::size_t k = 0; k < projs7.size(); ++k) {
    const auto& p = projs7[k];
    CHECK((p * p - p).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((p - p.transpose()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((p * eps - data.levels[k].lambda * p).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((eps * p - data.levels[k].lambda * p).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("preserves_eigenspaces") {
  const auto g = folded_cube(5);
  const auto projs = eigenprojections(5);
  for (const auto& p : automorphisms(g)) {
    if (!preserves_eigenspaces(projs, p)) FAIL("automorphism moves an eigenspace");
  }
  CHECK(preserves_eigenspaces(5, Permutation::identity(16)));

  const auto swap = Permutation::from_cycles(16, {{0, 1}});
  REQUIRE_FALSE(is_automorphism(g, swap));
  CHECK_FALSE(preserves_eigenspaces(5, swap));
  CHECK(eigenspace_defect(projs, swap) > 0.1);
  CHECK_THROWS_AS(preserves_eigenspaces(5, Permutation::identity(8)), DimensionError);
}

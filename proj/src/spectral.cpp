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

#include "qsym/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "qsym/errors.hpp"

namespace qsym {

int eigenvalue_of_bits(const GroupWord& bits, int n) {
  if (bits.width() != n - 1) {
    throw DimensionError("word of width " + std::to_string(bits.width()) +
                         " does not label a vertex of FQ_" + std::to_string(n));
  }
  const int ones = bits.length();
  const int zeros = bits.width() - ones;
  return zeros - ones + ((ones % 2 == 0) ? 1 : -1);
}

EigenData eigen_data(int n) {
  if (n % 2 == 0) {
    throw UsageError("eigen_data needs odd n; FQ_" + std::to_string(n) +
                     " has a different eigenspace structure");
  }
  if (n < 3) throw UsageError("eigen_data needs n >= 3");
  if (n > kMaxFoldedCubeOrder) {
    throw CapacityError("n = " + std::to_string(n) + " exceeds the bound " +
                        std::to_string(kMaxFoldedCubeOrder));
  }
  const int width = n - 1;
  std::map<int, EigenLevel, std::greater<>> by_lambda;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << width); ++bits) {
    const GroupWord w(width, bits);
    const int lambda = eigenvalue_of_bits(w, n);
    auto& level = by_lambda[lambda];
    level.lambda = lambda;
    level.k = (n - lambda) / 2;
    level.basis.push_back(w);
  }
  EigenData data;
  data.n = n;
  for (auto& [lambda, level] : by_lambda) {
    for (const auto& w : level.basis) {
      if (w.length() != level.k && w.length() != level.k - 1) {
        throw Error("word length does not match its eigenvalue level");
      }
    }
    data.levels.push_back(std::move(level));
  }
  return data;
}

Eigen::VectorXd character_vector(const GroupWord& w) {
  const std::size_t count = std::size_t{1} << w.width();
  Eigen::VectorXd v(static_cast<Eigen::Index>(count));
  for (std::size_t x = 0; x < count; ++x) {
    v(static_cast<Eigen::Index>(x)) =
        character_sign(w.bits(), static_cast<std::uint32_t>(x));
  }
  return v;
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const int n = g.n_vertices();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = g.adjacent(i, j) ? 1.0 : 0.0;
  }
  return a;
}

Eigen::MatrixXd permutation_matrix(const Permutation& p) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p.size(), p.size());
  for (int i = 0; i < p.size(); ++i) m(i, p(i)) = 1.0;
  return m;
}

SpectrumReport verify_spectrum(int n, const Tolerances& tol) {
  if (n < 3) throw UsageError("verify_spectrum needs n >= 3");
  const Graph g = folded_cube(n);
  const int width = n - 1;
  const std::size_t count = std::size_t{1} << width;

  std::vector<std::vector<int>> adjacency_lists(count);
  for (std::size_t x = 0; x < count; ++x) {
    adjacency_lists[x] = g.neighbors(static_cast<int>(x));
  }

  std::map<int, LevelReport, std::greater<>> levels;
  std::vector<double> closed_form;
  closed_form.reserve(count);
  SpectrumReport report;
  report.n = n;
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    const GroupWord w(width, bits);
    const int lambda = eigenvalue_of_bits(w, n);
    const Eigen::VectorXd v = character_vector(w);
    double residual = 0.0;
    for (std::size_t x = 0; x < count; ++x) {
      double ev = 0.0;
      for (int y : adjacency_lists[x]) ev += v(y);
      residual = std::max(
          residual, std::abs(ev - lambda * v(static_cast<Eigen::Index>(x))));
    }
    auto& level = levels[lambda];
    level.lambda = lambda;
    level.k = (n - lambda) / 2;
    ++level.multiplicity;
    level.max_residual = std::max(level.max_residual, residual);
    report.max_residual = std::max(report.max_residual, residual);
    closed_form.push_back(lambda);
  }
  for (const auto& [lambda, level] : levels) report.levels.push_back(level);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      adjacency_matrix(g), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd numeric = solver.eigenvalues();  // ascending
  std::sort(closed_form.begin(), closed_form.end());
  for (std::size_t i = 0; i < count; ++i) {
    report.max_numeric_deviation =
        std::max(report.max_numeric_deviation,
                 std::abs(numeric(static_cast<Eigen::Index>(i)) - closed_form[i]));
  }
  report.numeric_match = solver.info() == Eigen::Success &&
                         report.max_numeric_deviation <= tol.residual;
  return report;
}

namespace {

Eigen::MatrixXd projection_onto(const std::vector<GroupWord>& basis) {
  const auto count = static_cast<Eigen::Index>(std::size_t{1} << basis.front().width());
  Eigen::MatrixXd vectors(count, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    vectors.col(static_cast<Eigen::Index>(c)) = character_vector(basis[c]);
  }
  // Characters are pairwise orthogonal with squared norm 2^{n-1}.
  return vectors * vectors.transpose() / static_cast<double>(count);
}

}  // namespace

Eigen::MatrixXd eigenprojection(int n, int k) {
  const auto data = eigen_data(n);
  for (const auto& level : data.levels) {
    if (level.k == k) return projection_onto(level.basis);
  }
  throw UsageError("k = " + std::to_string(k) + " is not an eigenvalue level of FQ_" +
                   std::to_string(n));
}

std::vector<Eigen::MatrixXd> eigenprojections(int n) {
  std::vector<Eigen::MatrixXd> out;
  for (const auto& level : eigen_data(n).levels) {
    out.push_back(projection_onto(level.basis));
  }
  return out;
}

double eigenspace_defect(const std::vector<Eigen::MatrixXd>& projections,
                         const Permutation& p) {
  if (projections.empty() || projections.front().rows() != p.size()) {
    throw DimensionError("permutation size does not match the eigenprojections");
  }
  const Eigen::MatrixXd pm = permutation_matrix(p);
  double defect = 0.0;
  for (const auto& proj : projections) {
    defect = std::max(defect, (pm * proj - proj * pm).norm());
  }
  return defect;
}

bool preserves_eigenspaces(const std::vector<Eigen::MatrixXd>& projections,
                           const Permutation& p, const Tolerances& tol) {
  return eigenspace_defect(projections, p) <= tol.projector;
}

bool preserves_eigenspaces(int n, const Permutation& p, const Tolerances& tol) {
  return preserves_eigenspaces(eigenprojections(n), p, tol);
}

}  // namespace qsym

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

#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "qsym/boolean_group.hpp"
#include "qsym/graph.hpp"
#include "qsym/tolerances.hpp"

namespace qsym {

// (-1)^{i_1} + ... + (-1)^{i_{n-1}} + (-1)^{i_1 + ... + i_{n-1}}.
// Throws DimensionError unless bits.width() == n - 1.
int eigenvalue_of_bits(const GroupWord& bits, int n);

struct EigenLevel {
  int k = 0;       // even, 0 <= k <= n
  int lambda = 0;  // n - 2k
  // Words of t-length k or k - 1, ascending.
  std::vector<GroupWord> basis;
};

struct EigenData {
  int n = 0;
  // Ascending in k, i.e. descending in lambda.
  std::vector<EigenLevel> levels;
};

// Closed-form eigenspaces of the folded n-cube. Requires odd
// 3 <= n <= kMaxFoldedCubeOrder; even n is rejected with UsageError.
EigenData eigen_data(int n);

// Point-basis coefficients of inverse_fourier(T_w): x -> (-1)^{w.x}.
Eigen::VectorXd character_vector(const GroupWord& w);

Eigen::MatrixXd adjacency_matrix(const Graph& g);
// Entry (i, p(i)) is 1, matching u'_{ij} = delta_{j, p(i)}.
Eigen::MatrixXd permutation_matrix(const Permutation& p);

struct LevelReport {
  int k = 0;
  int lambda = 0;
  std::size_t multiplicity = 0;
  double max_residual = 0.0;
};

struct SpectrumReport {
  int n = 0;
  std::vector<LevelReport> levels;
  // Sorted closed-form eigenvalues agree with the dense symmetric solver.
  bool numeric_match = false;
  double max_residual = 0.0;
  double max_numeric_deviation = 0.0;

  bool pass(const Tolerances& tol) const {
    return numeric_match && max_residual <= tol.residual;
  }
};

// For every word w checks |eps * psi(T_w) - lambda(w) psi(T_w)|_inf and
// compares the closed-form multiset of eigenvalues with a dense solver.
// Accepts any 3 <= n <= kMaxFoldedCubeOrder; levels are grouped by lambda
// with k = (n - lambda) / 2.
SpectrumReport verify_spectrum(int n, const Tolerances& tol = {});

// Orthogonal projection onto span{psi(T_w) : w in level k}. Throws
// UsageError if k is not a level of eigen_data(n).
Eigen::MatrixXd eigenprojection(int n, int k);
// One projection per level, in eigen_data(n) order.
std::vector<Eigen::MatrixXd> eigenprojections(int n);

// max_k |P Pi_k - Pi_k P|_F over the eigenprojections of FQ_n.
double eigenspace_defect(const std::vector<Eigen::MatrixXd>& projections,
                         const Permutation& p);
// True iff the permutation matrix commutes with every eigenprojection. Any
// permutation of the right size is accepted; non-automorphisms come back
// false. Throws DimensionError on a size mismatch.
bool preserves_eigenspaces(int n, const Permutation& p,
                           const Tolerances& tol = {});
bool preserves_eigenspaces(const std::vector<Eigen::MatrixXd>& projections,
                           const Permutation& p, const Tolerances& tol = {});

}  // namespace qsym

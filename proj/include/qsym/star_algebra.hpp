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

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qsym/graph.hpp"
#include "qsym/tolerances.hpp"

namespace qsym {

using ComplexMatrix = Eigen::MatrixXcd;

// An element of a finite-dimensional *-algebra, realised as a dim x dim
// complex matrix.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(ComplexMatrix m);

  static AlgebraElement identity(int dim);
  static AlgebraElement zero(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }

  AlgebraElement adjoint() const { return AlgebraElement(m_.adjoint()); }
  // Operator (spectral) norm, the C*-norm of the matrix algebra.
  double norm() const;
  // max(|x - x*|, |x - x^2|) in operator norm.
  double projection_defect() const;
  bool is_projection(double tol) const { return projection_defect() <= tol; }

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement operator*(std::complex<double> s) const;
  AlgebraElement& operator+=(const AlgebraElement& o);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.m_ == b.m_;
  }

 private:
  ComplexMatrix m_;
};

// |ab - ba| in operator norm.
double commutator_norm(const AlgebraElement& a, const AlgebraElement& b);

// Finite-dimensional model of the algebra generated by two families of
// projections p_1..p_n and q_1..q_m, each summing to 1.
struct FreeProductRep {
  int n = 0;
  int m = 0;
  // Seed of the mixing unitary; empty for the commuting model.
  std::optional<std::uint64_t> seed;
  // p[k-1] holds p_k; p_n is the projection onto the eigenvalue 1 of U.
  std::vector<AlgebraElement> p;
  std::vector<AlgebraElement> q;

  int dim() const { return n * m; }
};

// Haar-style unitary: QR of a seeded complex Gaussian matrix with the phases
// of R's diagonal folded back into Q.
ComplexMatrix random_unitary(int dim, std::uint64_t seed);

// dim = n*m. U = diag of n-th roots of unity (each repeated m times),
// V = Q diag(m-th roots, each repeated n times) Q* for the seeded unitary Q,
// p_k = (1/n) sum_j w_n^{-kj} U^j and likewise q_l from V. Throws UsageError
// unless n, m >= 2.
FreeProductRep rep_free_product(int n, int m, std::uint64_t seed);
// Same construction with Q = 1, so every p_k commutes with every q_l.
FreeProductRep rep_commuting_product(int n, int m);

// r x r matrix over the algebra; all entries share one dimension.
struct MagicUnitary {
  int r = 0;
  int dim = 0;
  std::vector<AlgebraElement> entries;  // row-major
  std::optional<std::uint64_t> seed;

  const AlgebraElement& operator()(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * r + j];
  }
};

// The raw formula
//   u'_{ij} = sum_{l : tau^l(i) = j} q_l + sum_{k : sigma^k(i) = j} p_k
//             - delta_{ij} 1,
// with k = 1..n, l = 1..m and sigma^n = tau^m = id. Performs only the size
// checks it needs, so it also builds the broken matrices used as negative
// controls.
MagicUnitary assemble_witness(const Permutation& sigma, const Permutation& tau,
                              const FreeProductRep& rep);

// assemble_witness after checking every hypothesis: sigma and tau are
// non-trivial, disjoint automorphisms of g with orders rep.n and rep.m.
// Throws UsageError naming the first violated hypothesis.
MagicUnitary build_witness(const Graph& g, const Permutation& sigma,
                           const Permutation& tau, const FreeProductRep& rep);

// Entries delta_{j, pi(i)} 1: the classical point of a single automorphism.
MagicUnitary classical_magic_unitary(const Permutation& pi, int dim);

struct WitnessReport {
  double projection_defect = 0.0;
  double rowsum_defect = 0.0;
  double colsum_defect = 0.0;
  // max_{ij} |(u'(eps x 1) - (eps x 1)u')_{ij}|
  double commutation_defect = 0.0;
  // max over entry pairs of |[u_ab, u_cd]|
  double noncomm_certificate = 0.0;
  std::optional<std::uint64_t> seed;
  bool pass = false;

  // The certificate is only meaningful above tol.certificate.
  bool witnesses_quantum_symmetry(const Tolerances& tol = {}) const {
    return pass && noncomm_certificate > tol.certificate;
  }
};

// Throws DimensionError if u.r != g.n_vertices().
WitnessReport certify_witness(const Graph& g, const MagicUnitary& u,
                              const Tolerances& tol = {});

struct RecoveryReport {
  // Cycle minima of sigma / tau, ascending.
  std::vector<int> sigma_representatives;
  std::vector<int> tau_representatives;
  // residual[k-1] = |prod_s u'_{s, sigma^k(s)} - p_k|
  std::vector<double> sigma_residuals;
  std::vector<double> tau_residuals;
  double max_residual = 0.0;
  bool pass = false;
};

// Multiplies, in ascending representative order, the entries
// u'_{s, sigma^k(s)} over one representative per non-trivial cycle of sigma
// and compares with p_k for k = 1..n; likewise tau against q_l.
RecoveryReport recovery_products(const MagicUnitary& u, const Permutation& sigma,
                                 const Permutation& tau,
                                 const FreeProductRep& rep,
                                 const Tolerances& tol = {});

}  // namespace qsym

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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qsym/boolean_group.hpp"
#include "qsym/graph.hpp"
#include "qsym/tolerances.hpp"

// Generators u_ij of the q = -1 orthogonal relation system are indexed
// 0-based here: u(row, col) with row, col in [0, n). Generator index a
// corresponds to t_{a+1}, so u(i, j) has bidegree (t_{i+1}, t_{j+1}).
//
// Relation names used in reports:
//   "7.1"  u_ij = u_ij*
//   "7.2"  sum_k u_ik u_jk = sum_k u_ki u_kj = delta_ij
//   "7.3"  u_ij u_ik = -u_ik u_ij and u_ji u_ki = -u_ki u_ji for k != j
//   "7.4"  u_ij u_kl = u_kl u_ij for i != k, j != l
//   "7.5"  sum_sigma u_{sigma(1)1} ... u_{sigma(n)n} = 1

namespace qsym {

enum class Model {
  abelian,  // commuting scalars: signed permutation matrices
  twisted,  // functions on SO_n with the product twisted by a bicharacter
};

std::string to_string(Model model);

// Orthogonal matrix with one nonzero entry +-1 per row and column. Column a
// carries signs[a] in row perm(a).
class SignedPermMatrix {
 public:
  SignedPermMatrix() = default;
  // Throws UsageError unless signs.size() == perm.size() and every sign is
  // +-1.
  SignedPermMatrix(Permutation perm, std::vector<int> signs);

  static SignedPermMatrix identity(int n);
  // Throws UsageError unless m is a signed permutation matrix.
  static SignedPermMatrix from_dense(const Eigen::MatrixXd& m);

  int n() const { return perm_.size(); }
  const Permutation& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }
  int entry(int row, int col) const;
  // The sign-free sum over S_n evaluated on commuting entries, i.e. the
  // product of the signs.
  int quantum_determinant() const;
  Eigen::MatrixXd to_dense() const;

  SignedPermMatrix operator*(const SignedPermMatrix& o) const;
  SignedPermMatrix transpose() const;

  friend bool operator==(const SignedPermMatrix&, const SignedPermMatrix&) = default;
  friend std::strong_ordering operator<=>(const SignedPermMatrix& a,
                                          const SignedPermMatrix& b) {
    if (auto c = a.perm_ <=> b.perm_; c != 0) return c;
    return a.signs_ <=> b.signs_;
  }

 private:
  Permutation perm_;
  std::vector<int> signs_;
};

// All 2^n n! signed permutation matrices, ordered by (perm, signs).
std::vector<SignedPermMatrix> signed_permutation_matrices(int n);

// sum_sigma u_{sigma(0)0} ... u_{sigma(n-1)n-1} for commuting real entries.
double quantum_determinant(const Eigen::MatrixXd& u);
// Max defect of relations 7.1 - 7.4 read in commuting real scalars; in that
// reading 7.3 says u_ij u_ik = 0 for k != j.
double commutative_relation_defect(const Eigen::MatrixXd& u);

// Signed permutation matrices with quantum determinant +1, each verified to
// satisfy 7.1 - 7.4. Throws CapacityError for n > 6.
std::vector<SignedPermMatrix> abelian_points(int n);

// +-1 valued bicharacter on Z_2^{2m}, presented on t_1, ..., t_{2m+1} with
// t_{2m+1} = t_1 ... t_{2m}.
class Bicharacter {
 public:
  // Populates the (2m+1) x (2m+1) generator table:
  //   s(t_i, t_j) = -1 = -s(t_j, t_i)          for 1 <= i < j <= 2m,
  //   s(t_i, t_i) = (-1)^m                       for 1 <= i <= 2m+1,
  //   s(t_i, t_{2m+1}) = (-1)^{m-i} = -s(t_{2m+1}, t_i) for i <= 2m.
  explicit Bicharacter(int m);

  int m() const { return m_; }
  int generator_count() const { return 2 * m_ + 1; }
  // Table value for generators a, b in [0, 2m] (a <-> t_{a+1}).
  int table(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * generator_count() + b];
  }
  // Bimultiplicative extension of the 2m x 2m block to words of width 2m.
  int operator()(const GroupWord& x, const GroupWord& y) const;
  // Degree of generator index a as a word of width 2m.
  GroupWord degree(int a) const { return GroupWord::generator(2 * m_, a + 1); }
  // The extension reproduces row/column 2m+1 and the diagonal entry there.
  bool consistent() const;

 private:
  int m_;
  std::vector<int> table_;
};

// The bicharacter above; throws Error if its consistency check fails.
Bicharacter bicharacter(int m);

// A word in the generators u(row, col) together with its bidegree.
class GradedMonomial {
 public:
  GradedMonomial(int m, std::vector<std::pair<int, int>> factors);
  static GradedMonomial generator(int m, int row, int col) {
    return GradedMonomial(m, {{row, col}});
  }

  const std::vector<std::pair<int, int>>& factors() const { return factors_; }
  const GroupWord& left_degree() const { return left_; }
  const GroupWord& right_degree() const { return right_; }

 private:
  std::vector<std::pair<int, int>> factors_;
  GroupWord left_;
  GroupWord right_;
};

// Finite combination of classes [x] of commutative monomials x in the
// coordinate functions u(row, col). Keys are sorted factor lists; the empty
// key is the unit.
class TwistedPolynomial {
 public:
  using Key = std::vector<std::pair<int, int>>;

  explicit TwistedPolynomial(int m) : m_(m) {}
  static TwistedPolynomial constant(int m, double c);
  static TwistedPolynomial monomial(const GradedMonomial& x, double c = 1.0);
  static TwistedPolynomial generator(int m, int row, int col) {
    return monomial(GradedMonomial::generator(m, row, col));
  }

  int m() const { return m_; }
  const std::map<Key, double>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TwistedPolynomial operator+(const TwistedPolynomial& o) const;
  TwistedPolynomial operator-(const TwistedPolynomial& o) const;
  TwistedPolynomial operator*(double s) const;

  // Value at a point of SO_n: sum of coefficient times product of entries.
  double evaluate(const Eigen::MatrixXd& point) const;

  friend bool operator==(const TwistedPolynomial&, const TwistedPolynomial&) = default;

 private:
  void add(const Key& key, double c);

  int m_;
  std::map<Key, double> terms_;
};

// [x] * [y] = s(|x|_L, |y|_L) s(|x|_R, |y|_R) [xy], extended bilinearly.
// Throws DimensionError if f, h and bc disagree on m.
TwistedPolynomial twisted_product(const TwistedPolynomial& f,
                                  const TwistedPolynomial& h,
                                  const Bicharacter& bc);

// Generator-level sign attached to an ordered monomial. For the twisted
// model it is prod_{a<b} s(row_a, row_b) s(col_a, col_b), which agrees with
// iterated twisted_product by bimultiplicativity; for the abelian model it
// is identically 1.
class MonomialTwist {
 public:
  static MonomialTwist abelian(int n);
  static MonomialTwist twisted(const Bicharacter& bc);

  int n() const { return n_; }
  int pair(int a, int b) const {
    return pairs_[static_cast<std::size_t>(a) * n_ + b];
  }

 private:
  int n_ = 0;
  std::vector<int> pairs_;
};

// Seeded Gaussian -> QR (with R's diagonal signs folded into Q) -> flip the
// first column if the determinant differs from det_sign.
std::vector<Eigen::MatrixXd> sample_orthogonal(int n, int count,
                                               std::uint64_t seed,
                                               int det_sign = 1);

struct CheckReport {
  std::string relation;
  Model model = Model::abelian;
  int n = 0;
  double max_defect = 0.0;
  // Points visited: enumerated matrices (abelian) or samples (twisted).
  std::size_t points = 0;
  std::optional<std::uint64_t> seed;
  bool pass = false;
  // Extra named counts, serialised alongside the report.
  std::map<std::string, double> metrics;
};

struct SamplingOptions {
  int samples = 50;
  std::uint64_t seed = 42;
};

// For every signed permutation matrix: quantum determinant +1 holds iff
// u_{j,n-1} = sum over injective tuples avoiding j of
// u_{i_0 0} ... u_{i_{n-2} n-2} holds for all j. Throws CapacityError for
// n > 5.
CheckReport lemma_so_bruteforce(int n, const Tolerances& tol = {});

// max over k != n-1 of |sum_sigma u_{sigma(0)0} ... u_{sigma(n-2)n-2}
// u_{sigma(n-1)k}|. The k = n-1 control must reproduce the quantum
// determinant (abelian) or 1 (twisted). Twisted needs odd n <= 5.
CheckReport lemma_sumzero_check(int n, Model model, const Tolerances& tol = {},
                                const SamplingOptions& sampling = {});

// For every injective (i_1, ..., i_l): the coefficients over Z_2^{n-1} of
//   sum_{j} tau_{j_1} ... tau_{j_l} (x) u_{j_1 i_1} ... u_{j_l i_l}
// equal those of the same sum restricted to pairwise distinct j. Needs odd
// n <= 5 and 1 <= l <= n. The metric "untwisted_defect" repeats the
// comparison with all twist signs set to +1.
CheckReport lemma_p_check(int n, int l, Model model, const Tolerances& tol = {},
                          const SamplingOptions& sampling = {});

// Evaluates 7.1 - 7.5 as twisted polynomial identities at sampled SO_{2m+1}
// points, plus a control that 7.5 evaluates to -1 at determinant -1
// samples. Returns one report per relation and the control last. Needs
// m in {1, 2}.
std::vector<CheckReport> twisted_relation_check(int m, const Tolerances& tol = {},
                                                const SamplingOptions& sampling = {});

// Vertex permutation of FQ_n induced by a classical point g: tau_i ->
// sign * tau_{perm(i)} extended to the group algebra and conjugated to the
// point basis. The result is checked to be an automorphism of FQ_n that
// preserves every eigenspace (Error otherwise). Throws UsageError if n is
// even, g has quantum determinant -1 (the assignment does not extend), or
// g.n() != n.
Permutation classical_point_action(const SignedPermMatrix& g, int n);

// Runs classical_point_action over abelian_points(n): every image is an
// automorphism preserving all eigenspaces, images are distinct, and the map
// is a homomorphism. Metrics record the counts.
CheckReport classical_action_sweep(int n, const Tolerances& tol = {});

}  // namespace qsym

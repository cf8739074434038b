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

#include "qsym/so_twist.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qsym/errors.hpp"
#include "qsym/spectral.hpp"

namespace qsym {

std::string to_string(Model model) {
  return model == Model::abelian ? "abelian" : "twisted";
}

SignedPermMatrix::SignedPermMatrix(Permutation perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (static_cast<int>(signs_.size()) != perm_.size()) {
    throw UsageError("signed permutation needs one sign per column");
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) throw UsageError("signs must be +1 or -1");
  }
}

SignedPermMatrix SignedPermMatrix::identity(int n) {
  return SignedPermMatrix(Permutation::identity(n),
                          std::vector<int>(static_cast<std::size_t>(n), 1));
}

SignedPermMatrix SignedPermMatrix::from_dense(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw UsageError("matrix is not square");
  const auto n = static_cast<int>(m.rows());
  std::vector<int> images(static_cast<std::size_t>(n), -1);
  std::vector<int> signs(static_cast<std::size_t>(n), 0);
  for (int col = 0; col < n; ++col) {
    for (int row = 0; row < n; ++row) {
      const double v = m(row, col);
      if (v == 0.0) continue;
      if ((v != 1.0 && v != -1.0) || images[static_cast<std::size_t>(col)] != -1) {
        throw UsageError("matrix is not a signed permutation matrix");
      }
      images[static_cast<std::size_t>(col)] = row;
      signs[static_cast<std::size_t>(col)] = static_cast<int>(v);
    }
    if (images[static_cast<std::size_t>(col)] == -1) {
      throw UsageError("matrix is not a signed permutation matrix");
    }
  }
  return SignedPermMatrix(Permutation(std::move(images)), std::move(signs));
}

int SignedPermMatrix::entry(int row, int col) const {
  return perm_(col) == row ? signs_[static_cast<std::size_t>(col)] : 0;
}

int SignedPermMatrix::quantum_determinant() const {
  return std::accumulate(signs_.begin(), signs_.end(), 1, std::multiplies<>());
}

Eigen::MatrixXd SignedPermMatrix::to_dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n(), n());
  for (int col = 0; col < n(); ++col) {
    m(perm_(col), col) = signs_[static_cast<std::size_t>(col)];
  }
  return m;
}

SignedPermMatrix SignedPermMatrix::operator*(const SignedPermMatrix& o) const {
  if (o.n() != n()) throw DimensionError("signed permutation sizes differ");
  std::vector<int> signs(signs_.size());
  for (int col = 0; col < n(); ++col) {
    signs[static_cast<std::size_t>(col)] =
        signs_[static_cast<std::size_t>(o.perm_(col))] *
        o.signs_[static_cast<std::size_t>(col)];
  }
  return SignedPermMatrix(perm_.compose(o.perm_), std::move(signs));
}

SignedPermMatrix SignedPermMatrix::transpose() const {
  const auto inv = perm_.inverse();
  std::vector<int> signs(signs_.size());
  for (int col = 0; col < n(); ++col) {
    signs[static_cast<std::size_t>(col)] = signs_[static_cast<std::size_t>(inv(col))];
  }
  return SignedPermMatrix(inv, std::move(signs));
}

std::vector<SignedPermMatrix> signed_permutation_matrices(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<SignedPermMatrix> out;
  do {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      std::vector<int> signs(static_cast<std::size_t>(n));
      for (int a = 0; a < n; ++a) {
        // Highest column varies fastest so that the output is sorted.
        signs[static_cast<std::size_t>(a)] = ((mask >> (n - 1 - a)) & 1U) != 0 ? 1 : -1;
      }
      out.emplace_back(Permutation(images), std::move(signs));
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

double quantum_determinant(const Eigen::MatrixXd& u) {
  const auto n = static_cast<int>(u.rows());
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  double total = 0.0;
  do {
    double term = 1.0;
    for (int a = 0; a < n && term != 0.0; ++a) term *= u(sigma[static_cast<std::size_t>(a)], a);
    total += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

double commutative_relation_defect(const Eigen::MatrixXd& u) {
  const auto n = u.rows();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  double defect = std::max((u * u.transpose() - id).cwiseAbs().maxCoeff(),
                           (u.transpose() * u - id).cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) {
        if (k == j) continue;
        // Commuting scalars turn anticommutation into a zero product.
        defect = std::max(defect, std::abs(2.0 * u(i, j) * u(i, k)));
        defect = std::max(defect, std::abs(2.0 * u(j, i) * u(k, i)));
      }
    }
  }
  return defect;
}

std::vector<SignedPermMatrix> abelian_points(int n) {
  if (n < 1) throw UsageError("n must be positive");
  if (n > 6) {
    throw CapacityError("abelian point enumeration is bounded at n = 6, got " +
                        std::to_string(n));
  }
  std::vector<SignedPermMatrix> out;
  for (auto& g : signed_permutation_matrices(n)) {
    const Eigen::MatrixXd dense = g.to_dense();
    if (commutative_relation_defect(dense) != 0.0) {
      throw Error("signed permutation matrix violates the commutative relations");
    }
    if (quantum_determinant(dense) == 1.0) out.push_back(std::move(g));
  }
  return out;
}

Bicharacter::Bicharacter(int m) : m_(m) {
  if (m < 1 || 2 * m > GroupWord::kMaxWidth) {
    throw UsageError("bicharacter needs 1 <= m <= 15");
  }
  const int count = generator_count();
  const int last = count - 1;  // t_{2m+1}
  const int diag = (m % 2 == 0) ? 1 : -1;
  table_.assign(static_cast<std::size_t>(count) * count, 0);
  auto at = [&](int a, int b) -> int& {
    return table_[static_cast<std::size_t>(a) * count + b];
  };
  for (int a = 0; a < count; ++a) at(a, a) = diag;
  for (int a = 0; a < last; ++a) {
    for (int b = a + 1; b < last; ++b) {
      at(a, b) = -1;
      at(b, a) = 1;
    }
    const int i = a + 1;
    const int v = ((m - i) % 2 == 0) ? 1 : -1;
    at(a, last) = v;
    at(last, a) = -v;
  }
}

int Bicharacter::operator()(const GroupWord& x, const GroupWord& y) const {
  if (x.width() != 2 * m_ || y.width() != 2 * m_) {
    throw DimensionError("bicharacter arguments must have width 2m = " +
                         std::to_string(2 * m_));
  }
  int value = 1;
  for (int a = 0; a < 2 * m_; ++a) {
    if (!x.exponent(a)) continue;
    for (int b = 0; b < 2 * m_; ++b) {
      if (y.exponent(b)) value *= table(a, b);
    }
  }
  return value;
}

bool Bicharacter::consistent() const {
  const int last = 2 * m_;
  for (int a = 0; a < generator_count(); ++a) {
    for (int b = 0; b < generator_count(); ++b) {
      if ((*this)(degree(a), degree(b)) != table(a, b)) return false;
      if (a != b && table(a, b) != -table(b, a)) return false;
    }
  }
  return table(last, last) == table(0, 0);
}

Bicharacter bicharacter(int m) {
  Bicharacter bc(m);
  if (!bc.consistent()) {
    throw Error("bicharacter table is not consistent with t_{2m+1} = t_1...t_{2m}");
  }
  return bc;
}

namespace {

GroupWord degree_of(int m, const std::vector<std::pair<int, int>>& factors,
                    bool left) {
  auto d = GroupWord::identity(2 * m);
  for (const auto& [row, col] : factors) {
    d = d * GroupWord::generator(2 * m, (left ? row : col) + 1);
  }
  return d;
}

}  // namespace

GradedMonomial::GradedMonomial(int m, std::vector<std::pair<int, int>> factors)
    : factors_(std::move(factors)) {
  for (const auto& [row, col] : factors_) {
    if (row < 0 || col < 0 || row > 2 * m || col > 2 * m) {
      throw UsageError("generator index outside [0, 2m]");
    }
  }
  left_ = degree_of(m, factors_, true);
  right_ = degree_of(m, factors_, false);
}

TwistedPolynomial TwistedPolynomial::constant(int m, double c) {
  TwistedPolynomial p(m);
  p.add({}, c);
  return p;
}

TwistedPolynomial TwistedPolynomial::monomial(const GradedMonomial& x, double c) {
  const int m = (x.left_degree().width()) / 2;
  TwistedPolynomial p(m);
  Key key = x.factors();
  std::sort(key.begin(), key.end());
  p.add(key, c);
  return p;
}

void TwistedPolynomial::add(const Key& key, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

TwistedPolynomial TwistedPolynomial::operator+(const TwistedPolynomial& o) const {
  if (o.m_ != m_) throw DimensionError("twisted polynomials over different m");
  TwistedPolynomial out = *this;
  for (const auto& [k, c] : o.terms_) out.add(k, c);
  return out;
}

TwistedPolynomial TwistedPolynomial::operator-(const TwistedPolynomial& o) const {
  return *this + o * -1.0;
}

TwistedPolynomial TwistedPolynomial::operator*(double s) const {
  TwistedPolynomial out(m_);
  for (const auto& [k, c] : terms_) out.add(k, c * s);
  return out;
}

double TwistedPolynomial::evaluate(const Eigen::MatrixXd& point) const {
  double total = 0.0;
  for (const auto& [key, c] : terms_) {
    double term = c;
    for (const auto& [row, col] : key) term *= point(row, col);
    total += term;
  }
  return total;
}

TwistedPolynomial twisted_product(const TwistedPolynomial& f,
                                  const TwistedPolynomial& h,
                                  const Bicharacter& bc) {
  if (f.m() != bc.m() || h.m() != bc.m()) {
    throw DimensionError("twisted product operands disagree on m");
  }
  const int m = bc.m();
  TwistedPolynomial out(m);
  for (const auto& [kf, cf] : f.terms()) {
    const auto lf = degree_of(m, kf, true);
    const auto rf = degree_of(m, kf, false);
    for (const auto& [kh, ch] : h.terms()) {
      const int sign = bc(lf, degree_of(m, kh, true)) * bc(rf, degree_of(m, kh, false));
      TwistedPolynomial::Key key;
      key.reserve(kf.size() + kh.size());
      std::merge(kf.begin(), kf.end(), kh.begin(), kh.end(), std::back_inserter(key));
      out = out + TwistedPolynomial::monomial(GradedMonomial(m, key), sign * cf * ch);
    }
  }
  return out;
}

MonomialTwist MonomialTwist::abelian(int n) {
  MonomialTwist t;
  t.n_ = n;
  t.pairs_.assign(static_cast<std::size_t>(n) * n, 1);
  return t;
}

MonomialTwist MonomialTwist::twisted(const Bicharacter& bc) {
  MonomialTwist t;
  t.n_ = bc.generator_count();
  t.pairs_.resize(static_cast<std::size_t>(t.n_) * t.n_);
  for (int a = 0; a < t.n_; ++a) {
    for (int b = 0; b < t.n_; ++b) {
      t.pairs_[static_cast<std::size_t>(a) * t.n_ + b] = bc.table(a, b);
    }
  }
  return t;
}

std::vector<Eigen::MatrixXd> sample_orthogonal(int n, int count,
                                               std::uint64_t seed,
                                               int det_sign) {
  if (det_sign != 1 && det_sign != -1) throw UsageError("det_sign must be +-1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Eigen::MatrixXd> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int s = 0; s < count; ++s) {
    Eigen::MatrixXd z(n, n);
    for (int c = 0; c < n; ++c) {
      for (int r = 0; r < n; ++r) z(r, c) = gauss(rng);
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
    for (int c = 0; c < n; ++c) {
      if (qr.matrixQR()(c, c) < 0.0) q.col(c) *= -1.0;
    }
    if ((q.determinant() > 0.0 ? 1 : -1) != det_sign) q.col(0) *= -1.0;
    out.push_back(std::move(q));
  }
  return out;
}

namespace {

struct ModelPoints {
  std::vector<Eigen::MatrixXd> points;
  // Quantum determinant per point (abelian) or 1 (twisted samples).
  std::vector<double> determinants;
  MonomialTwist twist;
  std::optional<std::uint64_t> seed;
};

void require_twistable(int n) {
  if (n % 2 == 0 || n < 3) {
    throw UsageError("the twisted model needs odd n >= 3, got " + std::to_string(n));
  }
  if (n > 5) {
    throw CapacityError("the twisted model is bounded at n = 5, got " + std::to_string(n));
  }
}

ModelPoints model_points(int n, Model model, const SamplingOptions& sampling) {
  ModelPoints mp;
  if (model == Model::abelian) {
    for (const auto& g : signed_permutation_matrices(n)) {
      mp.points.push_back(g.to_dense());
      mp.determinants.push_back(g.quantum_determinant());
    }
    mp.twist = MonomialTwist::abelian(n);
    return mp;
  }
  require_twistable(n);
  if (sampling.samples < 1) throw UsageError("need at least one sample");
  mp.points = sample_orthogonal(n, sampling.samples, sampling.seed);
  mp.determinants.assign(mp.points.size(), 1.0);
  mp.twist = MonomialTwist::twisted(bicharacter((n - 1) / 2));
  mp.seed = sampling.seed;
  return mp;
}

// sum over sigma in S_n of the twisted monomial
// u_{sigma(0) cols[0]} ... u_{sigma(n-1) cols[n-1]} at `point`.
double permutation_sum(const Eigen::MatrixXd& point, const MonomialTwist& twist,
                       const std::vector<int>& cols) {
  const auto n = static_cast<int>(cols.size());
  int col_sign = 1;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      col_sign *= twist.pair(cols[static_cast<std::size_t>(a)], cols[static_cast<std::size_t>(b)]);
    }
  }
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  double total = 0.0;
  do {
    double term = col_sign;
    for (int a = 0; a < n; ++a) {
      term *= point(sigma[static_cast<std::size_t>(a)], cols[static_cast<std::size_t>(a)]);
    }
    if (term == 0.0) continue;
    int row_sign = 1;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        row_sign *= twist.pair(sigma[static_cast<std::size_t>(a)], sigma[static_cast<std::size_t>(b)]);
      }
    }
    total += row_sign * term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

// Calls f(tuple) for every injective tuple of length l over [0, n).
template <class F>
void for_each_injective(int n, int l, F&& f) {
  std::vector<int> tuple;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(tuple.size()) == l) {
      f(tuple);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      tuple.push_back(v);
      self(self);
      tuple.pop_back();
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(rec);
}

}  // namespace

CheckReport lemma_so_bruteforce(int n, const Tolerances& tol) {
  if (n < 2) throw UsageError("lemma_SO check needs n >= 2");
  if (n > 5) throw CapacityError("lemma_SO check is bounded at n = 5");
  CheckReport report;
  report.relation = "lemma_SO";
  report.model = Model::abelian;
  report.n = n;
  std::size_t det_positive = 0;
  std::size_t condition_ii = 0;
  std::size_t mismatches = 0;
  const int last = n - 1;
  for (const auto& g : signed_permutation_matrices(n)) {
    const Eigen::MatrixXd u = g.to_dense();
    const bool cond_i = std::abs(quantum_determinant(u) - 1.0) <= tol.residual;
    bool cond_ii = true;
    for (int j = 0; j < n && cond_ii; ++j) {
      double rhs = 0.0;
      for_each_injective(n, n - 1, [&](const std::vector<int>& rows) {
        if (std::find(rows.begin(), rows.end(), j) != rows.end()) return;
        double term = 1.0;
        for (int a = 0; a < last; ++a) term *= u(rows[static_cast<std::size_t>(a)], a);
        rhs += term;
      });
      cond_ii = std::abs(u(j, last) - rhs) <= tol.residual;
    }
    det_positive += cond_i ? 1 : 0;
    condition_ii += cond_ii ? 1 : 0;
    mismatches += (cond_i != cond_ii) ? 1 : 0;
    ++report.points;
  }
  report.max_defect = static_cast<double>(mismatches);
  report.pass = mismatches == 0;
  report.metrics["det_positive"] = static_cast<double>(det_positive);
  report.metrics["condition_ii_holds"] = static_cast<double>(condition_ii);
  report.metrics["mismatches"] = static_cast<double>(mismatches);
  return report;
}

CheckReport lemma_sumzero_check(int n, Model model, const Tolerances& tol,
                                const SamplingOptions& sampling) {
  if (n < 2) throw UsageError("lemma_sumzero check needs n >= 2");
  if (model == Model::abelian && n > 5) {
    throw CapacityError("abelian lemma_sumzero check is bounded at n = 5");
  }
  const auto mp = model_points(n, model, sampling);
  CheckReport report;
  report.relation = "lemma_sumzero";
  report.model = model;
  report.n = n;
  report.seed = mp.seed;
  double control = 0.0;
  std::vector<int> cols(static_cast<std::size_t>(n));
  std::iota(cols.begin(), cols.end(), 0);
  for (std::size_t p = 0; p < mp.points.size(); ++p) {
    for (int k = 0; k < n; ++k) {
      cols.back() = k;
      const double value = permutation_sum(mp.points[p], mp.twist, cols);
      if (k == n - 1) {
        control = std::max(control, std::abs(value - mp.determinants[p]));
      } else {
        report.max_defect = std::max(report.max_defect, std::abs(value));
      }
    }
  }
  report.points = mp.points.size();
  report.metrics["control_defect"] = control;
  const double bar = model == Model::abelian ? 0.0 : tol.residual;
  report.pass = report.max_defect <= bar && control <= bar;
  return report;
}

CheckReport lemma_p_check(int n, int l, Model model, const Tolerances& tol,
                          const SamplingOptions& sampling) {
  require_twistable(n);
  if (l < 1 || l > n) {
    throw UsageError("l must lie in [1, n], got " + std::to_string(l));
  }
  const auto mp = model_points(n, model, sampling);
  const auto taus = tau_generators(n);
  const std::size_t words = std::size_t{1} << (n - 1);

  CheckReport report;
  report.relation = "lemma_P";
  report.model = model;
  report.n = n;
  report.seed = mp.seed;
  report.metrics["l"] = l;

  // The same sums with every twist sign dropped; in the twisted model this
  // must fail, otherwise the check would not exercise the twist at all.
  std::vector<double> full(words), distinct(words), plain_full(words), plain_distinct(words);
  double plain_defect = 0.0;
  std::size_t tuples = 0;
  for (const auto& point : mp.points) {
    for_each_injective(n, l, [&](const std::vector<int>& cols) {
      ++tuples;
      for (auto* v : {&full, &distinct, &plain_full, &plain_distinct}) {
        std::fill(v->begin(), v->end(), 0.0);
      }
      std::vector<int> rows;
      rows.reserve(static_cast<std::size_t>(l));
      auto rec = [&](auto&& self, std::uint32_t word, double value, double plain,
                     std::uint32_t used_mask, bool injective) -> void {
        const auto depth = rows.size();
        if (static_cast<int>(depth) == l) {
          full[word] += value;
          plain_full[word] += plain;
          if (injective) {
            distinct[word] += value;
            plain_distinct[word] += plain;
          }
          return;
        }
        const int col = cols[depth];
        for (int j = 0; j < n; ++j) {
          const double entry = point(j, col);
          if (entry == 0.0) continue;
          int sign = 1;
          for (std::size_t a = 0; a < depth; ++a) {
            sign *= mp.twist.pair(rows[a], j) * mp.twist.pair(cols[a], col);
          }
          rows.push_back(j);
          self(self, word ^ taus[static_cast<std::size_t>(j)].bits(),
               value * entry * sign, plain * entry, used_mask | (1U << j),
               injective && ((used_mask >> j) & 1U) == 0);
          rows.pop_back();
        }
      };
      rec(rec, 0U, 1.0, 1.0, 0U, true);
      for (std::size_t w = 0; w < words; ++w) {
        report.max_defect = std::max(report.max_defect, std::abs(full[w] - distinct[w]));
        plain_defect = std::max(plain_defect, std::abs(plain_full[w] - plain_distinct[w]));
      }
    });
  }
  report.metrics["untwisted_defect"] = plain_defect;
  report.points = mp.points.size();
  report.metrics["index_tuples"] = static_cast<double>(tuples / std::max<std::size_t>(mp.points.size(), 1));
  const double bar = model == Model::abelian ? 0.0 : tol.residual;
  report.pass = report.max_defect <= bar;
  return report;
}

std::vector<CheckReport> twisted_relation_check(int m, const Tolerances& tol,
                                                const SamplingOptions& sampling) {
  if (m != 1 && m != 2) {
    throw UsageError("twisted relation check supports m in {1, 2}, got " + std::to_string(m));
  }
  if (sampling.samples < 1) throw UsageError("need at least one sample");
  const int n = 2 * m + 1;
  const auto bc = bicharacter(m);
  auto u = [&](int i, int j) { return TwistedPolynomial::generator(m, i, j); };
  auto star = [&](const TwistedPolynomial& a, const TwistedPolynomial& b) {
    return twisted_product(a, b, bc);
  };
  const auto one = TwistedPolynomial::constant(m, 1.0);

  // Each relation is a list of polynomials that must vanish at every sample.
  std::vector<std::pair<std::string, std::vector<TwistedPolynomial>>> relations;

  // Self-adjoint generators: u_ij * u_ij must be |u_ij|^2 pointwise.
  std::vector<TwistedPolynomial> rel1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      GradedMonomial square(m, {{i, j}, {i, j}});
      rel1.push_back(star(u(i, j), u(i, j)) - TwistedPolynomial::monomial(square));
    }
  }
  relations.emplace_back("7.1", std::move(rel1));

  std::vector<TwistedPolynomial> rel2;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      TwistedPolynomial rows(m), cols(m);
      for (int k = 0; k < n; ++k) {
        rows = rows + star(u(i, k), u(j, k));
        cols = cols + star(u(k, i), u(k, j));
      }
      const auto delta = i == j ? one : TwistedPolynomial(m);
      rel2.push_back(rows - delta);
      rel2.push_back(cols - delta);
    }
  }
  relations.emplace_back("7.2", std::move(rel2));

  std::vector<TwistedPolynomial> rel3;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        rel3.push_back(star(u(i, j), u(i, k)) + star(u(i, k), u(i, j)));
        rel3.push_back(star(u(j, i), u(k, i)) + star(u(k, i), u(j, i)));
      }
    }
  }
  relations.emplace_back("7.3", std::move(rel3));

  std::vector<TwistedPolynomial> rel4;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          if (i == k || j == l) continue;
          rel4.push_back(star(u(i, j), u(k, l)) - star(u(k, l), u(i, j)));
        }
      }
    }
  }
  relations.emplace_back("7.4", std::move(rel4));

  TwistedPolynomial determinant(m);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    auto term = one;
    for (int a = 0; a < n; ++a) term = star(term, u(sigma[static_cast<std::size_t>(a)], a));
    determinant = determinant + term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  relations.emplace_back("7.5", std::vector<TwistedPolynomial>{determinant - one});

  const auto points = sample_orthogonal(n, sampling.samples, sampling.seed, 1);
  std::vector<CheckReport> reports;
  for (const auto& [name, polys] : relations) {
    CheckReport r;
    r.relation = name;
    r.model = Model::twisted;
    r.n = n;
    r.seed = sampling.seed;
    r.points = points.size();
    for (const auto& point : points) {
      for (const auto& poly : polys) {
        r.max_defect = std::max(r.max_defect, std::abs(poly.evaluate(point)));
      }
    }
    r.metrics["identities"] = static_cast<double>(polys.size());
    r.pass = r.max_defect <= tol.residual;
    reports.push_back(std::move(r));
  }

  CheckReport control;
  control.relation = "7.5_det_minus_one_control";
  control.model = Model::twisted;
  control.n = n;
  control.seed = sampling.seed;
  const auto reflections = sample_orthogonal(n, sampling.samples, sampling.seed, -1);
  control.points = reflections.size();
  for (const auto& point : reflections) {
    control.max_defect =
        std::max(control.max_defect, std::abs(determinant.evaluate(point) + 1.0));
  }
  control.pass = control.max_defect <= tol.residual;
  reports.push_back(std::move(control));
  return reports;
}

Permutation classical_point_action(const SignedPermMatrix& g, int n) {
  if (n % 2 == 0 || n < 3) {
    throw UsageError("classical point action needs odd n >= 3, got " + std::to_string(n));
  }
  if (g.n() != n) {
    throw DimensionError("signed permutation is " + std::to_string(g.n()) +
                         " x " + std::to_string(g.n()) + ", expected n = " +
                         std::to_string(n));
  }
  const auto taus = tau_generators(n);
  const int width = n - 1;
  const std::size_t count = std::size_t{1} << width;

  // tau_1..tau_{n-1} form a basis; extend tau_i -> s_i tau_{perm(i)}
  // multiplicatively over subsets of that basis.
  std::vector<std::uint32_t> target(count, 0);
  std::vector<int> sign(count, 0);
  std::vector<bool> reached(count, false);
  for (std::uint32_t subset = 0; subset < count; ++subset) {
    std::uint32_t word = 0;
    std::uint32_t image = 0;
    int s = 1;
    for (int i = 0; i < width; ++i) {
      if (((subset >> i) & 1U) == 0) continue;
      word ^= taus[static_cast<std::size_t>(i)].bits();
      image ^= taus[static_cast<std::size_t>(g.perm()(i))].bits();
      s *= g.signs()[static_cast<std::size_t>(i)];
    }
    target[word] = image;
    sign[word] = s;
    reached[word] = true;
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
    throw Error("tau_1..tau_{n-1} do not span Z_2^{n-1}");
  }
  // tau_n = tau_1 ... tau_{n-1} must map to s_n tau_{perm(n)}.
  const auto last = static_cast<std::size_t>(n - 1);
  if (target[taus[last].bits()] != taus[static_cast<std::size_t>(g.perm()(n - 1))].bits() ||
      sign[taus[last].bits()] != g.signs()[last]) {
    throw UsageError(
        "assignment does not extend to the group algebra: quantum determinant is -1");
  }

  // Point-basis matrix H A H / 2^{n-1}, in exact integer arithmetic.
  std::vector<std::int64_t> ha(count * count, 0);  // (H A)[x][w]
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t w = 0; w < count; ++w) {
      ha[x * count + w] = character_sign(static_cast<std::uint32_t>(x), target[w]) * sign[w];
    }
  }
  std::vector<int> images(count, -1);
  for (std::size_t y = 0; y < count; ++y) {
    for (std::size_t x = 0; x < count; ++x) {
      std::int64_t acc = 0;
      for (std::size_t w = 0; w < count; ++w) {
        acc += ha[x * count + w] *
               character_sign(static_cast<std::uint32_t>(w), static_cast<std::uint32_t>(y));
      }
      if (acc == static_cast<std::int64_t>(count)) {
        if (images[y] != -1) throw Error("induced vertex map is not a permutation");
        images[y] = static_cast<int>(x);
      } else if (acc != 0) {
        throw Error("induced vertex map is not a permutation matrix");
      }
    }
  }
  if (std::find(images.begin(), images.end(), -1) != images.end()) {
    throw Error("induced vertex map is not a permutation");
  }
  Permutation p(std::move(images));
  if (!is_automorphism(folded_cube(n), p)) {
    throw Error("induced vertex map is not an automorphism of FQ_" + std::to_string(n));
  }
  if (!preserves_eigenspaces(n, p)) {
    throw Error("induced vertex map moves an eigenspace of FQ_" + std::to_string(n));
  }
  return p;
}

CheckReport classical_action_sweep(int n, const Tolerances& tol) {
  if (n % 2 == 0 || n < 3) throw UsageError("classical action sweep needs odd n >= 3");
  const auto points = abelian_points(n);
  const auto projections = eigenprojections(n);
  const auto graph = folded_cube(n);

  CheckReport report;
  report.relation = "classical_action";
  report.model = Model::abelian;
  report.n = n;
  report.points = points.size();

  std::map<SignedPermMatrix, Permutation> action;
  std::size_t preserving = 0;
  std::size_t automorphic = 0;
  for (const auto& g : points) {
    auto p = classical_point_action(g, n);
    automorphic += is_automorphism(graph, p) ? 1 : 0;
    const double defect = eigenspace_defect(projections, p);
    report.max_defect = std::max(report.max_defect, defect);
    preserving += defect <= tol.projector ? 1 : 0;
    action.emplace(g, std::move(p));
  }
  std::vector<Permutation> images;
  for (const auto& [g, p] : action) images.push_back(p);
  std::sort(images.begin(), images.end());
  const auto distinct = static_cast<std::size_t>(
      std::unique(images.begin(), images.end()) - images.begin());

  std::size_t homomorphism_failures = 0;
  for (const auto& [g, pg] : action) {
    for (const auto& [h, ph] : action) {
      const auto it = action.find(g * h);
      if (it == action.end() || it->second != pg.compose(ph)) ++homomorphism_failures;
    }
  }

  report.metrics["automorphisms"] = static_cast<double>(automorphic);
  report.metrics["eigenspace_preserving"] = static_cast<double>(preserving);
  report.metrics["distinct_images"] = static_cast<double>(distinct);
  report.metrics["homomorphism_failures"] = static_cast<double>(homomorphism_failures);
  report.metrics["graph_automorphism_group_order"] =
      static_cast<double>(automorphisms(graph).size());
  report.pass = automorphic == points.size() && preserving == points.size() &&
                distinct == points.size() && homomorphism_failures == 0;
  return report;
}

}  // namespace qsym

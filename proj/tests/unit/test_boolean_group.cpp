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

#include <cmath>
#include <complex>
#include <random>

#include "qsym/boolean_group.hpp"
#include "qsym/errors.hpp"

using namespace qsym;
using cd = std::complex<double>;

namespace {

// Straight from the definitions: phi(e_i) = 2^-w sum_j (-1)^{i.j} T_j and
// psi(T_j) = sum_i (-1)^{i.j} e_i, as an O(4^w) double sum.
std::vector<cd> direct_transform(const std::vector<cd>& v, int width, double scale) {
  const std::size_t size = std::size_t{1} << width;
  std::vector<cd> out(size);
  for (std::size_t j = 0; j < size; ++j) {
    for (std::size_t i = 0; i < size; ++i) {
      const int parity = __builtin_popcount(static_cast<unsigned>(i & j)) & 1;
      out[j] += (parity ? -1.0 : 1.0) * v[i];
    }
    out[j] *= scale;
  }
  return out;
}

std::vector<cd> random_coefficients(int width, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<cd> v(std::size_t{1} << width);
  for (auto& c : v) c = {gauss(rng), gauss(rng)};
  return v;
}

double max_abs_diff(const std::vector<cd>& a, const std::vector<cd>& b) {
  double d = 0.0;
  for (std::size_t s = 0; s < a.size(); ++s) d = std::max(d, std::abs(a[s] - b[s]));
  return d;
}

int gf2_rank(std::vector<std::uint32_t> rows) {
  int rank = 0;
  for (int bit = 31; bit >= 0; --bit) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                              [&](std::uint32_t r) { return (r >> bit) & 1U; });
    if (pivot == rows.end()) continue;
    std::swap(*pivot, rows[static_cast<std::size_t>(rank)]);
    for (std::size_t s = 0; s < rows.size(); ++s) {
      if (static_cast<int>(s) != rank && ((rows[s] >> bit) & 1U)) {
        rows[s] ^= rows[static_cast<std::size_t>(rank)];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("group words") {
  const auto t1 = GroupWord::generator(3, 1);
  const auto t3 = GroupWord::generator(3, 3);
  const auto t4 = GroupWord::generator(3, 4);
  CHECK(t1.bits() == 0b001);
  CHECK(t3.bits() == 0b100);
  CHECK(t4.bits() == 0b111);
  CHECK(t4.length() == 3);
  CHECK((t1 * t1) == GroupWord::identity(3));
  CHECK_THROWS_AS(t1 * GroupWord::generator(4, 1), DimensionError);
  CHECK_THROWS_AS(GroupWord(2, 0b100), UsageError);
  CHECK_THROWS_AS(GroupWord::generator(3, 5), UsageError);
}

TEST_CASE("XOR group laws, exhaustive for small widths") {
  for (int width = 0; width <= 5; ++width) {
    const std::uint32_t size = 1U << width;
    const auto e = GroupWord::identity(width);
    for (std::uint32_t a = 0; a < size; ++a) {
      const GroupWord x(width, a);
      CHECK((x * e) == x);
      CHECK((x * x) == e);
      for (std::uint32_t b = 0; b < size; ++b) {
        const GroupWord y(width, b);
        CHECK((x * y) == (y * x));
        for (std::uint32_t c = 0; c < size; c += 3) {
          const GroupWord z(width, c);
          CHECK(((x * y) * z) == (x * (y * z)));
        }
      }
    }
  }
  // Wider groups are too large to square; check the laws along a seeded walk.
  std::mt19937_64 rng(7);
  for (int width = 6; width <= 12; ++width) {
    std::uniform_int_distribution<std::uint32_t> pick(0, (1U << width) - 1);
    for (int trial = 0; trial < 2000; ++trial) {
      const GroupWord x(width, pick(rng)), y(width, pick(rng)), z(width, pick(rng));
      REQUIRE(((x * y) * z) == (x * (y * z)));
      REQUIRE((x * x) == GroupWord::identity(width));
    }
  }
}

TEST_CASE("fourier of the identity word indicator is flat") {
  for (int width : {0, 1, 4, 7}) {
    const auto v = fourier(FunctionVector::basis_vector(width, Basis::point, 0));
    CHECK(v.basis == Basis::group);
    for (const auto& c : v.coefficients) CHECK(std::abs(c - std::ldexp(1.0, -width)) < 1e-15);
  }
}

TEST_CASE("fourier of the t_1 indicator at width 2") {
  const auto v = fourier(FunctionVector::basis_vector(2, Basis::point, 0b01));
  const std::vector<cd> expected{0.25, -0.25, 0.25, -0.25};
  CHECK(max_abs_diff(v.coefficients, expected) == 0.0);
}

TEST_CASE("inverse fourier of words gives Walsh characters") {
  const auto ones = inverse_fourier(FunctionVector::basis_vector(3, Basis::group, 0));
  for (const auto& c : ones.coefficients) CHECK(c == cd(1.0));
  const auto t1 = inverse_fourier(FunctionVector::basis_vector(3, Basis::group, 0b001));
  for (std::size_t j = 0; j < 8; ++j) CHECK(t1.coefficients[j] == cd((j & 1U) ? -1.0 : 1.0));
}

TEST_CASE("fast transform matches the direct sign sum") {
  std::mt19937_64 rng(11);
  for (int width = 0; width <= 8; ++width) {
    const auto v = random_coefficients(width, rng);
    const auto phi = fourier(FunctionVector(width, Basis::point, v));
    CHECK(max_abs_diff(phi.coefficients, direct_transform(v, width, std::ldexp(1.0, -width))) <
          1e-12);
    const auto psi = inverse_fourier(FunctionVector(width, Basis::group, v));
    CHECK(max_abs_diff(psi.coefficients, direct_transform(v, width, 1.0)) < 1e-12);
  }
}

TEST_CASE("round trips on random vectors") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 100; ++trial) {
    const int width = trial % 11;
    const FunctionVector v(width, Basis::point, random_coefficients(width, rng));
    CHECK(max_abs_diff(inverse_fourier(fourier(v)).coefficients, v.coefficients) < 1e-12);
    const FunctionVector w(width, Basis::group, random_coefficients(width, rng));
    CHECK(max_abs_diff(fourier(inverse_fourier(w)).coefficients, w.coefficients) < 1e-12);
  }
}

TEST_CASE("fourier scales inner products by 2^-w") {
  std::mt19937_64 rng(5);
  for (int width = 1; width <= 10; ++width) {
    const auto v = random_coefficients(width, rng);
    const auto w = random_coefficients(width, rng);
    const auto fv = fourier(FunctionVector(width, Basis::point, v)).coefficients;
    const auto fw = fourier(FunctionVector(width, Basis::point, w)).coefficients;
    cd lhs = 0.0, rhs = 0.0;
    for (std::size_t s = 0; s < v.size(); ++s) {
      lhs += std::conj(fv[s]) * fw[s];
      rhs += std::conj(v[s]) * w[s];
    }
    CHECK(std::abs(lhs - std::ldexp(1.0, -width) * rhs) < 1e-10);
  }
}

TEST_CASE("transforms reject the wrong basis and sizes") {
  CHECK_THROWS_AS(fourier(FunctionVector::basis_vector(2, Basis::group, 0)), UsageError);
  CHECK_THROWS_AS(inverse_fourier(FunctionVector::basis_vector(2, Basis::point, 0)),
                  UsageError);
  CHECK_THROWS_AS(FunctionVector(3, Basis::point, std::vector<cd>(7)), UsageError);
}

TEST_CASE("folded cube shape") {
  CHECK(folded_cube(3) == complete_graph(4));
  for (int n = 2; n <= 12; ++n) {
    const auto g = folded_cube(n);
    CHECK(g.n_vertices() == (1 << (n - 1)));
    for (int v = 0; v < g.n_vertices(); ++v) {
      if (g.degree(v) != n && n > 2) FAIL("folded cube is not n-regular");
    }
    CHECK(cayley_folded_cube(n) == g);
  }
  const auto g = folded_cube(5);
  for (int v = 0; v < 16; ++v) {
    std::vector<int> expected;
    for (int k = 1; k <= 5; ++k) {
      expected.push_back(static_cast<int>(GroupWord(4, static_cast<std::uint32_t>(v)).bits() ^
                                          GroupWord::generator(4, k).bits()));
    }
    std::sort(expected.begin(), expected.end());
    CHECK(g.neighbors(v) == expected);
  }
  CHECK_THROWS_AS(folded_cube(1), UsageError);
  CHECK_THROWS_AS(folded_cube(kMaxFoldedCubeOrder + 1), CapacityError);
}

TEST_CASE("tau generators") {
  const auto taus3 = tau_generators(3);
  REQUIRE(taus3.size() == 3);
  CHECK(taus3[0] == GroupWord::generator(2, 2));
  CHECK(taus3[1] == GroupWord::generator(2, 1));
  CHECK(taus3[2] == GroupWord(2, 0b11));

  const auto taus5 = tau_generators(5);
  CHECK((taus5[0] * taus5[1] * taus5[2] * taus5[3]) == taus5[4]);
  CHECK(taus5[4] == GroupWord(4, 0b1111));

  for (int n = 3; n <= 13; n += 2) {
    const auto taus = tau_generators(n);
    std::vector<std::uint32_t> rows;
    auto product = GroupWord::identity(n - 1);
    for (int i = 0; i + 1 < n; ++i) {
      rows.push_back(taus[static_cast<std::size_t>(i)].bits());
      product = product * taus[static_cast<std::size_t>(i)];
    }
    CHECK(gf2_rank(rows) == n - 1);
    CHECK(product == taus.back());
  }
  CHECK_THROWS_AS(tau_generators(4), UsageError);
  CHECK_THROWS_AS(tau_generators(1), UsageError);
}

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
#include <compare>
#include <cstdint>
#include <vector>

#include "qsym/graph.hpp"

namespace qsym {

// An element t_1^{i_1} ... t_w^{i_w} of Z_2^w. Bit s holds the exponent of
// t_{s+1}; the group law is XOR.
class GroupWord {
 public:
  static constexpr int kMaxWidth = 30;

  GroupWord() = default;
  // Throws UsageError if width is outside [0, kMaxWidth] or bits has set bits
  // at or above `width`.
  GroupWord(int width, std::uint32_t bits);

  static GroupWord identity(int width) { return GroupWord(width, 0); }
  // t_k for 1 <= k <= width, and t_{width+1} = t_1 ... t_width.
  static GroupWord generator(int width, int k);

  int width() const { return width_; }
  std::uint32_t bits() const { return bits_; }
  bool exponent(int s) const { return ((bits_ >> s) & 1U) != 0; }
  // Word length with respect to t_1, ..., t_width.
  int length() const;

  // Throws DimensionError on a width mismatch.
  GroupWord operator*(const GroupWord& other) const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend auto operator<=>(const GroupWord&, const GroupWord&) = default;

 private:
  int width_ = 0;
  std::uint32_t bits_ = 0;
};

// Parity of the overlap i . j, i.e. the exponent in (-1)^{i.j}.
inline int character_sign(std::uint32_t i, std::uint32_t j) {
  return (__builtin_popcount(i & j) & 1) != 0 ? -1 : 1;
}

enum class Basis {
  point,  // e_g, indicator functions on the group
  group,  // T_g, group elements in the group algebra
};

// Coefficients over the 2^width group elements in bit-lexicographic order.
struct FunctionVector {
  int width = 0;
  Basis basis = Basis::point;
  std::vector<std::complex<double>> coefficients;

  FunctionVector() = default;
  // Throws UsageError if coefficients.size() != 2^width.
  FunctionVector(int width, Basis basis,
                 std::vector<std::complex<double>> coefficients);

  static FunctionVector basis_vector(int width, Basis basis,
                                     std::uint32_t index);
};

// e_i -> 2^{-w} sum_j (-1)^{i.j} T_j. Requires point basis.
FunctionVector fourier(const FunctionVector& v);
// T_i -> sum_j (-1)^{i.j} e_j. Requires group basis.
FunctionVector inverse_fourier(const FunctionVector& v);

// Largest n accepted by the folded cube constructors (2^{n-1} <= 4096).
inline constexpr int kMaxFoldedCubeOrder = 13;

// Vertices are bit strings of length n-1; x ~ y iff they differ in exactly
// one position or y is the complement of x. For n == 2 both rules give the
// same single edge.
Graph folded_cube(int n);
// Cayley graph of Z_2^{n-1} with connecting set {t_1, ..., t_{n-1},
// t_n = t_1 ... t_{n-1}}.
Graph cayley_folded_cube(int n);

// tau_i = t_1 ... (t_i omitted) ... t_{n-1} for i < n and tau_n = t_n, as
// words of width n-1. Requires odd n >= 3.
std::vector<GroupWord> tau_generators(int n);

}  // namespace qsym

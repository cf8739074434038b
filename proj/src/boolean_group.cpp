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

#include "qsym/boolean_group.hpp"

#include <string>
#include <utility>

#include "qsym/errors.hpp"

namespace qsym {

GroupWord::GroupWord(int width, std::uint32_t bits) : width_(width), bits_(bits) {
  if (width < 0 || width > kMaxWidth) {
    throw UsageError("group word width " + std::to_string(width) +
                     " outside [0, " + std::to_string(kMaxWidth) + "]");
  }
  if ((bits >> width) != 0) {
    throw UsageError("group word has bits beyond its width");
  }
}

GroupWord GroupWord::generator(int width, int k) {
  if (k < 1 || k > width + 1) {
    throw UsageError("generator index " + std::to_string(k) +
                     " outside [1, " + std::to_string(width + 1) + "]");
  }
  if (k == width + 1) return GroupWord(width, (std::uint32_t{1} << width) - 1);
  return GroupWord(width, std::uint32_t{1} << (k - 1));
}

int GroupWord::length() const { return __builtin_popcount(bits_); }

GroupWord GroupWord::operator*(const GroupWord& other) const {
  if (other.width_ != width_) {
    throw DimensionError("group words of widths " + std::to_string(width_) +
                         " and " + std::to_string(other.width_));
  }
  return GroupWord(width_, bits_ ^ other.bits_);
}

FunctionVector::FunctionVector(int width_, Basis basis_,
                               std::vector<std::complex<double>> coefficients_)
    : width(width_), basis(basis_), coefficients(std::move(coefficients_)) {
  if (width < 0 || width > 24) {
    throw UsageError("function vector width out of range");
  }
  if (coefficients.size() != (std::size_t{1} << width)) {
    throw UsageError("function vector of width " + std::to_string(width) +
                     " needs " + std::to_string(std::size_t{1} << width) +
                     " coefficients, got " +
                     std::to_string(coefficients.size()));
  }
}

FunctionVector FunctionVector::basis_vector(int width, Basis basis,
                                            std::uint32_t index) {
  std::vector<std::complex<double>> c(std::size_t{1} << width);
  c.at(index) = 1.0;
  return FunctionVector(width, basis, std::move(c));
}

namespace {

// Unnormalised Walsh-Hadamard butterfly: out_j = sum_i (-1)^{i.j} in_i.
void walsh_hadamard(std::vector<std::complex<double>>& a) {
  for (std::size_t h = 1; h < a.size(); h <<= 1) {
    for (std::size_t i = 0; i < a.size(); i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const auto x = a[j];
        const auto y = a[j + h];
        a[j] = x + y;
        a[j + h] = x - y;
      }
    }
  }
}

}  // namespace

FunctionVector fourier(const FunctionVector& v) {
  if (v.basis != Basis::point) {
    throw UsageError("fourier expects a point-basis vector");
  }
  auto c = v.coefficients;
  walsh_hadamard(c);
  const double scale = 1.0 / static_cast<double>(c.size());
  for (auto& x : c) x *= scale;
  return FunctionVector(v.width, Basis::group, std::move(c));
}

FunctionVector inverse_fourier(const FunctionVector& v) {
  if (v.basis != Basis::group) {
    throw UsageError("inverse_fourier expects a group-basis vector");
  }
  auto c = v.coefficients;
  walsh_hadamard(c);
  return FunctionVector(v.width, Basis::point, std::move(c));
}

namespace {

void check_folded_cube_order(int n) {
  if (n < 2) {
    throw UsageError("folded cube order must be at least 2, got " +
                     std::to_string(n));
  }
  if (n > kMaxFoldedCubeOrder) {
    throw CapacityError("folded cube order " + std::to_string(n) +
                        " exceeds the bound " +
                        std::to_string(kMaxFoldedCubeOrder));
  }
}

}  // namespace

Graph folded_cube(int n) {
  check_folded_cube_order(n);
  const std::uint32_t count = std::uint32_t{1} << (n - 1);
  const std::uint32_t all = count - 1;
  std::vector<std::pair<int, int>> edges;
  for (std::uint32_t x = 0; x < count; ++x) {
    for (std::uint32_t y = x + 1; y < count; ++y) {
      if (__builtin_popcount(x ^ y) == 1 || y == (x ^ all)) {
        edges.emplace_back(static_cast<int>(x), static_cast<int>(y));
      }
    }
  }
  return Graph(static_cast<int>(count), edges);
}

Graph cayley_folded_cube(int n) {
  check_folded_cube_order(n);
  const int width = n - 1;
  const std::size_t count = std::size_t{1} << width;
  std::vector<std::uint8_t> adjacency(count * count, 0);
  for (std::uint32_t g = 0; g < count; ++g) {
    const GroupWord vertex(width, g);
    for (int k = 1; k <= n; ++k) {
      const auto neighbor = vertex * GroupWord::generator(width, k);
      adjacency[g * count + neighbor.bits()] = 1;
    }
  }
  return Graph::from_adjacency(static_cast<int>(count), std::move(adjacency));
}

std::vector<GroupWord> tau_generators(int n) {
  if (n < 3 || n % 2 == 0) {
    throw UsageError("tau generators need odd n >= 3, got " +
                     std::to_string(n));
  }
  const int width = n - 1;
  const auto all = GroupWord::generator(width, n);
  std::vector<GroupWord> taus;
  taus.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) {
    taus.push_back(all * GroupWord::generator(width, i));
  }
  taus.push_back(all);

  auto product = GroupWord::identity(width);
  for (int i = 0; i + 1 < n; ++i) product = product * taus[static_cast<std::size_t>(i)];
  if (product != taus.back()) {
    throw Error("tau_n != tau_1 ... tau_{n-1}; generator construction is broken");
  }
  return taus;
}

}  // namespace qsym

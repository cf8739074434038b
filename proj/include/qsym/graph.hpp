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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qsym {

// A bijection on {0, ..., n-1}, stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  // Throws UsageError unless `images` is a bijection on [0, images.size()).
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // Builds a permutation from 0-based disjoint cycles; unlisted points are
  // fixed.
  static Permutation from_cycles(int n,
                                 const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  // (this * inner)(i) == this(inner(i)).
  Permutation compose(const Permutation& inner) const;
  Permutation inverse() const;
  // this^k for k >= 0; k == 0 gives the identity.
  Permutation pow(std::int64_t k) const;

  // Cycles of length >= 2, each rotated to start at its minimum, sorted by
  // that minimum.
  std::vector<std::vector<int>> cycles() const;
  // lcm of the cycle lengths; 1 for the identity.
  std::int64_t order() const;
  // Moved points in ascending order.
  std::vector<int> support() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

// True iff the moved-point sets of p and q are disjoint. Throws
// DimensionError on a size mismatch.
bool are_disjoint(const Permutation& p, const Permutation& q);

// Finite simple undirected graph with a dense 0/1 adjacency matrix.
class Graph {
 public:
  Graph() = default;
  // Throws UsageError on out-of-range endpoints, loops, or repeated
  // unordered pairs.
  Graph(int n_vertices, std::span<const std::pair<int, int>> edges);
  // Throws UsageError unless `adjacency` is a symmetric 0/1 n*n matrix with
  // zero diagonal (row-major).
  static Graph from_adjacency(int n_vertices,
                              std::vector<std::uint8_t> adjacency);

  int n_vertices() const { return n_; }
  bool adjacent(int i, int j) const {
    return adjacency_[static_cast<std::size_t>(i) * n_ + j] != 0;
  }
  std::span<const std::uint8_t> adjacency() const { return adjacency_; }
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  // Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> adjacency_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);

// True iff p preserves adjacency, i.e. P*eps == eps*P for the permutation
// matrix P. Throws DimensionError if p.size() != g.n_vertices().
bool is_automorphism(const Graph& g, const Permutation& p);

struct AutomorphismOptions {
  int max_vertices = 32;
  // Guards against groups too large to list (K_32 and friends).
  std::size_t max_count = std::size_t{1} << 22;
};

// Every automorphism of g, sorted lexicographically by image array (so the
// identity comes first). Throws CapacityError when either bound in `options`
// is exceeded.
std::vector<Permutation> automorphisms(const Graph& g,
                                       const AutomorphismOptions& options = {});

// The first pair (a, b), a before b in automorphisms() order, of
// non-trivial automorphisms with disjoint supports.
std::optional<std::pair<Permutation, Permutation>> find_disjoint_pair(
    const Graph& g, const AutomorphismOptions& options = {});

}  // namespace qsym

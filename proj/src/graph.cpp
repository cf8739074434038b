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

#include "qsym/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "qsym/errors.hpp"

namespace qsym {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw UsageError("permutation images are not a bijection on [0, " +
                       std::to_string(n) + ")");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(
    int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& cycle : cycles) {
    for (std::size_t a = 0; a < cycle.size(); ++a) {
      const int from = cycle[a];
      const int to = cycle[(a + 1) % cycle.size()];
      if (from < 0 || from >= n || used[static_cast<std::size_t>(from)]) {
        throw UsageError("cycles are not disjoint or out of range");
      }
      used[static_cast<std::size_t>(from)] = true;
      images[static_cast<std::size_t>(from)] = to;
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (inner.size() != size()) {
    throw DimensionError("cannot compose permutations of different sizes");
  }
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = images_[static_cast<std::size_t>(inner.images_[i])];
  }
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  return Permutation(std::move(out));
}

Permutation Permutation::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  // Walk each cycle k steps; cheaper than repeated composition.
  std::vector<int> out(images_.size());
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start]) continue;
    std::vector<int> cycle;
    for (int v = static_cast<int>(start); !done[static_cast<std::size_t>(v)];
         v = images_[static_cast<std::size_t>(v)]) {
      done[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
    }
    const auto len = static_cast<std::int64_t>(cycle.size());
    for (std::int64_t a = 0; a < len; ++a) {
      out[static_cast<std::size_t>(cycle[static_cast<std::size_t>(a)])] =
          cycle[static_cast<std::size_t>((a + k) % len)];
    }
  }
  return Permutation(std::move(out));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> done(images_.size(), false);
  // Scanning starts in ascending order, so each cycle begins at its minimum.
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start]) continue;
    std::vector<int> cycle;
    for (int v = static_cast<int>(start); !done[static_cast<std::size_t>(v)];
         v = images_[static_cast<std::size_t>(v)]) {
      done[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
    }
    if (cycle.size() >= 2) result.push_back(std::move(cycle));
  }
  return result;
}

std::int64_t Permutation::order() const {
  std::int64_t result = 1;
  for (const auto& cycle : cycles()) {
    result = std::lcm(result, static_cast<std::int64_t>(cycle.size()));
  }
  return result;
}

std::vector<int> Permutation::support() const {
  std::vector<int> moved;
  for (int i = 0; i < size(); ++i) {
    if (images_[static_cast<std::size_t>(i)] != i) moved.push_back(i);
  }
  return moved;
}

bool are_disjoint(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw DimensionError("disjointness test needs permutations of equal size");
  }
  for (int i = 0; i < p.size(); ++i) {
    if (p(i) != i && q(i) != i) return false;
  }
  return true;
}

Graph::Graph(int n_vertices, std::span<const std::pair<int, int>> edges)
    : n_(n_vertices) {
  if (n_vertices < 0) throw UsageError("negative vertex count");
  adjacency_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (const auto& [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) {
      throw UsageError("edge (" + std::to_string(i) + ", " +
                       std::to_string(j) + ") has an endpoint out of range");
    }
    if (i == j) {
      throw UsageError("loop at vertex " + std::to_string(i));
    }
    auto& cell = adjacency_[static_cast<std::size_t>(i) * n_ + j];
    if (cell != 0) {
      throw UsageError("repeated edge {" + std::to_string(std::min(i, j)) +
                       ", " + std::to_string(std::max(i, j)) + "}");
    }
    cell = 1;
    adjacency_[static_cast<std::size_t>(j) * n_ + i] = 1;
  }
}

Graph Graph::from_adjacency(int n_vertices,
                            std::vector<std::uint8_t> adjacency) {
  if (n_vertices < 0 ||
      adjacency.size() != static_cast<std::size_t>(n_vertices) * n_vertices) {
    throw UsageError("adjacency matrix has the wrong size");
  }
  for (int i = 0; i < n_vertices; ++i) {
    for (int j = 0; j < n_vertices; ++j) {
      const auto a = adjacency[static_cast<std::size_t>(i) * n_vertices + j];
      const auto b = adjacency[static_cast<std::size_t>(j) * n_vertices + i];
      if (a > 1 || a != b || (i == j && a != 0)) {
        throw UsageError(
            "adjacency matrix must be symmetric 0/1 with zero diagonal");
      }
    }
  }
  Graph g;
  g.n_ = n_vertices;
  g.adjacency_ = std::move(adjacency);
  return g;
}

int Graph::degree(int v) const {
  int d = 0;
  for (int j = 0; j < n_; ++j) d += adjacent(v, j) ? 1 : 0;
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j) {
    if (adjacent(v, j)) out.push_back(j);
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (adjacent(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw UsageError("a cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.n_vertices()) {
    throw DimensionError("permutation acts on " + std::to_string(p.size()) +
                         " points but the graph has " +
                         std::to_string(g.n_vertices()) + " vertices");
  }
  const int n = g.n_vertices();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j) != g.adjacent(p(i), p(j))) return false;
    }
  }
  return true;
}

namespace {

// Refinement-free backtracking: vertices are matched in a fixed order and a
// candidate image must share the vertex invariant and agree on adjacency with
// every vertex matched so far.
class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, std::size_t max_count)
      : g_(g), n_(g.n_vertices()), max_count_(max_count) {
    std::vector<std::vector<int>> neighbor_degrees(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      for (int w : g.neighbors(v)) {
        neighbor_degrees[static_cast<std::size_t>(v)].push_back(g.degree(w));
      }
      std::sort(neighbor_degrees[static_cast<std::size_t>(v)].begin(),
                neighbor_degrees[static_cast<std::size_t>(v)].end());
    }
    // Vertices sorted by (degree, neighbor-degree multiset); equal invariants
    // share a class id.
    std::vector<int> by_key(static_cast<std::size_t>(n_));
    std::iota(by_key.begin(), by_key.end(), 0);
    auto invariant = [&](int v) -> const std::vector<int>& {
      return neighbor_degrees[static_cast<std::size_t>(v)];
    };
    std::stable_sort(by_key.begin(), by_key.end(), [&](int a, int b) {
      if (invariant(a).size() != invariant(b).size()) {
        return invariant(a).size() < invariant(b).size();
      }
      return invariant(a) < invariant(b);
    });
    klass_.assign(static_cast<std::size_t>(n_), 0);
    int current = 0;
    for (std::size_t idx = 1; idx < by_key.size(); ++idx) {
      if (invariant(by_key[idx]) != invariant(by_key[idx - 1])) ++current;
      klass_[static_cast<std::size_t>(by_key[idx])] = current;
    }
    order_ = by_key;
    image_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), false);
  }

  std::vector<Permutation> run() {
    extend(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void extend(int depth) {
    if (depth == n_) {
      if (found_.size() >= max_count_) {
        throw CapacityError("automorphism group exceeds " +
                            std::to_string(max_count_) + " elements");
      }
      found_.emplace_back(image_);
      return;
    }
    const int v = order_[static_cast<std::size_t>(depth)];
    for (int w = 0; w < n_; ++w) {
      if (used_[static_cast<std::size_t>(w)] ||
          klass_[static_cast<std::size_t>(w)] !=
              klass_[static_cast<std::size_t>(v)]) {
        continue;
      }
      bool consistent = true;
      for (int d = 0; d < depth && consistent; ++d) {
        const int u = order_[static_cast<std::size_t>(d)];
        consistent = g_.adjacent(v, u) ==
                     g_.adjacent(w, image_[static_cast<std::size_t>(u)]);
      }
      if (!consistent) continue;
      image_[static_cast<std::size_t>(v)] = w;
      used_[static_cast<std::size_t>(w)] = true;
      extend(depth + 1);
      used_[static_cast<std::size_t>(w)] = false;
      image_[static_cast<std::size_t>(v)] = -1;
    }
  }

  const Graph& g_;
  int n_;
  std::size_t max_count_;
  std::vector<int> klass_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

}  // namespace

std::vector<Permutation> automorphisms(const Graph& g,
                                       const AutomorphismOptions& options) {
  if (g.n_vertices() > options.max_vertices) {
    throw CapacityError("graph has " + std::to_string(g.n_vertices()) +
                        " vertices; automorphism search is bounded at " +
                        std::to_string(options.max_vertices));
  }
  return AutomorphismSearch(g, options.max_count).run();
}

std::optional<std::pair<Permutation, Permutation>> find_disjoint_pair(
    const Graph& g, const AutomorphismOptions& options) {
  const auto autos = automorphisms(g, options);
  if (g.n_vertices() <= 64) {
    std::vector<std::uint64_t> masks;
    masks.reserve(autos.size());
    for (const auto& p : autos) {
      std::uint64_t m = 0;
      for (int i : p.support()) m |= std::uint64_t{1} << i;
      masks.push_back(m);
    }
    for (std::size_t a = 0; a < autos.size(); ++a) {
      if (masks[a] == 0) continue;
      for (std::size_t b = a + 1; b < autos.size(); ++b) {
        if (masks[b] != 0 && (masks[a] & masks[b]) == 0) {
          return std::make_pair(autos[a], autos[b]);
        }
      }
    }
    return std::nullopt;
  }
  for (std::size_t a = 0; a < autos.size(); ++a) {
    if (autos[a].is_identity()) continue;
    for (std::size_t b = a + 1; b < autos.size(); ++b) {
      if (!autos[b].is_identity() && are_disjoint(autos[a], autos[b])) {
        return std::make_pair(autos[a], autos[b]);
      }
    }
  }
  return std::nullopt;
}

}  // namespace qsym

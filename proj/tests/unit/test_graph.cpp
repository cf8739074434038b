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

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "qsym/boolean_group.hpp"
#include "qsym/errors.hpp"
#include "qsym/graph.hpp"
#include "qsym/json_io.hpp"

using namespace qsym;
using testing::clebsch_figure;
using testing::clebsch_sigma;
using testing::clebsch_tau;

namespace {

// Checks every permutation of [0, n) directly; only usable for tiny n.
std::size_t count_automorphisms_by_brute_force(const Graph& g) {
  std::vector<int> images(static_cast<std::size_t>(g.n_vertices()));
  for (int i = 0; i < g.n_vertices(); ++i) images[static_cast<std::size_t>(i)] = i;
  std::size_t count = 0;
  do {
    if (is_automorphism(g, Permutation(images))) ++count;
  } while (std::next_permutation(images.begin(), images.end()));
  return count;
}

void check_group(const std::vector<Permutation>& group) {
  const std::set<Permutation> members(group.begin(), group.end());
  REQUIRE(members.size() == group.size());
  CHECK(members.count(Permutation::identity(group.front().size())) == 1);
  for (const auto& a : group) {
    CHECK(members.count(a.inverse()) == 1);
    for (const auto& b : group) {
      if (members.count(a.compose(b)) != 1) {
        FAIL("not closed under composition");
      }
    }
  }
}

}  // namespace

TEST_CASE("permutation basics") {
  const auto p = Permutation::from_cycles(6, {{0, 2, 4}, {1, 5}});
  CHECK(p.images() == std::vector<int>{2, 5, 4, 3, 0, 1});
  CHECK(p.order() == 6);
  CHECK(p.support() == std::vector<int>{0, 1, 2, 4, 5});
  CHECK(p.cycles() == std::vector<std::vector<int>>{{0, 2, 4}, {1, 5}});
  CHECK(p.pow(6).is_identity());
  CHECK(p.pow(-1) == p.inverse());
  CHECK(p.pow(4) == p.compose(p).compose(p).compose(p));
  CHECK(p.compose(p.inverse()).is_identity());
  CHECK_THROWS_AS(Permutation({0, 0, 1}), UsageError);
  CHECK_THROWS_AS(Permutation({0, 3}), UsageError);
  CHECK_THROWS_AS(Permutation::from_cycles(4, {{0, 1}, {1, 2}}), UsageError);
}

TEST_CASE("graph construction rejects malformed edge lists") {
  const std::vector<std::pair<int, int>> loop{{0, 0}};
  const std::vector<std::pair<int, int>> duplicate{{0, 1}, {1, 0}};
  const std::vector<std::pair<int, int>> out_of_range{{0, 3}};
  CHECK_THROWS_AS(Graph(3, loop), UsageError);
  CHECK_THROWS_AS(Graph(3, duplicate), UsageError);
  CHECK_THROWS_AS(Graph(3, out_of_range), UsageError);
  CHECK(complete_graph(4).edges().size() == 6);
  CHECK(cycle_graph(5).degree(3) == 2);
}

TEST_CASE("is_automorphism") {
  const auto clebsch = clebsch_figure();
  CHECK(is_automorphism(clebsch, clebsch_sigma()));
  CHECK(is_automorphism(clebsch, clebsch_tau()));
  CHECK(is_automorphism(clebsch, Permutation::identity(16)));
  CHECK(is_automorphism(cycle_graph(7), Permutation::identity(7)));
  CHECK_FALSE(is_automorphism(cycle_graph(5), Permutation::from_cycles(5, {{0, 1}})));
  CHECK_THROWS_AS(is_automorphism(cycle_graph(5), Permutation::identity(4)),
                  DimensionError);
}

TEST_CASE("automorphism counts") {
  CHECK(automorphisms(complete_graph(4)).size() == 24);
  CHECK(automorphisms(cycle_graph(5)).size() == 10);
  // 1920 was cross-checked with an independent VF2 isomorphism enumeration.
  CHECK(automorphisms(clebsch_figure()).size() == 1920);
  CHECK(automorphisms(folded_cube(5)).size() == 1920);
  CHECK(automorphisms(folded_cube(3)).size() == 24);

  SUBCASE("agrees with brute force on small graphs") {
    const std::vector<std::pair<int, int>> path{{0, 1}, {1, 2}, {2, 3}, {1, 4}};
    const std::vector<Graph> graphs{complete_graph(5), cycle_graph(6), Graph(5, path),
                                    Graph(4, std::vector<std::pair<int, int>>{})};
    for (const auto& g : graphs) {
      CHECK(automorphisms(g).size() == count_automorphisms_by_brute_force(g));
    }
  }
}

TEST_CASE("automorphisms form a sorted group") {
  for (const auto& g : {complete_graph(4), cycle_graph(5), folded_cube(3), folded_cube(5)}) {
    const auto autos = automorphisms(g);
    CHECK(std::is_sorted(autos.begin(), autos.end()));
    CHECK(autos.front().is_identity());
    for (const auto& p : autos) CHECK(is_automorphism(g, p));
    if (autos.size() <= 120) check_group(autos);
  }
}

TEST_CASE("folded cubes are vertex transitive") {
  for (int n : {3, 4, 5, 6}) {
    const auto g = folded_cube(n);
    const auto autos = automorphisms(g);
    std::set<int> orbit;
    for (const auto& p : autos) orbit.insert(p(0));
    CHECK(static_cast<int>(orbit.size()) == g.n_vertices());
  }
}

TEST_CASE("automorphism enumeration bounds") {
  CHECK_THROWS_AS(automorphisms(complete_graph(33)), CapacityError);
  AutomorphismOptions small;
  small.max_count = 100;
  CHECK_THROWS_AS(automorphisms(complete_graph(6), small), CapacityError);
}

TEST_CASE("are_disjoint") {
  CHECK(are_disjoint(clebsch_sigma(), clebsch_tau()));
  const auto p = Permutation::from_cycles(4, {{0, 1}});
  CHECK_FALSE(are_disjoint(p, p));
  CHECK(are_disjoint(p, Permutation::from_cycles(4, {{2, 3}})));
  CHECK_THROWS_AS(are_disjoint(p, Permutation::identity(5)), DimensionError);
}

TEST_CASE("find_disjoint_pair") {
  for (const auto& g : {complete_graph(4), clebsch_figure(), folded_cube(4), folded_cube(5)}) {
    const auto pair = find_disjoint_pair(g);
    REQUIRE(pair.has_value());
    const auto& [a, b] = *pair;
    CHECK_FALSE(a.is_identity());
    CHECK_FALSE(b.is_identity());
    CHECK(is_automorphism(g, a));
    CHECK(is_automorphism(g, b));
    CHECK(are_disjoint(a, b));
  }
  const auto k4 = find_disjoint_pair(complete_graph(4));
  CHECK(k4->first == Permutation::from_cycles(4, {{2, 3}}));
  CHECK(k4->second == Permutation::from_cycles(4, {{0, 1}}));

  CHECK_FALSE(find_disjoint_pair(cycle_graph(5)).has_value());
  // Every pair of non-trivial pentagon symmetries shares a moved point.
  const auto autos = automorphisms(cycle_graph(5));
  for (const auto& a : autos) {
    for (const auto& b : autos) {
      if (!a.is_identity() && !b.is_identity()) CHECK_FALSE(are_disjoint(a, b));
    }
  }
}

TEST_CASE("bundled graph fixtures") {
  CHECK(read_graph_file(testing::fixture_path("clebsch.json")) == folded_cube(5));
  CHECK(read_graph_file(testing::fixture_path("clebsch_figure.json")) == clebsch_figure());
  CHECK(read_graph_file(testing::fixture_path("k4.json")) == complete_graph(4));
  CHECK(read_graph_file(testing::fixture_path("c5.json")) == cycle_graph(5));
}

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

#include <string>
#include <vector>

#include "qsym/graph.hpp"

namespace qsym::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(QSYM_FIXTURE_DIR) + "/" + name;
}

// The Clebsch graph as labelled in the drawing with 16 points, shifted to
// 0-based vertex names.
inline Graph clebsch_figure() {
  static const std::vector<std::pair<int, int>> edges{
      {0, 1},   {0, 2},   {0, 4},   {0, 8},   {0, 15},  {1, 3},   {1, 6},
      {1, 10},  {1, 13},  {2, 3},   {2, 5},   {2, 9},   {2, 14},  {3, 7},
      {3, 11},  {3, 12},  {4, 5},   {4, 6},   {4, 11},  {4, 12},  {5, 7},
      {5, 10},  {5, 13},  {6, 7},   {6, 9},   {6, 14},  {7, 8},   {7, 15},
      {8, 9},   {8, 10},  {8, 12},  {9, 11},  {9, 13},  {10, 11}, {10, 14},
      {11, 15}, {12, 13}, {12, 14}, {13, 15}, {14, 15}};
  return Graph(16, edges);
}

// (2 3)(6 7)(10 11)(14 15) and (1 4)(5 8)(9 12)(13 16) in 1-based names.
inline Permutation clebsch_sigma() {
  return Permutation::from_cycles(16, {{1, 2}, {5, 6}, {9, 10}, {13, 14}});
}
inline Permutation clebsch_tau() {
  return Permutation::from_cycles(16, {{0, 3}, {4, 7}, {8, 11}, {12, 15}});
}

}  // namespace qsym::testing

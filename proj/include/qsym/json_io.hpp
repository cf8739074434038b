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

#include <istream>
#include <string>

#include <json.hpp>

#include "qsym/boolean_group.hpp"
#include "qsym/graph.hpp"
#include "qsym/so_twist.hpp"
#include "qsym/spectral.hpp"
#include "qsym/star_algebra.hpp"

namespace qsym {

using Json = nlohmann::ordered_json;

// Graph files: {"n": <int>, "edges": [[i, j], ...]} with 0-based endpoints.
// Every malformed input (bad JSON, wrong types, loops, duplicates) raises
// ParseError.
Graph parse_graph(const Json& j);
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
Json to_json(const Graph& g);

Json to_json(const Permutation& p);
Permutation parse_permutation(const Json& j);

Json to_json(const FunctionVector& v);
FunctionVector parse_function_vector(const Json& j);

Json to_json(const SpectrumReport& r);
Json to_json(const WitnessReport& r);
Json to_json(const RecoveryReport& r);
Json to_json(const SignedPermMatrix& g);
Json to_json(const CheckReport& r);

}  // namespace qsym

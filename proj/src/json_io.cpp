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

#include "qsym/json_io.hpp"

#include <fstream>

#include "qsym/errors.hpp"

namespace qsym {

namespace {

Json seed_json(const std::optional<std::uint64_t>& seed) {
  return seed ? Json(*seed) : Json(nullptr);
}

int read_int(const Json& j, const char* field) {
  if (!j.contains(field)) throw ParseError(std::string("missing field \"") + field + "\"");
  const auto& v = j.at(field);
  if (!v.is_number_integer()) {
    throw ParseError(std::string("field \"") + field + "\" must be an integer");
  }
  return v.get<int>();
}

}  // namespace

Graph parse_graph(const Json& j) {
  if (!j.is_object()) throw ParseError("graph must be a JSON object");
  const int n = read_int(j, "n");
  if (n < 0) throw ParseError("\"n\" must be non-negative");
  if (!j.contains("edges") || !j.at("edges").is_array()) {
    throw ParseError("graph needs an \"edges\" array");
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw ParseError("each edge must be a pair of integers, got " + e.dump());
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  try {
    return Graph(n, edges);
  } catch (const UsageError& err) {
    throw ParseError(err.what());
  }
}

Graph read_graph(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
  return parse_graph(j);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file " + path);
  try {
    return read_graph(in);
  } catch (const ParseError& err) {
    throw ParseError(path + ": " + err.what());
  }
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [i, j] : g.edges()) edges.push_back({i, j});
  return Json{{"n", g.n_vertices()}, {"edges", edges}};
}

Json to_json(const Permutation& p) { return Json(p.images()); }

Permutation parse_permutation(const Json& j) {
  if (!j.is_array()) throw ParseError("permutation must be an image array");
  std::vector<int> images;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("permutation images must be integers");
    images.push_back(v.get<int>());
  }
  try {
    return Permutation(std::move(images));
  } catch (const Error& err) {
    throw ParseError(err.what());
  }
}

Json to_json(const FunctionVector& v) {
  Json re = Json::array();
  Json im = Json::array();
  for (const auto& c : v.coefficients) {
    re.push_back(c.real());
    im.push_back(c.imag());
  }
  return Json{{"width", v.width},
              {"basis", v.basis == Basis::point ? "point" : "group"},
              {"re", re},
              {"im", im}};
}

FunctionVector parse_function_vector(const Json& j) {
  if (!j.is_object()) throw ParseError("function vector must be a JSON object");
  const int width = read_int(j, "width");
  if (!j.contains("basis") || !j.at("basis").is_string()) {
    throw ParseError("function vector needs a \"basis\" string");
  }
  const auto basis_name = j.at("basis").get<std::string>();
  if (basis_name != "point" && basis_name != "group") {
    throw ParseError("basis must be \"point\" or \"group\", got \"" + basis_name + "\"");
  }
  if (!j.contains("re") || !j.at("re").is_array()) throw ParseError("missing \"re\" array");
  const auto& re = j.at("re");
  const Json im = j.contains("im") ? j.at("im") : Json::array();
  if (!im.is_array() || (!im.empty() && im.size() != re.size())) {
    throw ParseError("\"im\" must be an array matching \"re\"");
  }
  std::vector<std::complex<double>> coeffs;
  for (std::size_t s = 0; s < re.size(); ++s) {
    if (!re[s].is_number() || (!im.empty() && !im[s].is_number())) {
      throw ParseError("coefficients must be numbers");
    }
    coeffs.emplace_back(re[s].get<double>(), im.empty() ? 0.0 : im[s].get<double>());
  }
  try {
    return FunctionVector(width, basis_name == "point" ? Basis::point : Basis::group,
                          std::move(coeffs));
  } catch (const Error& err) {
    throw ParseError(err.what());
  }
}

Json to_json(const SpectrumReport& r) {
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"k", l.k},
                      {"lambda", l.lambda},
                      {"multiplicity", l.multiplicity},
                      {"max_residual", l.max_residual}});
  }
  return Json{{"n", r.n}, {"levels", levels}, {"numeric_match", r.numeric_match}};
}

Json to_json(const WitnessReport& r) {
  return Json{{"projection_defect", r.projection_defect},
              {"rowsum_defect", r.rowsum_defect},
              {"colsum_defect", r.colsum_defect},
              {"commutation_defect", r.commutation_defect},
              {"noncomm_certificate", r.noncomm_certificate},
              {"seed", seed_json(r.seed)},
              {"pass", r.pass}};
}

Json to_json(const RecoveryReport& r) {
  return Json{{"sigma_representatives", r.sigma_representatives},
              {"tau_representatives", r.tau_representatives},
              {"sigma_residuals", r.sigma_residuals},
              {"tau_residuals", r.tau_residuals},
              {"max_residual", r.max_residual},
              {"pass", r.pass}};
}

Json to_json(const SignedPermMatrix& g) {
  return Json{{"n", g.n()}, {"perm", g.perm().images()}, {"signs", g.signs()}};
}

Json to_json(const CheckReport& r) {
  Json metrics = Json::object();
  for (const auto& [name, value] : r.metrics) metrics[name] = value;
  return Json{{"relation", r.relation},
              {"model", to_string(r.model)},
              {"n", r.n},
              {"max_defect", r.max_defect},
              {"points", r.points},
              {"seed", seed_json(r.seed)},
              {"pass", r.pass},
              {"metrics", metrics}};
}

}  // namespace qsym

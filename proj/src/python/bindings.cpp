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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qsym/cli.hpp"
#include "qsym/errors.hpp"
#include "qsym/json_io.hpp"

namespace py = pybind11;

namespace {

py::object to_python(const qsym::Json& j) {
  switch (j.type()) {
    case qsym::Json::value_t::null:
      return py::none();
    case qsym::Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case qsym::Json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case qsym::Json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case qsym::Json::value_t::number_float:
      return py::float_(j.get<double>());
    case qsym::Json::value_t::string:
      return py::str(j.get<std::string>());
    case qsym::Json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(to_python(v));
      return out;
    }
    default: {
      py::dict out;
      for (const auto& [key, v] : j.items()) out[py::str(key)] = to_python(v);
      return out;
    }
  }
}

qsym::Model parse_model(const std::string& name) {
  if (name == "abelian") return qsym::Model::abelian;
  if (name == "twisted") return qsym::Model::twisted;
  throw qsym::UsageError("model must be \"abelian\" or \"twisted\"");
}

qsym::Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  return qsym::Graph(n, edges);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantum symmetry checks for small graphs";

  auto base = py::register_exception<qsym::Error>(m, "Error");
  py::register_exception<qsym::DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<qsym::CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<qsym::UsageError>(m, "UsageError", base.ptr());
  py::register_exception<qsym::ParseError>(m, "ParseError", base.ptr());

  py::class_<qsym::Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>())
      .def_static("from_cycles", &qsym::Permutation::from_cycles)
      .def("images", &qsym::Permutation::images)
      .def("cycles", &qsym::Permutation::cycles)
      .def("order", &qsym::Permutation::order)
      .def("support", &qsym::Permutation::support)
      .def("compose", &qsym::Permutation::compose)
      .def("inverse", &qsym::Permutation::inverse)
      .def("__call__", &qsym::Permutation::operator())
      .def("__len__", &qsym::Permutation::size)
      .def("__eq__", [](const qsym::Permutation& a, const qsym::Permutation& b) { return a == b; })
      .def("__repr__", [](const qsym::Permutation& p) {
        return "Permutation(" + qsym::to_json(p).dump() + ")";
      });

  py::class_<qsym::Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n_vertices", &qsym::Graph::n_vertices)
      .def("edges", &qsym::Graph::edges)
      .def("adjacent", &qsym::Graph::adjacent)
      .def("degree", &qsym::Graph::degree)
      .def("__eq__", [](const qsym::Graph& a, const qsym::Graph& b) { return a == b; })
      .def_static("from_json", [](const std::string& text) {
        std::istringstream in(text);
        return qsym::read_graph(in);
      })
      .def("to_json", [](const qsym::Graph& g) { return qsym::to_json(g).dump(); });

  m.def("complete_graph", &qsym::complete_graph);
  m.def("cycle_graph", &qsym::cycle_graph);
  m.def("folded_cube", &qsym::folded_cube);
  m.def("cayley_folded_cube", &qsym::cayley_folded_cube);
  m.def("is_automorphism", &qsym::is_automorphism);
  m.def("are_disjoint", &qsym::are_disjoint);
  m.def("automorphisms", [](const qsym::Graph& g) { return qsym::automorphisms(g); });
  m.def("find_disjoint_pair", [](const qsym::Graph& g) { return qsym::find_disjoint_pair(g); });

  m.def("fourier", [](int width, const std::vector<std::complex<double>>& coeffs) {
    return qsym::fourier(qsym::FunctionVector(width, qsym::Basis::point, coeffs)).coefficients;
  }, "Point-basis coefficients to group-basis coefficients.");
  m.def("inverse_fourier", [](int width, const std::vector<std::complex<double>>& coeffs) {
    return qsym::inverse_fourier(qsym::FunctionVector(width, qsym::Basis::group, coeffs))
        .coefficients;
  }, "Group-basis coefficients to point-basis coefficients.");

  m.def("verify_spectrum", [](int n, std::optional<double> tol) {
    const auto t = tol ? qsym::Tolerances::uniform(*tol) : qsym::Tolerances{};
    const auto report = qsym::verify_spectrum(n, t);
    auto out = to_python(qsym::to_json(report)).cast<py::dict>();
    out["pass"] = report.pass(t);
    return out;
  }, py::arg("n"), py::arg("tol") = py::none());

  m.def("witness", [](const qsym::Graph& g, std::uint64_t seed) -> py::object {
    const auto pair = qsym::find_disjoint_pair(g);
    if (!pair) return py::none();
    const auto& [sigma, tau] = *pair;
    const auto rep = qsym::rep_free_product(static_cast<int>(sigma.order()),
                                            static_cast<int>(tau.order()), seed);
    const auto u = qsym::build_witness(g, sigma, tau, rep);
    py::dict out;
    out["sigma"] = sigma;
    out["tau"] = tau;
    out["witness"] = to_python(qsym::to_json(qsym::certify_witness(g, u)));
    out["recovery"] = to_python(qsym::to_json(qsym::recovery_products(u, sigma, tau, rep)));
    return out;
  }, py::arg("graph"), py::arg("seed") = 42);

  m.def("abelian_points", [](int n) {
    py::list out;
    for (const auto& g : qsym::abelian_points(n)) out.append(to_python(qsym::to_json(g)));
    return out;
  });
  m.def("lemma_so", [](int n) { return to_python(qsym::to_json(qsym::lemma_so_bruteforce(n))); });
  m.def("lemma_sumzero", [](int n, const std::string& model, int samples, std::uint64_t seed) {
    return to_python(qsym::to_json(
        qsym::lemma_sumzero_check(n, parse_model(model), {}, {samples, seed})));
  }, py::arg("n"), py::arg("model") = "abelian", py::arg("samples") = 50, py::arg("seed") = 42);
  m.def("lemma_p", [](int n, int l, const std::string& model, int samples, std::uint64_t seed) {
    return to_python(qsym::to_json(
        qsym::lemma_p_check(n, l, parse_model(model), {}, {samples, seed})));
  }, py::arg("n"), py::arg("l"), py::arg("model") = "abelian", py::arg("samples") = 50,
     py::arg("seed") = 42);
  m.def("twisted_relations", [](int m_, int samples, std::uint64_t seed) {
    py::list out;
    for (const auto& r : qsym::twisted_relation_check(m_, {}, {samples, seed})) {
      out.append(to_python(qsym::to_json(r)));
    }
    return out;
  }, py::arg("m"), py::arg("samples") = 50, py::arg("seed") = 42);
  m.def("classical_point_action",
        [](const std::vector<int>& perm, const std::vector<int>& signs, int n) {
          return qsym::classical_point_action(
              qsym::SignedPermMatrix(qsym::Permutation(perm), signs), n);
        });
  m.def("classical_action_sweep",
        [](int n) { return to_python(qsym::to_json(qsym::classical_action_sweep(n))); });

  m.def("run_cli", [](const std::string& command, std::optional<int> n, std::optional<int> m_,
                      std::optional<std::string> graph, std::optional<std::uint64_t> seed,
                      int samples, std::optional<double> tol) {
    qsym::RunConfig config;
    config.command = qsym::parse_command(command);
    config.n = n;
    config.m = m_;
    config.graph_path = std::move(graph);
    config.seed = seed;
    config.samples = samples;
    config.tol = tol;
    std::ostringstream out, err;
    const int code = qsym::run(config, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("command"), py::arg("n") = py::none(), py::arg("m") = py::none(),
     py::arg("graph") = py::none(), py::arg("seed") = py::none(), py::arg("samples") = 50,
     py::arg("tol") = py::none());
}

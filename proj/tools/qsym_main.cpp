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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qsym/cli.hpp"
#include "qsym/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"qsym: quantum symmetry checks for small graphs"};
  app.require_subcommand(1);

  qsym::RunConfig config;
  int n = 0;
  int m = 0;
  std::string graph;
  std::uint64_t seed = 42;
  double tol = 0.0;

  const char* names[] = {"spectra", "autos",    "disjoint",   "witness",
                         "so-points", "so-check", "twist-check"};
  for (const char* name : names) {
    auto* sub = app.add_subcommand(name);
    auto* n_opt = sub->add_option("--n", n, "subject size (FQ_n or SO_n)");
    auto* graph_opt = sub->add_option("--graph", graph, "graph JSON file");
    n_opt->excludes(graph_opt);
    sub->add_option("--m", m, "twist parameter, n = 2m+1");
    sub->add_option("--seed", seed, "RNG seed (falls back to QSYM_SEED, then 42)");
    sub->add_option("--samples", config.samples, "sampled points for twisted checks");
    sub->add_option("--tol", tol, "override every defect tolerance");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qsym::kExitUsage;
  }

  auto* sub = app.get_subcommands().front();
  config.command = qsym::parse_command(sub->get_name());
  if (sub->count("--n") > 0) config.n = n;
  if (sub->count("--m") > 0) config.m = m;
  if (sub->count("--graph") > 0) config.graph_path = graph;
  if (sub->count("--seed") > 0) config.seed = seed;
  if (sub->count("--tol") > 0) config.tol = tol;
  return qsym::run(config, std::cout, std::cerr);
}

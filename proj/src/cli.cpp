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

#include "qsym/cli.hpp"

#include <array>
#include <cstdlib>

#include "qsym/errors.hpp"
#include "qsym/json_io.hpp"

namespace qsym {

namespace {

constexpr std::array<std::pair<Command, const char*>, 7> kCommands{{
    {Command::spectra, "spectra"},
    {Command::autos, "autos"},
    {Command::disjoint, "disjoint"},
    {Command::witness, "witness"},
    {Command::so_points, "so-points"},
    {Command::so_check, "so-check"},
    {Command::twist_check, "twist-check"},
}};

std::uint64_t resolve_seed(const RunConfig& config) {
  if (config.seed) return *config.seed;
  const char* env = std::getenv("QSYM_SEED");
  if (env == nullptr || *env == '\0') return 42;
  char* end = nullptr;
  const auto value = std::strtoull(env, &end, 10);
  if (*end != '\0' || *env == '-') {
    throw UsageError(std::string("QSYM_SEED is not a non-negative integer: ") + env);
  }
  return value;
}

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

int require_n(const RunConfig& config) {
  if (config.graph_path) {
    throw UsageError(to_string(config.command) + " takes --n, not --graph");
  }
  if (!config.n) throw UsageError(to_string(config.command) + " needs --n");
  return *config.n;
}

Graph subject_graph(const RunConfig& config) {
  if (config.n.has_value() == config.graph_path.has_value()) {
    throw UsageError("give exactly one of --n (folded cube FQ_n) or --graph");
  }
  return config.graph_path ? read_graph_file(*config.graph_path) : folded_cube(*config.n);
}

struct Outcome {
  Json report;
  bool pass = true;
};

void summarize(std::ostream& err, const CheckReport& r) {
  err << verdict(r.pass) << ' ' << r.relation << " (" << to_string(r.model)
      << ", n=" << r.n << ", points=" << r.points << ") max_defect=" << r.max_defect
      << '\n';
}

Outcome run_spectra(const RunConfig& config, const Tolerances& tol, std::ostream& err) {
  const auto report = verify_spectrum(require_n(config), tol);
  const bool pass = report.pass(tol);
  err << verdict(pass) << " spectrum of FQ_" << report.n << ':';
  for (const auto& l : report.levels) err << ' ' << l.lambda << 'x' << l.multiplicity;
  err << " max_residual=" << report.max_residual << '\n';
  return {to_json(report), pass};
}

Outcome run_autos(const RunConfig& config, std::ostream& err) {
  const auto g = subject_graph(config);
  const auto autos = automorphisms(g);
  Json list = Json::array();
  for (const auto& p : autos) list.push_back(to_json(p));
  err << autos.size() << " automorphisms on " << g.n_vertices() << " vertices\n";
  return {Json{{"n", g.n_vertices()}, {"count", autos.size()}, {"automorphisms", list}},
          true};
}

Outcome run_disjoint(const RunConfig& config, std::ostream& err) {
  const auto g = subject_graph(config);
  const auto pair = find_disjoint_pair(g);
  if (!pair) {
    err << "FAIL no pair of non-trivial disjoint automorphisms\n";
    return {Json{{"n", g.n_vertices()}, {"found", false}, {"pair", nullptr}}, false};
  }
  err << "PASS disjoint automorphisms found\n";
  return {Json{{"n", g.n_vertices()},
               {"found", true},
               {"pair", Json{{"sigma", to_json(pair->first)}, {"tau", to_json(pair->second)}}}},
          true};
}

Outcome run_witness(const RunConfig& config, const Tolerances& tol, std::uint64_t seed,
                    std::ostream& err) {
  const auto g = subject_graph(config);
  const auto pair = find_disjoint_pair(g);
  if (!pair) {
    err << "FAIL no pair of non-trivial disjoint automorphisms, no witness\n";
    return {Json{{"n", g.n_vertices()}, {"found", false}}, false};
  }
  const auto& [sigma, tau] = *pair;
  const auto rep = rep_free_product(static_cast<int>(sigma.order()),
                                    static_cast<int>(tau.order()), seed);
  const auto u = build_witness(g, sigma, tau, rep);
  const auto report = certify_witness(g, u, tol);
  const auto recovery = recovery_products(u, sigma, tau, rep, tol);
  const bool pass = report.witnesses_quantum_symmetry(tol) && recovery.pass;
  err << verdict(pass) << " witness on " << g.n_vertices()
      << " vertices: certificate=" << report.noncomm_certificate
      << " recovery_residual=" << recovery.max_residual << '\n';
  return {Json{{"n", g.n_vertices()},
               {"found", true},
               {"sigma", to_json(sigma)},
               {"tau", to_json(tau)},
               {"witness", to_json(report)},
               {"recovery", to_json(recovery)}},
          pass};
}

Outcome run_so_points(const RunConfig& config, std::ostream& err) {
  const int n = require_n(config);
  const auto points = abelian_points(n);
  Json list = Json::array();
  for (const auto& g : points) list.push_back(to_json(g));
  err << points.size() << " classical points of SO_" << n << "^{-1}\n";
  return {Json{{"n", n}, {"count", points.size()}, {"points", list}}, true};
}

Outcome collect(std::vector<CheckReport> reports, std::ostream& err, Json head) {
  Json list = Json::array();
  bool pass = true;
  for (const auto& r : reports) {
    summarize(err, r);
    pass = pass && r.pass;
    list.push_back(to_json(r));
  }
  head["reports"] = list;
  head["pass"] = pass;
  return {head, pass};
}

Outcome run_so_check(const RunConfig& config, const Tolerances& tol,
                     const SamplingOptions& sampling, std::ostream& err) {
  const int n = require_n(config);
  std::vector<CheckReport> reports;
  reports.push_back(lemma_so_bruteforce(n, tol));
  reports.push_back(lemma_sumzero_check(n, Model::abelian, tol, sampling));
  if (n % 2 == 1 && n >= 3) {
    reports.push_back(lemma_sumzero_check(n, Model::twisted, tol, sampling));
    for (int l = 1; l <= n; ++l) {
      reports.push_back(lemma_p_check(n, l, Model::abelian, tol, sampling));
      reports.push_back(lemma_p_check(n, l, Model::twisted, tol, sampling));
    }
    reports.push_back(classical_action_sweep(n, tol));
  }
  return collect(std::move(reports), err, Json{{"n", n}, {"seed", sampling.seed}});
}

Outcome run_twist_check(const RunConfig& config, const Tolerances& tol,
                        const SamplingOptions& sampling, std::ostream& err) {
  if (config.graph_path) throw UsageError("twist-check takes --m, not --graph");
  if (config.m.has_value() == config.n.has_value()) {
    throw UsageError("twist-check needs exactly one of --m or --n = 2m+1");
  }
  int m = config.m.value_or(0);
  if (config.n) {
    if (*config.n % 2 == 0) throw UsageError("twist-check needs odd --n");
    m = (*config.n - 1) / 2;
  }
  return collect(twisted_relation_check(m, tol, sampling), err,
                 Json{{"m", m}, {"n", 2 * m + 1}, {"seed", sampling.seed}});
}

}  // namespace

Command parse_command(const std::string& name) {
  for (const auto& [command, text] : kCommands) {
    if (name == text) return command;
  }
  throw UsageError("unknown command \"" + name + "\"");
}

std::string to_string(Command command) {
  for (const auto& [c, text] : kCommands) {
    if (c == command) return text;
  }
  return "?";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.samples < 1) throw UsageError("--samples must be positive");
    if (config.tol && !(*config.tol > 0.0)) throw UsageError("--tol must be positive");
    const Tolerances tol = config.tol ? Tolerances::uniform(*config.tol) : Tolerances{};
    const SamplingOptions sampling{config.samples, resolve_seed(config)};

    Outcome outcome;
    switch (config.command) {
      case Command::spectra:
        outcome = run_spectra(config, tol, err);
        break;
      case Command::autos:
        outcome = run_autos(config, err);
        break;
      case Command::disjoint:
        outcome = run_disjoint(config, err);
        break;
      case Command::witness:
        outcome = run_witness(config, tol, sampling.seed, err);
        break;
      case Command::so_points:
        outcome = run_so_points(config, err);
        break;
      case Command::so_check:
        outcome = run_so_check(config, tol, sampling, err);
        break;
      case Command::twist_check:
        outcome = run_twist_check(config, tol, sampling, err);
        break;
    }
    Json doc{{"command", to_string(config.command)}};
    for (auto& [key, value] : outcome.report.items()) doc[key] = value;
    out << doc.dump(2) << '\n';
    return outcome.pass ? kExitPass : kExitFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace qsym

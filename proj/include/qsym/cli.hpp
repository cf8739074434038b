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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace qsym {

enum class Command { spectra, autos, disjoint, witness, so_points, so_check, twist_check };

// Throws UsageError for an unknown name.
Command parse_command(const std::string& name);
std::string to_string(Command command);

struct RunConfig {
  Command command = Command::spectra;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<std::string> graph_path;
  // Empty means QSYM_SEED from the environment, then 42.
  std::optional<std::uint64_t> seed;
  int samples = 50;
  std::optional<double> tol;
};

// Exit codes returned by run().
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Runs one command, writing the JSON report to `out` and a short summary
// (or the diagnostic for exit code 2) to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qsym

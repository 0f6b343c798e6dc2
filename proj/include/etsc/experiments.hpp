// Copyright 2026 The etsc authors
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
#include <string>
#include <vector>

namespace etsc {

enum class Command {
  typical_stats,
  find_basis,
  overlap_curve,
  fidelity_curve,
  rate_table,
  upsilon_dim,
};

enum class OutputFormat { csv, json };

// A fully parsed experiment invocation. Numeric fields are validated against
// the owning module's preconditions when the experiment dispatches.
struct ExperimentConfig {
  Command command = Command::rate_table;
  int d = 0;                     // 0: infer from the state where possible
  std::vector<std::int64_t> n_list;
  double h = 0.0;
  double epsilon = 0.0;
  std::string rho_source;        // preset name or JSON file path
  std::vector<double> p;         // optional classical source for typical-stats
  bool has_p = false;
  int samples = 64;              // upsilon-dim Monte Carlo draws
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::string output;            // empty: stdout
  OutputFormat format = OutputFormat::csv;
};

// Runs the experiment and writes its report. Returns the process exit
// status: 0 on success, 1 on validation/domain errors, 2 on resource or
// convergence errors. On any failure nothing is written to the output path
// and a one-line diagnostic goes to stderr. Identical configs produce
// byte-identical output.
int run(const ExperimentConfig& config);

}  // namespace etsc

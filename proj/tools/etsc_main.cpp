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

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "etsc/experiments.hpp"

namespace {

std::vector<std::int64_t> parse_n_list(const std::string& csv) {
  std::vector<std::int64_t> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--n", "cannot parse block length '" + item + "'");
    }
  }
  return values;
}

std::vector<double> parse_p_list(const std::string& csv) {
  std::vector<double> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--p", "cannot parse probability '" + item + "'");
    }
  }
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy-typical subspace toolkit: typical-set statistics, rotated-basis entropy "
               "search, subspace overlap and compression-fidelity experiments"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help message and exit");

  etsc::ExperimentConfig config;
  std::string n_csv;
  std::string p_csv;
  std::string format = "csv";

  // -h stays free for the entropy target; help is --help only.
  const auto new_subcommand = [&](const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->set_help_flag("--help", "print this help message and exit");
    return cmd;
  };
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", config.seed, "RNG seed (default 0)");
    cmd->add_option("--tol", config.tol, "entropy search tolerance in bits (default 1e-9)");
    cmd->add_option("--output,-o", config.output, "output file (default: stdout)");
    cmd->add_option("--format", format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* typical = new_subcommand(
      "typical-stats", "cardinality, dimension bound and set probabilities per block length");
  typical->add_option("--d", config.d, "alphabet size")->required();
  typical->add_option("--n", n_csv, "comma-separated block lengths")->required();
  typical->add_option("--h", config.h, "target entropy in bits")->required();
  typical->add_option("--eps", config.epsilon, "entropy slack in bits")->required();
  typical->add_option("--p", p_csv, "source distribution, e.g. 0.9,0.1 (enables mass columns)");
  add_common(typical);

  CLI::App* find = new_subcommand(
      "find-basis", "locate a measurement basis whose dephased entropy equals h (JSON output)");
  find->add_option("--d", config.d, "state dimension (required for the pure/mixed presets)");
  find->add_option("--rho", config.rho_source, "density matrix preset or JSON file")->required();
  find->add_option("--h", config.h, "target entropy in bits")->required();
  add_common(find);

  CLI::App* overlap = new_subcommand(
      "overlap-curve", "typical-subspace overlap of rho^n in the entropy-h rotated basis");
  overlap->add_option("--d", config.d, "state dimension (required for the pure/mixed presets)");
  overlap->add_option("--rho", config.rho_source, "density matrix preset or JSON file")->required();
  overlap->add_option("--h", config.h, "target entropy in bits")->required();
  overlap->add_option("--eps", config.epsilon, "entropy slack in bits")->required();
  overlap->add_option("--n", n_csv, "comma-separated block lengths")->required();
  add_common(overlap);

  CLI::App* fidelity = new_subcommand(
      "fidelity-curve", "dense compression-channel fidelity per block length");
  fidelity->add_option("--d", config.d, "state dimension (required for the pure/mixed presets)");
  fidelity->add_option("--rho", config.rho_source, "density matrix preset or JSON file")
      ->required();
  fidelity->add_option("--h", config.h, "target entropy in bits")->required();
  fidelity->add_option("--eps", config.epsilon, "entropy slack in bits")->required();
  fidelity->add_option("--n", n_csv, "comma-separated block lengths")->required();
  add_common(fidelity);

  CLI::App* rate = new_subcommand("rate-table", "finite-n compression rate per block length");
  rate->add_option("--d", config.d, "alphabet size")->required();
  rate->add_option("--h", config.h, "target entropy in bits")->required();
  rate->add_option("--eps", config.epsilon, "entropy slack in bits")->required();
  rate->add_option("--n", n_csv, "comma-separated block lengths")->required();
  add_common(rate);

  CLI::App* upsilon = new_subcommand(
      "upsilon-dim", "Monte Carlo rank estimate of the union-over-bases subspace");
  upsilon->add_option("--d", config.d, "alphabet size")->required();
  upsilon->add_option("--n", n_csv, "comma-separated block lengths")->required();
  upsilon->add_option("--h", config.h, "target entropy in bits")->required();
  upsilon->add_option("--eps", config.epsilon, "entropy slack in bits")->required();
  upsilon->add_option("--samples", config.samples, "number of random unitaries (default 64)");
  add_common(upsilon);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (typical->parsed()) config.command = etsc::Command::typical_stats;
  if (find->parsed()) config.command = etsc::Command::find_basis;
  if (overlap->parsed()) config.command = etsc::Command::overlap_curve;
  if (fidelity->parsed()) config.command = etsc::Command::fidelity_curve;
  if (rate->parsed()) config.command = etsc::Command::rate_table;
  if (upsilon->parsed()) config.command = etsc::Command::upsilon_dim;

  try {
    if (!n_csv.empty()) config.n_list = parse_n_list(n_csv);
    if (!p_csv.empty()) {
      config.p = parse_p_list(p_csv);
      config.has_p = true;
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  config.format = (format == "json") ? etsc::OutputFormat::json : etsc::OutputFormat::csv;

  return etsc::run(config);
}

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

#include "etsc/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <variant>

#include "etsc/basis_search.hpp"
#include "etsc/classical_types.hpp"
#include "etsc/density_io.hpp"
#include "etsc/errors.hpp"
#include "etsc/schumacher_channel.hpp"
#include "etsc/typical_projector.hpp"

namespace etsc {

namespace {

// All numeric output is fixed at 12 significant digits so reruns diff cleanly.
std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::string(buf);
}

std::string json_real(double v) {
  if (!std::isfinite(v)) return std::string("\"") + fmt_real(v) + "\"";
  return fmt_real(v);
}

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_csv(const Cell& c) {
  if (std::holds_alternative<std::int64_t>(c)) return std::to_string(std::get<std::int64_t>(c));
  if (std::holds_alternative<double>(c)) return fmt_real(std::get<double>(c));
  return std::get<std::string>(c);
}

std::string cell_json(const Cell& c) {
  if (std::holds_alternative<std::int64_t>(c)) return std::to_string(std::get<std::int64_t>(c));
  if (std::holds_alternative<double>(c)) return json_real(std::get<double>(c));
  return std::string("\"") + std::get<std::string>(c) + "\"";
}

std::string render_table(const Table& table, const std::string& command, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::csv) {
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
      if (j) out << ',';
      out << table.columns[j];
    }
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) out << ',';
        out << cell_csv(row[j]);
      }
      out << '\n';
    }
  } else {
    out << "{\"command\":\"" << command << "\",\"columns\":[";
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
      if (j) out << ',';
      out << '"' << table.columns[j] << '"';
    }
    out << "],\"rows\":[";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      if (i) out << ',';
      out << '[';
      for (std::size_t j = 0; j < table.rows[i].size(); ++j) {
        if (j) out << ',';
        out << cell_json(table.rows[i][j]);
      }
      out << ']';
    }
    out << "]}\n";
  }
  return out.str();
}

std::string render_matrix_json(const ComplexMatrix& m, bool imaginary) {
  std::ostringstream out;
  out << '[';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) out << ',';
    out << '[';
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << json_real(imaginary ? m(i, j).imag() : m(i, j).real());
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

int checked_block_length(std::int64_t n) {
  if (n < 1 || n > std::numeric_limits<int>::max()) {
    throw validation_error("block length n = " + std::to_string(n) + " out of range");
  }
  return static_cast<int>(n);
}

void require_n_list(const ExperimentConfig& config) {
  if (config.n_list.empty()) throw validation_error("at least one block length n is required");
}

DensityMatrix load_state(const ExperimentConfig& config) {
  if (config.rho_source.empty()) throw validation_error("a density matrix source is required");
  return load_density_matrix(config.rho_source, config.d);
}

std::string run_typical_stats(const ExperimentConfig& config) {
  require_n_list(config);
  if (config.d < 1) throw validation_error("typical-stats requires an alphabet size d");

  Table table;
  table.columns = {"n", "cardinality", "bound"};
  if (config.has_p) {
    table.columns.push_back("set_probability");
    table.columns.push_back("strong_set_probability");
  }
  for (std::int64_t n_raw : config.n_list) {
    const int n = checked_block_length(n_raw);
    const TypicalSetSpec spec(n, config.d, config.h, config.epsilon);
    std::vector<Cell> row;
    row.emplace_back(static_cast<std::int64_t>(n));
    row.emplace_back(entropy_typical_cardinality(spec).str());
    row.emplace_back(cardinality_bound(spec));
    if (config.has_p) {
      const Distribution p(config.p);
      row.emplace_back(set_probability(p, spec));
      row.emplace_back(strong_set_probability(p, n, config.epsilon));
    }
    table.rows.push_back(std::move(row));
  }
  return render_table(table, "typical-stats", config.format);
}

std::string run_find_basis(const ExperimentConfig& config) {
  const DensityMatrix rho = load_state(config);
  const BasisSearchResult result = find_target_basis(rho, config.h, config.tol);
  std::ostringstream out;
  out << "{\"command\":\"find-basis\",\"d\":" << rho.dim() << ",\"h\":" << json_real(config.h)
      << ",\"tol\":" << json_real(config.tol) << ",\"parameter\":" << json_real(result.parameter)
      << ",\"achieved_entropy\":" << json_real(result.achieved_entropy)
      << ",\"iterations\":" << result.iterations
      << ",\"basis_re\":" << render_matrix_json(result.basis.matrix(), false)
      << ",\"basis_im\":" << render_matrix_json(result.basis.matrix(), true) << "}\n";
  return out.str();
}

std::string run_overlap_curve(const ExperimentConfig& config) {
  require_n_list(config);
  const DensityMatrix rho = load_state(config);

  Table table;
  table.columns = {"n", "overlap", "delta", "fidelity_lower_bound"};
  for (std::int64_t n_raw : config.n_list) {
    const int n = checked_block_length(n_raw);
    const TraceOverlapReport report =
        preserved_weight(rho, config.h, config.epsilon, n, config.tol);
    table.rows.push_back(
        {static_cast<std::int64_t>(n), report.overlap, report.delta, report.fidelity_lower_bound});
  }
  return render_table(table, "overlap-curve", config.format);
}

std::string run_fidelity_curve(const ExperimentConfig& config) {
  require_n_list(config);
  const DensityMatrix rho = load_state(config);
  const BasisSearchResult found = find_target_basis(rho, config.h, config.tol);

  Table table;
  table.columns = {"n",        "overlap",  "delta", "projected_term",
                   "residual_term", "fidelity", "lower_bound"};
  for (std::int64_t n_raw : config.n_list) {
    const int n = checked_block_length(n_raw);
    const TypicalSetSpec spec(n, rho.dim(), config.h, config.epsilon);
    const TraceOverlapReport overlap = trace_overlap_product(rho, found.basis, spec);
    const CompressionChannel channel = build_channel(found.basis, spec);
    const FidelityReport fidelity = channel_fidelity(channel, rho, n);
    table.rows.push_back({static_cast<std::int64_t>(n), overlap.overlap, overlap.delta,
                          fidelity.projected_term, fidelity.residual_term, fidelity.fidelity,
                          fidelity.lower_bound});
  }
  return render_table(table, "fidelity-curve", config.format);
}

std::string run_rate_table(const ExperimentConfig& config) {
  require_n_list(config);
  if (config.d < 1) throw validation_error("rate-table requires an alphabet size d");

  Table table;
  table.columns = {"n", "rate", "limit"};
  for (std::int64_t n : config.n_list) {
    const RateReport report = compression_rate(n, config.d, config.h, config.epsilon);
    table.rows.push_back({n, report.rate, report.limit});
  }
  return render_table(table, "rate-table", config.format);
}

std::string run_upsilon_dim(const ExperimentConfig& config) {
  require_n_list(config);
  if (config.d < 1) throw validation_error("upsilon-dim requires an alphabet size d");

  Table table;
  table.columns = {"n", "samples", "estimated_dimension", "bound", "seed"};
  for (std::int64_t n_raw : config.n_list) {
    const int n = checked_block_length(n_raw);
    const TypicalSetSpec spec(n, config.d, config.h, config.epsilon);
    const UpsilonEstimate estimate = estimate_upsilon_dimension(spec, config.samples, config.seed);
    table.rows.push_back({static_cast<std::int64_t>(n),
                          static_cast<std::int64_t>(estimate.samples_used),
                          static_cast<std::int64_t>(estimate.estimated_dimension), estimate.bound,
                          std::to_string(estimate.seed)});
  }
  return render_table(table, "upsilon-dim", config.format);
}

std::string dispatch(const ExperimentConfig& config) {
  switch (config.command) {
    case Command::typical_stats:
      return run_typical_stats(config);
    case Command::find_basis:
      return run_find_basis(config);
    case Command::overlap_curve:
      return run_overlap_curve(config);
    case Command::fidelity_curve:
      return run_fidelity_curve(config);
    case Command::rate_table:
      return run_rate_table(config);
    case Command::upsilon_dim:
      return run_upsilon_dim(config);
  }
  throw validation_error("unknown command");
}

}  // namespace

int run(const ExperimentConfig& config) {
  std::string report;
  try {
    report = dispatch(config);
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const numeric_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  if (config.output.empty()) {
    std::cout << report;
    return 0;
  }
  std::ofstream out(config.output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << config.output << "'\n";
    return 2;
  }
  out << report;
  out.flush();
  if (!out) {
    std::cerr << "error: failed writing output file '" << config.output << "'\n";
    return 2;
  }
  return 0;
}

}  // namespace etsc

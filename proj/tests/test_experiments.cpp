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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "etsc/classical_types.hpp"
#include "etsc/density_io.hpp"
#include "etsc/experiments.hpp"
#include "etsc/quantum_state.hpp"

using namespace etsc;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;

  TempDir() {
    path = fs::temp_directory_path() /
           ("etsc_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::stringstream cs(line);
    std::string cell;
    while (std::getline(cs, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

TEST_CASE("density matrix presets") {
  const DensityMatrix mixed = density_matrix_preset("maximally-mixed", 3);
  CHECK(mixed.dim() == 3);
  CHECK(std::abs(mixed.matrix()(0, 0).real() - 1.0 / 3.0) <= 1e-15);

  const DensityMatrix diag = density_matrix_preset("diag:0.9,0.1", 0);
  CHECK(diag.dim() == 2);
  CHECK(diag.matrix()(0, 0).real() == 0.9);
  CHECK(diag.matrix()(1, 1).real() == 0.1);

  const DensityMatrix pure = density_matrix_preset("pure", 2);
  CHECK(pure.matrix()(0, 0).real() == 1.0);
  CHECK(pure.matrix()(1, 1).real() == 0.0);

  CHECK_THROWS_AS(density_matrix_preset("bogus", 2), validation_error);
  CHECK_THROWS_AS(density_matrix_preset("diag:0.9,0.1", 3), validation_error);
  CHECK_THROWS_AS(density_matrix_preset("diag:0.9,nope", 0), validation_error);
}

TEST_CASE("density matrix JSON loading validates the schema and invariants") {
  const DensityMatrix ok = density_matrix_from_json_text(
      R"({"d": 2, "re": [[0.5, 0.1], [0.1, 0.5]], "im": [[0, 0], [0, 0]]})");
  CHECK(ok.dim() == 2);

  // trace off by 0.02: the diagnostic names the residual
  try {
    density_matrix_from_json_text(
        R"({"d": 2, "re": [[0.9, 0], [0, 0.08]], "im": [[0, 0], [0, 0]]})");
    FAIL("expected validation_error");
  } catch (const validation_error& e) {
    CHECK(std::string(e.what()).find("trace") != std::string::npos);
    CHECK(std::string(e.what()).find("0.02") != std::string::npos);
  }

  CHECK_THROWS_AS(density_matrix_from_json_text("{ not json"), validation_error);
  CHECK_THROWS_AS(density_matrix_from_json_text(R"({"d": 2, "re": [[1, 0]], "im": []})"),
                  validation_error);
  // non-Hermitian
  CHECK_THROWS_AS(density_matrix_from_json_text(
                      R"({"d": 2, "re": [[0.5, 0.2], [0.0, 0.5]], "im": [[0,0],[0,0]]})"),
                  validation_error);
}

TEST_CASE("density matrix JSON file round trip") {
  TempDir tmp;
  const std::string path = tmp.file("rho.json");
  {
    std::ofstream out(path);
    out << R"({"d": 2, "re": [[0.7, 0.0], [0.0, 0.3]], "im": [[0, 0], [0, 0]]})";
  }
  const DensityMatrix rho = load_density_matrix(path, 2);
  CHECK(rho.matrix()(0, 0).real() == 0.7);
  CHECK_THROWS_AS(load_density_matrix(path, 3), validation_error);
  CHECK_THROWS_AS(load_density_matrix(tmp.file("missing.json"), 2), validation_error);
}

TEST_CASE("rate-table experiment writes a decreasing rate column") {
  TempDir tmp;
  ExperimentConfig config;
  config.command = Command::rate_table;
  config.d = 2;
  config.h = 0.5;
  config.epsilon = 0.01;
  config.n_list = {10, 100, 1000};
  config.output = tmp.file("rates.csv");
  REQUIRE(run(config) == 0);

  const auto rows = parse_csv(slurp(config.output));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"n", "rate", "limit"});
  double prev = 1e300;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double rate = std::stod(rows[i][1]);
    CHECK(rate < prev);
    prev = rate;
    CHECK(std::stod(rows[i][2]) == 0.51);
  }
}

TEST_CASE("experiment reruns are byte identical") {
  TempDir tmp;
  ExperimentConfig config;
  config.command = Command::overlap_curve;
  config.rho_source = "diag:0.9,0.1";
  config.h = 0.6;
  config.epsilon = 0.2;
  config.n_list = {8, 16, 32};
  config.output = tmp.file("a.csv");
  REQUIRE(run(config) == 0);
  config.output = tmp.file("b.csv");
  REQUIRE(run(config) == 0);
  CHECK(slurp(tmp.file("a.csv")) == slurp(tmp.file("b.csv")));

  config.format = OutputFormat::json;
  config.output = tmp.file("a.json");
  REQUIRE(run(config) == 0);
  config.output = tmp.file("b.json");
  REQUIRE(run(config) == 0);
  CHECK(slurp(tmp.file("a.json")) == slurp(tmp.file("b.json")));
  CHECK(slurp(tmp.file("a.json")) != slurp(tmp.file("a.csv")));
}

TEST_CASE("overlap-curve matches the classical mass and increases with n") {
  TempDir tmp;
  ExperimentConfig config;
  config.command = Command::overlap_curve;
  config.rho_source = "diag:0.9,0.1";
  config.h = shannon_entropy(Distribution({0.9, 0.1}));
  config.epsilon = 0.2;
  config.n_list = {16, 64, 256};
  config.output = tmp.file("overlap.csv");
  REQUIRE(run(config) == 0);

  const auto rows = parse_csv(slurp(config.output));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0][1] == "overlap");
  double prev = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const int n = std::stoi(rows[i][0]);
    const double overlap = std::stod(rows[i][1]);
    CHECK(overlap > prev);
    prev = overlap;
    const double classical =
        set_probability(Distribution({0.9, 0.1}), TypicalSetSpec(n, 2, config.h, 0.2));
    CHECK(std::abs(overlap - classical) <= 1e-11);  // 12 significant digits in the file
  }
}

TEST_CASE("find-basis emits JSON with the achieved entropy") {
  TempDir tmp;
  ExperimentConfig config;
  config.command = Command::find_basis;
  config.d = 2;
  config.rho_source = "pure";
  config.h = 0.5;
  config.output = tmp.file("basis.json");
  REQUIRE(run(config) == 0);

  const nlohmann::json doc = nlohmann::json::parse(slurp(config.output));
  CHECK(doc["command"] == "find-basis");
  CHECK(doc["d"] == 2);
  CHECK(std::abs(doc["achieved_entropy"].get<double>() - 0.5) <= 1e-9);
  CHECK(doc["basis_re"].size() == 2);
  CHECK(doc["iterations"].get<int>() <= 200);
}

TEST_CASE("typical-stats with a source distribution") {
  TempDir tmp;
  ExperimentConfig config;
  config.command = Command::typical_stats;
  config.d = 2;
  config.h = 1.0;
  config.epsilon = 0.1;
  config.n_list = {4};
  config.p = {0.5, 0.5};
  config.has_p = true;
  config.output = tmp.file("stats.csv");
  REQUIRE(run(config) == 0);

  const auto rows = parse_csv(slurp(config.output));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] ==
        std::vector<std::string>{"n", "cardinality", "bound", "set_probability",
                                 "strong_set_probability"});
  CHECK(rows[1][0] == "4");
  CHECK(rows[1][1] == "6");
  CHECK(std::stod(rows[1][3]) == 0.375);
  CHECK(std::stod(rows[1][4]) == 0.375);
}

TEST_CASE("upsilon-dim is deterministic for a fixed seed") {
  TempDir tmp;
  ExperimentConfig config;
  config.command = Command::upsilon_dim;
  config.d = 2;
  config.h = 1.0;
  config.epsilon = 0.1;
  config.n_list = {4};
  config.samples = 16;
  config.seed = 5;
  config.output = tmp.file("u1.csv");
  REQUIRE(run(config) == 0);
  config.output = tmp.file("u2.csv");
  REQUIRE(run(config) == 0);
  CHECK(slurp(tmp.file("u1.csv")) == slurp(tmp.file("u2.csv")));

  const auto rows = parse_csv(slurp(tmp.file("u1.csv")));
  REQUIRE(rows.size() == 2);
  const int rank = std::stoi(rows[1][2]);
  CHECK(rank >= 6);
  CHECK(rank <= 16);
}

TEST_CASE("error paths exit non-zero and write nothing") {
  TempDir tmp;

  SUBCASE("validation error: h above log2(d)") {
    ExperimentConfig config;
    config.command = Command::typical_stats;
    config.d = 2;
    config.h = 1.5;
    config.epsilon = 0.1;
    config.n_list = {4};
    config.output = tmp.file("out.csv");
    CHECK(run(config) == 1);
    CHECK_FALSE(fs::exists(config.output));
  }
  SUBCASE("domain error: target entropy below S(rho)") {
    ExperimentConfig config;
    config.command = Command::find_basis;
    config.d = 2;
    config.rho_source = "diag:0.5,0.5";
    config.h = 0.2;
    config.output = tmp.file("out.json");
    CHECK(run(config) == 1);
    CHECK_FALSE(fs::exists(config.output));
  }
  SUBCASE("validation error: bad preset") {
    ExperimentConfig config;
    config.command = Command::overlap_curve;
    config.rho_source = "nonsense";
    config.h = 0.5;
    config.epsilon = 0.1;
    config.n_list = {4};
    config.output = tmp.file("out.csv");
    CHECK(run(config) == 1);
    CHECK_FALSE(fs::exists(config.output));
  }
  SUBCASE("resource error: dense cap exceeded") {
    ExperimentConfig config;
    config.command = Command::fidelity_curve;
    config.rho_source = "diag:0.9,0.1";
    config.h = 0.6;
    config.epsilon = 0.2;
    config.n_list = {13};  // 2^13 > 4096
    config.output = tmp.file("out.csv");
    CHECK(run(config) == 2);
    CHECK_FALSE(fs::exists(config.output));
  }
  SUBCASE("resource error: type-class cap exceeded") {
    ExperimentConfig config;
    config.command = Command::typical_stats;
    config.d = 4;
    config.h = 1.0;
    config.epsilon = 0.1;
    config.n_list = {4000};  // ~1e10 compositions
    config.output = tmp.file("out.csv");
    CHECK(run(config) == 2);
    CHECK_FALSE(fs::exists(config.output));
  }
  SUBCASE("missing n list") {
    ExperimentConfig config;
    config.command = Command::rate_table;
    config.d = 2;
    config.h = 0.5;
    config.epsilon = 0.01;
    config.output = tmp.file("out.csv");
    CHECK(run(config) == 1);
    CHECK_FALSE(fs::exists(config.output));
  }
}

TEST_CASE("fidelity-curve reports consistent terms") {
  TempDir tmp;
  ExperimentConfig config;
  config.command = Command::fidelity_curve;
  config.rho_source = "diag:0.9,0.1";
  config.h = 0.6;
  config.epsilon = 0.3;
  config.n_list = {4, 6};
  config.output = tmp.file("fidelity.csv");
  REQUIRE(run(config) == 0);

  const auto rows = parse_csv(slurp(config.output));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>{"n", "overlap", "delta", "projected_term",
                                            "residual_term", "fidelity", "lower_bound"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double overlap = std::stod(rows[i][1]);
    const double projected = std::stod(rows[i][3]);
    const double residual = std::stod(rows[i][4]);
    const double fidelity = std::stod(rows[i][5]);
    CHECK(std::abs(projected - overlap * overlap) <= 1e-9);
    CHECK(std::abs(fidelity - (projected + residual)) <= 1e-9);
    CHECK(fidelity >= projected);
  }
}

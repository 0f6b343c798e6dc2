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

#include "etsc/density_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace etsc {

namespace {

using nlohmann::json;

ComplexMatrix matrix_from_doc(const json& doc) {
  if (!doc.is_object() || !doc.contains("d") || !doc.contains("re") || !doc.contains("im")) {
    throw validation_error("density matrix JSON must be an object with fields d, re, im");
  }
  if (!doc["d"].is_number_integer()) throw validation_error("field 'd' must be an integer");
  const int d = doc["d"].get<int>();
  if (d < 1) throw validation_error("field 'd' must be >= 1");

  const auto read_part = [&](const char* key) {
    const json& rows = doc[key];
    if (!rows.is_array() || static_cast<int>(rows.size()) != d) {
      throw validation_error(std::string("field '") + key + "' must be a " + std::to_string(d) +
                             "-row array");
    }
    Eigen::MatrixXd part(d, d);
    for (int i = 0; i < d; ++i) {
      const json& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != d) {
        throw validation_error(std::string("field '") + key + "' row " + std::to_string(i) +
                               " must have " + std::to_string(d) + " entries");
      }
      for (int j = 0; j < d; ++j) {
        const json& v = row[static_cast<std::size_t>(j)];
        if (!v.is_number()) {
          throw validation_error(std::string("field '") + key + "' entry (" + std::to_string(i) +
                                 "," + std::to_string(j) + ") is not a number");
        }
        part(i, j) = v.get<double>();
      }
    }
    return part;
  };

  const Eigen::MatrixXd re = read_part("re");
  const Eigen::MatrixXd im = read_part("im");
  return re.cast<Complex>() + Complex(0.0, 1.0) * im.cast<Complex>();
}

std::vector<double> parse_probability_list(const std::string& csv) {
  std::vector<double> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      values.push_back(v);
    } catch (const std::exception&) {
      throw validation_error("cannot parse probability '" + item + "' in diag preset");
    }
  }
  if (values.empty()) throw validation_error("diag preset needs at least one probability");
  return values;
}

}  // namespace

DensityMatrix density_matrix_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw validation_error(std::string("invalid density matrix JSON: ") + e.what());
  }
  return DensityMatrix(matrix_from_doc(doc));
}

DensityMatrix load_density_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot read density matrix file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return density_matrix_from_json_text(buf.str());
}

DensityMatrix density_matrix_preset(const std::string& name, int d) {
  if (name == "pure") {
    if (d < 1) throw validation_error("preset 'pure' requires a dimension");
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    m(0, 0) = Complex(1.0, 0.0);
    return DensityMatrix(std::move(m));
  }
  if (name == "maximally-mixed") {
    if (d < 1) throw validation_error("preset 'maximally-mixed' requires a dimension");
    return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
  }
  if (name.rfind("diag:", 0) == 0) {
    const std::vector<double> probs = parse_probability_list(name.substr(5));
    if (d >= 1 && d != static_cast<int>(probs.size())) {
      throw validation_error("diag preset lists " + std::to_string(probs.size()) +
                             " probabilities but d = " + std::to_string(d));
    }
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<int>(probs.size()),
                                          static_cast<int>(probs.size()));
    for (std::size_t i = 0; i < probs.size(); ++i) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = probs[i];
    }
    return DensityMatrix(std::move(m));
  }
  throw validation_error("unknown density matrix preset '" + name + "'");
}

DensityMatrix load_density_matrix(const std::string& path_or_preset, int d) {
  if (path_or_preset == "pure" || path_or_preset == "maximally-mixed" ||
      path_or_preset.rfind("diag:", 0) == 0) {
    return density_matrix_preset(path_or_preset, d);
  }
  DensityMatrix rho = load_density_matrix_file(path_or_preset);
  if (d >= 1 && rho.dim() != d) {
    throw validation_error("density matrix file has dimension " + std::to_string(rho.dim()) +
                           " but d = " + std::to_string(d));
  }
  return rho;
}

}  // namespace etsc

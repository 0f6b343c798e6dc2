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

#include <string>

#include "etsc/quantum_state.hpp"

namespace etsc {

// JSON schema for density matrices:
//   {"d": int, "re": [[...]], "im": [[...]]}
// with row-major d x d arrays. Validation runs on load and failures name the
// violated invariant with the measured residual.
DensityMatrix density_matrix_from_json_text(const std::string& text);
DensityMatrix load_density_matrix_file(const std::string& path);

// Named presets: "pure" (|e_1><e_1|), "maximally-mixed" (I/d), and
// "diag:p1,p2,..." (diagonal with the listed probabilities; d is taken from
// the list). `d` supplies the dimension for the first two and is
// cross-checked against the list when >= 1.
DensityMatrix density_matrix_preset(const std::string& name, int d);

// Dispatcher: a known preset name, otherwise a path to a JSON file.
DensityMatrix load_density_matrix(const std::string& path_or_preset, int d);

}  // namespace etsc

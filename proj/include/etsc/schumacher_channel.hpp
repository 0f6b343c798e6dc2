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

#include "etsc/typical_projector.hpp"

namespace etsc {

// Projective compression channel on the n-fold product space:
//   sigma -> Pi sigma Pi + sum_u <u|sigma|u> |0><0|
// where |0> is a fixed state inside the retained subspace and {|u>} spans the
// orthocomplement. Decoding is the identity map.
struct CompressionChannel {
  ComplexMatrix projector;          // Pi, d^n x d^n
  ComplexVector standard_state;     // |0>
  std::int64_t standard_state_index;  // ambient index of |0>'s product word
  ComplexMatrix complement_basis;   // columns |u>
  int d;
  int n;
  std::int64_t dim;                 // d^n
};

// The two terms of the compression fidelity
//   F = |tr(Pi rho^(x)n)|^2 + sum_u |tr(E_u rho^(x)n)|^2,
// together with the 1 - 2*delta lower bound, delta = 1 - tr(Pi rho^(x)n).
struct FidelityReport {
  double fidelity;
  double projected_term;
  double residual_term;
  double lower_bound;
};

// Finite-n compression rate and its n -> infinity limit h + epsilon.
struct RateReport {
  double rate;   // qubits per signal
  double limit;  // h + epsilon
};

// Builds the channel for the typical subspace of (basis, spec). The standard
// state is the product vector of the lexicographically first typical word;
// the complement consists of the non-typical product vectors.
CompressionChannel build_channel(const OrthonormalBasis& basis, const TypicalSetSpec& spec,
                                 std::int64_t dense_cap = kDefaultDenseDimensionCap);

// Applies the channel to a density operator on the product space. Trace is
// preserved within 1e-10 and the output stays PSD.
ComplexMatrix apply_channel(const CompressionChannel& channel, const ComplexMatrix& sigma);

// Evaluates the fidelity of compressing rho^(x)n through the channel.
FidelityReport channel_fidelity(const CompressionChannel& channel, const DensityMatrix& rho, int n);

// (d^2+d) * log2(n+1) / n + h + epsilon, the finite-n rate upper bound.
RateReport compression_rate(std::int64_t n, int d, double h, double epsilon);

}  // namespace etsc

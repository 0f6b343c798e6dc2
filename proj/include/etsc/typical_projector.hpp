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
#include <random>
#include <vector>

#include "etsc/classical_types.hpp"
#include "etsc/quantum_state.hpp"

namespace etsc {

// Caps for operations that materialize tensor-power objects.
inline constexpr std::int64_t kDefaultMemberCap = 1'000'000;
inline constexpr std::int64_t kDefaultDenseDimensionCap = 4096;

// Seed sentinel: makes the first Monte Carlo unitary the identity instead of
// a Haar draw, so the sample-1 rank equals the generating-set dimension.
inline constexpr std::uint64_t kIdentityFirstSeed = ~std::uint64_t{0};

// A typical-set spec bound to the product basis it spans.
struct TypicalSubspace {
  TypicalSetSpec spec;
  OrthonormalBasis basis;

  BigInt dimension() const { return entropy_typical_cardinality(spec); }
};

// tr(Pi rho^(x)n) together with delta = 1 - overlap and the induced fidelity
// lower bound max(0, 1 - 2*delta).
struct TraceOverlapReport {
  double overlap;
  double delta;
  double fidelity_lower_bound;
};

// Exact subspace dimension plus the (n+1)^d 2^(n(h+eps)) upper bound.
struct SubspaceDimension {
  BigInt dimension;
  double bound;
};

// Monte Carlo rank estimate for the union-over-bases subspace.
struct UpsilonEstimate {
  int estimated_dimension;
  int samples_used;
  std::uint64_t seed;
  double bound;
};

// All members of the entropy-typical set in lexicographic sequence order,
// generated per qualifying type class. Raises resource_error when the member
// count exceeds the cap.
std::vector<SymbolSequence> typical_members(const TypicalSetSpec& spec,
                                            std::int64_t member_cap = kDefaultMemberCap);

// Rank of the sequence in the lexicographic ordering of all d^n words.
std::int64_t ambient_index(const SymbolSequence& seq, int d);

// Product basis vector |e_{x_1} ... e_{x_n}> of the sequence.
ComplexVector product_basis_vector(const OrthonormalBasis& basis, const SymbolSequence& seq);

SubspaceDimension subspace_dimension(const TypicalSetSpec& spec,
                                     std::int64_t cap = kDefaultTypeClassCap);

// tr(Pi(h,B) rho^(x)n) through the product formula: the trace restricted to
// one type class is multiplicity * prod_a q_a^counts[a] with
// q = measurement_diagonal(rho, basis), so the d^n-dimensional operators are
// never materialized. Scales to n in the hundreds.
TraceOverlapReport trace_overlap_product(const DensityMatrix& rho, const OrthonormalBasis& basis,
                                         const TypicalSetSpec& spec,
                                         std::int64_t cap = kDefaultTypeClassCap);

// The d^n x d^n projector onto the typical subspace, for cross-checking the
// product formula at small n.
ComplexMatrix dense_projector(const OrthonormalBasis& basis, const TypicalSetSpec& spec,
                              std::int64_t dense_cap = kDefaultDenseDimensionCap);

// Rotates the measurement basis to entropy h via the eigenphase path, then
// evaluates the product-formula overlap there. A certified lower bound on the
// weight the union-over-bases projector preserves. Requires S(rho) <= h <= log2(d).
TraceOverlapReport preserved_weight(const DensityMatrix& rho, double h, double epsilon, int n,
                                    double tol = 1e-9);

// The (n+1)^(d^2+d) 2^(n(h+eps)) dimension bound, evaluated in the log domain.
double upsilon_dimension_bound(int n, int d, double h, double epsilon);

// Haar-random unitary: QR of a complex Gaussian matrix with the R diagonal
// phases folded into Q.
ComplexMatrix haar_unitary(int d, std::mt19937_64& rng);

// Applies `samples` random product unitaries U^(x)n to the typical generating
// set and reports the numerical rank of the accumulated image vectors
// (singular values > 1e-8 of the largest). Deterministic for a fixed seed;
// per-sample generators are derived by counter.
UpsilonEstimate estimate_upsilon_dimension(const TypicalSetSpec& spec, int samples,
                                           std::uint64_t seed,
                                           std::int64_t dense_cap = kDefaultDenseDimensionCap);

}  // namespace etsc

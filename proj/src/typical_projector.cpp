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

#include "etsc/typical_projector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "etsc/basis_search.hpp"

namespace etsc {

namespace {

constexpr double kRankThreshold = 1e-8;  // relative singular value cutoff
constexpr std::int64_t kUpsilonEntryCap = std::int64_t{1} << 24;

// d^n, or -1 when it would exceed the cap.
std::int64_t dense_dimension(int d, int n, std::int64_t cap) {
  std::int64_t dim = 1;
  for (int i = 0; i < n; ++i) {
    if (dim > cap / d) return -1;
    dim *= d;
  }
  return dim <= cap ? dim : -1;
}

std::int64_t checked_dense_dimension(int d, int n, std::int64_t cap, const char* op) {
  const std::int64_t dim = dense_dimension(d, n, cap);
  if (dim < 0) {
    throw resource_error(std::string(op) + ": d^n exceeds the dense dimension cap " +
                         std::to_string(cap));
  }
  return dim;
}

TraceOverlapReport make_report(double overlap) {
  overlap = std::clamp(overlap, 0.0, 1.0);
  const double delta = 1.0 - overlap;
  return TraceOverlapReport{overlap, delta, std::max(0.0, 1.0 - 2.0 * delta)};
}

std::mt19937_64 sample_engine(std::uint64_t seed, int sample_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(sample_index)};
  return std::mt19937_64(seq);
}

}  // namespace

std::vector<SymbolSequence> typical_members(const TypicalSetSpec& spec, std::int64_t member_cap) {
  const int n = spec.n();
  const int d = spec.d();

  // Count first so the cap check precedes any materialization.
  const BigInt total = entropy_typical_cardinality(spec);
  if (total > member_cap) {
    throw resource_error("typical set has " + total.str() + " members, cap is " +
                         std::to_string(member_cap));
  }

  std::vector<SymbolSequence> members;
  members.reserve(total.convert_to<std::size_t>());
  for_each_composition(n, d, [&](const std::vector<int>& counts) {
    if (!spec.admits(type_entropy(counts, n))) return;
    // The lexicographically smallest arrangement of the multiset, then all
    // distinct permutations in lexicographic order.
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    for (int a = 1; a <= d; ++a) {
      word.insert(word.end(), static_cast<std::size_t>(counts[static_cast<std::size_t>(a - 1)]), a);
    }
    do {
      members.push_back(SymbolSequence{word});
    } while (std::next_permutation(word.begin(), word.end()));
  });
  std::sort(members.begin(), members.end(),
            [](const SymbolSequence& a, const SymbolSequence& b) { return a.symbols < b.symbols; });
  return members;
}

std::int64_t ambient_index(const SymbolSequence& seq, int d) {
  std::int64_t idx = 0;
  for (int s : seq.symbols) {
    if (s < 1 || s > d) throw validation_error("symbol outside alphabet");
    idx = idx * d + (s - 1);
  }
  return idx;
}

ComplexVector product_basis_vector(const OrthonormalBasis& basis, const SymbolSequence& seq) {
  if (seq.length() < 1) throw validation_error("empty sequence has no product vector");
  ComplexVector v = basis.column(seq.symbols[0] - 1);
  for (int i = 1; i < seq.length(); ++i) {
    const ComplexVector& c = basis.column(seq.symbols[static_cast<std::size_t>(i)] - 1);
    ComplexVector next(v.size() * c.size());
    for (Eigen::Index a = 0; a < v.size(); ++a) {
      next.segment(a * c.size(), c.size()) = v[a] * c;
    }
    v.swap(next);
  }
  return v;
}

SubspaceDimension subspace_dimension(const TypicalSetSpec& spec, std::int64_t cap) {
  return SubspaceDimension{entropy_typical_cardinality(spec, cap), cardinality_bound(spec)};
}

TraceOverlapReport trace_overlap_product(const DensityMatrix& rho, const OrthonormalBasis& basis,
                                         const TypicalSetSpec& spec, std::int64_t cap) {
  if (rho.dim() != spec.d() || basis.dim() != spec.d()) {
    throw validation_error("state/basis dimension does not match spec alphabet size");
  }
  const Distribution q = measurement_diagonal(rho, basis);
  return make_report(set_probability(q, spec, cap));
}

ComplexMatrix dense_projector(const OrthonormalBasis& basis, const TypicalSetSpec& spec,
                              std::int64_t dense_cap) {
  if (basis.dim() != spec.d()) {
    throw validation_error("basis dimension does not match spec alphabet size");
  }
  const std::int64_t dim = checked_dense_dimension(spec.d(), spec.n(), dense_cap, "dense_projector");
  const std::vector<SymbolSequence> members = typical_members(spec);
  if (members.empty()) return ComplexMatrix::Zero(dim, dim);

  ComplexMatrix stacked(dim, static_cast<Eigen::Index>(members.size()));
  for (std::size_t j = 0; j < members.size(); ++j) {
    stacked.col(static_cast<Eigen::Index>(j)) = product_basis_vector(basis, members[j]);
  }
  ComplexMatrix proj = stacked * stacked.adjoint();
  proj = (proj + proj.adjoint()) / 2.0;
  return proj;
}

TraceOverlapReport preserved_weight(const DensityMatrix& rho, double h, double epsilon, int n,
                                    double tol) {
  const BasisSearchResult found = find_target_basis(rho, h, tol);
  const TypicalSetSpec spec(n, rho.dim(), h, epsilon);
  return trace_overlap_product(rho, found.basis, spec);
}

double upsilon_dimension_bound(int n, int d, double h, double epsilon) {
  if (n < 1 || d < 1) throw validation_error("upsilon bound requires n >= 1 and d >= 1");
  if (!(h >= 0.0) || !(epsilon > 0.0)) {
    throw validation_error("upsilon bound requires h >= 0 and epsilon > 0");
  }
  const double dd = static_cast<double>(d);
  const double log2_bound = (dd * dd + dd) * std::log2(static_cast<double>(n) + 1.0) +
                            static_cast<double>(n) * (h + epsilon);
  return std::exp2(log2_bound);
}

ComplexMatrix haar_unitary(int d, std::mt19937_64& rng) {
  if (d < 1) throw validation_error("dimension must be >= 1");
  // Box-Muller over explicit 53-bit uniforms keeps the draw reproducible
  // across standard libraries.
  const auto uniform = [&rng]() {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  };
  const auto gaussian_pair = [&]() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    return Complex(r * std::cos(a), r * std::sin(a));
  };
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = gaussian_pair() / std::sqrt(2.0);
  }
  const Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double a = std::abs(rjj);
    q.col(j) *= (a > 0.0) ? rjj / a : Complex(1.0, 0.0);
  }
  return q;
}

UpsilonEstimate estimate_upsilon_dimension(const TypicalSetSpec& spec, int samples,
                                           std::uint64_t seed, std::int64_t dense_cap) {
  if (samples < 1) throw validation_error("samples must be >= 1");
  const std::int64_t dim =
      checked_dense_dimension(spec.d(), spec.n(), dense_cap, "estimate_upsilon_dimension");
  const std::vector<SymbolSequence> members = typical_members(spec);
  if (members.empty()) {
    return UpsilonEstimate{0, samples, seed,
                           upsilon_dimension_bound(spec.n(), spec.d(), spec.h(), spec.epsilon())};
  }

  const std::int64_t columns = static_cast<std::int64_t>(members.size()) * samples;
  if (columns > kUpsilonEntryCap / dim) {
    throw resource_error("upsilon estimate would accumulate " + std::to_string(columns) +
                         " image vectors of dimension " + std::to_string(dim) + ", entry cap is " +
                         std::to_string(kUpsilonEntryCap));
  }

  ComplexMatrix images(dim, columns);
  Eigen::Index col = 0;
  for (int s = 0; s < samples; ++s) {
    ComplexMatrix u;
    if (seed == kIdentityFirstSeed && s == 0) {
      u = ComplexMatrix::Identity(spec.d(), spec.d());
    } else {
      std::mt19937_64 rng = sample_engine(seed, s);
      u = haar_unitary(spec.d(), rng);
    }
    const OrthonormalBasis rotated(std::move(u));
    for (const SymbolSequence& member : members) {
      images.col(col++) = product_basis_vector(rotated, member);
    }
  }

  Eigen::BDCSVD<ComplexMatrix> svd(images);
  const auto& sv = svd.singularValues();
  int rank = 0;
  if (sv.size() > 0 && sv[0] > 0.0) {
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv[i] > kRankThreshold * sv[0]) ++rank;
    }
  }
  return UpsilonEstimate{rank, samples, seed,
                         upsilon_dimension_bound(spec.n(), spec.d(), spec.h(), spec.epsilon())};
}

}  // namespace etsc

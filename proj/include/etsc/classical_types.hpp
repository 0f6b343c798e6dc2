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
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "etsc/errors.hpp"

namespace etsc {

using BigInt = boost::multiprecision::cpp_int;

// Entropy membership tests use |H - h| <= epsilon + kMembershipSlack so that
// boundary types are classified deterministically despite floating-point
// entropy evaluation.
inline constexpr double kMembershipSlack = 1e-12;

// Upper bound on the number of type classes binom(n+d-1, d-1) an enumeration
// or type-class sum will walk before raising resource_error.
inline constexpr std::int64_t kDefaultTypeClassCap = 10'000'000;

// A probability vector over a finite alphabet {1,...,d}. Entries are clamped
// into [0,1]; entries outside [-1e-12, 1+1e-12] or a total farther than
// `sum_tol` from 1 are rejected.
class Distribution {
 public:
  explicit Distribution(std::vector<double> probs, double sum_tol = 1e-12);

  int size() const { return static_cast<int>(probs_.size()); }
  // Probability of symbol a, 1-based.
  double prob(int a) const { return probs_[static_cast<std::size_t>(a - 1)]; }
  const std::vector<double>& probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

// A length-n word over the alphabet {1,...,d}. Symbols are 1-based.
struct SymbolSequence {
  std::vector<int> symbols;

  int length() const { return static_cast<int>(symbols.size()); }
};

// Occurrence counts of one type class together with its exact multiplicity
// n! / prod_a counts[a]!.
struct TypeClass {
  std::vector<int> counts;
  BigInt multiplicity;
};

// Parameters (n, d, h, epsilon) of an entropy-typical set: length-n words
// over d symbols whose empirical entropy lies within epsilon of h bits.
class TypicalSetSpec {
 public:
  TypicalSetSpec(int n, int d, double h, double epsilon);

  int n() const { return n_; }
  int d() const { return d_; }
  double h() const { return h_; }
  double epsilon() const { return epsilon_; }

  // Membership test on a type entropy in bits.
  bool admits(double type_entropy_bits) const;

 private:
  int n_;
  int d_;
  double h_;
  double epsilon_;
};

// Shannon entropy in bits, with the 0 log 0 = 0 convention.
double shannon_entropy(const Distribution& dist);

// Empirical distribution (type) of a sequence over the alphabet {1,...,d}.
Distribution empirical_type(const SymbolSequence& seq, int d);

// Entropy in bits of the type with the given occurrence counts (summing to n).
double type_entropy(const std::vector<int>& counts, int n);

// True iff |type(seq)(a) - p(a)| <= epsilon / d for every symbol a.
bool is_strongly_typical(const SymbolSequence& seq, const Distribution& p, double epsilon);

// True iff the entropy of seq's type lies within spec.epsilon of spec.h.
bool is_entropy_typical(const SymbolSequence& seq, const TypicalSetSpec& spec);

// Number of compositions of n into d non-negative parts, binom(n+d-1, d-1).
BigInt composition_count(int n, int d);

// All type classes of length-n words over d symbols, in lexicographic order
// of their count vectors, each with its exact multiplicity.
std::vector<TypeClass> enumerate_type_classes(int n, int d,
                                              std::int64_t cap = kDefaultTypeClassCap);

// Streaming variant: visits every count vector in lexicographic order without
// materializing the list. The visited vector is reused between calls.
void for_each_composition(int n, int d, const std::function<void(const std::vector<int>&)>& visit,
                          std::int64_t cap = kDefaultTypeClassCap);

// Exact number of sequences in the entropy-typical set, as a sum of
// multiplicities over qualifying type classes.
BigInt entropy_typical_cardinality(const TypicalSetSpec& spec,
                                   std::int64_t cap = kDefaultTypeClassCap);

// The cardinality upper bound (n+1)^d * 2^(n(h+epsilon)), evaluated in the
// log domain. May overflow to +inf for large arguments.
double cardinality_bound(const TypicalSetSpec& spec);

// Probability mass of the entropy-typical set under the i.i.d. source p.
// Accumulated per type class in the log domain with compensated summation.
double set_probability(const Distribution& p, const TypicalSetSpec& spec,
                       std::int64_t cap = kDefaultTypeClassCap);

// Probability mass of the strongly typical set A_epsilon(p) for words of
// length n.
double strong_set_probability(const Distribution& p, int n, double epsilon,
                              std::int64_t cap = kDefaultTypeClassCap);

}  // namespace etsc

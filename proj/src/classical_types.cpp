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

#include "etsc/classical_types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace etsc {

namespace {

constexpr double kEntryTol = 1e-12;

double log2_of(double x) { return std::log2(x); }

// ln n! / prod ln c_a! via lgamma; accurate enough for log-domain mass terms.
double ln_multinomial(const std::vector<int>& counts, int n) {
  double v = std::lgamma(static_cast<double>(n) + 1.0);
  for (int c : counts) {
    if (c > 1) v -= std::lgamma(static_cast<double>(c) + 1.0);
  }
  return v;
}

void check_sequence(const SymbolSequence& seq, int d) {
  if (d < 1) throw validation_error("alphabet size must be >= 1, got " + std::to_string(d));
  for (int s : seq.symbols) {
    if (s < 1 || s > d) {
      throw validation_error("symbol " + std::to_string(s) + " outside alphabet [1, " +
                             std::to_string(d) + "]");
    }
  }
}

// Kahan-compensated accumulator.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

Distribution::Distribution(std::vector<double> probs, double sum_tol) : probs_(std::move(probs)) {
  if (probs_.empty()) throw validation_error("distribution must have at least one entry");
  double sum = 0.0;
  for (double& p : probs_) {
    if (!(p >= -kEntryTol) || !(p <= 1.0 + kEntryTol)) {
      throw validation_error("distribution entry " + std::to_string(p) + " outside [0, 1]");
    }
    p = std::clamp(p, 0.0, 1.0);
    sum += p;
  }
  if (std::abs(sum - 1.0) > sum_tol) {
    throw validation_error("distribution entries sum to " + std::to_string(sum) +
                           "; |sum - 1| = " + std::to_string(std::abs(sum - 1.0)) +
                           " exceeds tolerance " + std::to_string(sum_tol));
  }
}

TypicalSetSpec::TypicalSetSpec(int n, int d, double h, double epsilon)
    : n_(n), d_(d), h_(h), epsilon_(epsilon) {
  if (n < 1) throw validation_error("sequence length n must be >= 1, got " + std::to_string(n));
  if (d < 1) throw validation_error("alphabet size d must be >= 1, got " + std::to_string(d));
  if (!(h >= 0.0)) throw validation_error("target entropy h must be >= 0, got " + std::to_string(h));
  if (!(epsilon > 0.0)) {
    throw validation_error("epsilon must be > 0, got " + std::to_string(epsilon));
  }
  const double hmax = log2_of(static_cast<double>(d));
  if (h > hmax + kMembershipSlack) {
    throw validation_error("target entropy h = " + std::to_string(h) + " exceeds log2(d) = " +
                           std::to_string(hmax));
  }
}

bool TypicalSetSpec::admits(double type_entropy_bits) const {
  return std::abs(type_entropy_bits - h_) <= epsilon_ + kMembershipSlack;
}

double shannon_entropy(const Distribution& dist) {
  double h = 0.0;
  for (double p : dist.probs()) {
    if (p > 0.0) h -= p * log2_of(p);
  }
  const double hmax = log2_of(static_cast<double>(dist.size()));
  return std::clamp(h, 0.0, hmax);
}

Distribution empirical_type(const SymbolSequence& seq, int d) {
  check_sequence(seq, d);
  const int n = seq.length();
  if (n == 0) throw validation_error("empty sequence has no type");
  std::vector<double> probs(static_cast<std::size_t>(d), 0.0);
  for (int s : seq.symbols) probs[static_cast<std::size_t>(s - 1)] += 1.0;
  for (double& p : probs) p /= static_cast<double>(n);
  return Distribution(std::move(probs));
}

double type_entropy(const std::vector<int>& counts, int n) {
  double h = 0.0;
  for (int c : counts) {
    if (c > 0 && c < n) {
      const double p = static_cast<double>(c) / static_cast<double>(n);
      h -= p * log2_of(p);
    }
  }
  return std::max(h, 0.0);
}

bool is_strongly_typical(const SymbolSequence& seq, const Distribution& p, double epsilon) {
  const int d = p.size();
  check_sequence(seq, d);
  if (!(epsilon > 0.0)) throw validation_error("epsilon must be > 0");
  const Distribution type = empirical_type(seq, d);
  const double slack = epsilon / static_cast<double>(d);
  for (int a = 1; a <= d; ++a) {
    if (std::abs(type.prob(a) - p.prob(a)) > slack) return false;
  }
  return true;
}

bool is_entropy_typical(const SymbolSequence& seq, const TypicalSetSpec& spec) {
  if (seq.length() != spec.n()) {
    throw validation_error("sequence length " + std::to_string(seq.length()) +
                           " does not match spec n = " + std::to_string(spec.n()));
  }
  return spec.admits(shannon_entropy(empirical_type(seq, spec.d())));
}

BigInt composition_count(int n, int d) {
  // binom(n+d-1, d-1)
  BigInt num = 1;
  for (int i = 1; i <= d - 1; ++i) {
    num *= n + i;
    num /= i;
  }
  return num;
}

void for_each_composition(int n, int d, const std::function<void(const std::vector<int>&)>& visit,
                          std::int64_t cap) {
  if (n < 1 || d < 1) throw validation_error("composition enumeration requires n >= 1 and d >= 1");
  const BigInt classes = composition_count(n, d);
  if (classes > cap) {
    throw resource_error("type-class count " + classes.str() + " exceeds cap " +
                         std::to_string(cap));
  }
  // Odometer over the first d-1 entries; the last entry absorbs the rest.
  std::vector<int> counts(static_cast<std::size_t>(d), 0);
  counts.back() = n;
  int free_sum = 0;  // sum of counts[0..d-2]
  for (;;) {
    visit(counts);
    int i = d - 2;
    while (i >= 0 && free_sum == n) {
      free_sum -= counts[static_cast<std::size_t>(i)];
      counts[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    counts[static_cast<std::size_t>(i)] += 1;
    ++free_sum;
    counts[static_cast<std::size_t>(d - 1)] = n - free_sum;
  }
}

std::vector<TypeClass> enumerate_type_classes(int n, int d, std::int64_t cap) {
  std::vector<BigInt> fact(static_cast<std::size_t>(n) + 1);
  fact[0] = 1;
  for (int i = 1; i <= n; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * i;

  std::vector<TypeClass> classes;
  for_each_composition(
      n, d,
      [&](const std::vector<int>& counts) {
        BigInt mult = fact[static_cast<std::size_t>(n)];
        for (int c : counts) {
          if (c > 1) mult /= fact[static_cast<std::size_t>(c)];
        }
        classes.push_back(TypeClass{counts, std::move(mult)});
      },
      cap);
  return classes;
}

BigInt entropy_typical_cardinality(const TypicalSetSpec& spec, std::int64_t cap) {
  const int n = spec.n();
  std::vector<BigInt> fact(static_cast<std::size_t>(n) + 1);
  fact[0] = 1;
  for (int i = 1; i <= n; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * i;

  BigInt total = 0;
  for_each_composition(
      n, spec.d(),
      [&](const std::vector<int>& counts) {
        if (!spec.admits(type_entropy(counts, n))) return;
        BigInt mult = fact[static_cast<std::size_t>(n)];
        for (int c : counts) {
          if (c > 1) mult /= fact[static_cast<std::size_t>(c)];
        }
        total += mult;
      },
      cap);
  return total;
}

double cardinality_bound(const TypicalSetSpec& spec) {
  const double log2_bound = static_cast<double>(spec.d()) * log2_of(static_cast<double>(spec.n()) + 1.0) +
                            static_cast<double>(spec.n()) * (spec.h() + spec.epsilon());
  return std::exp2(log2_bound);
}

namespace {

// Shared mass accumulator: sums multiplicity * prod_a p(a)^counts[a] over the
// compositions the membership predicate accepts. Each term is assembled in
// the log domain; terms are combined with compensated summation.
double typical_mass(const Distribution& p, int n, int d,
                    const std::function<bool(const std::vector<int>&)>& member, std::int64_t cap) {
  if (p.size() != d) {
    throw validation_error("distribution has " + std::to_string(p.size()) +
                           " entries, expected d = " + std::to_string(d));
  }
  CompensatedSum acc;
  for_each_composition(
      n, d,
      [&](const std::vector<int>& counts) {
        if (!member(counts)) return;
        double ln_term = ln_multinomial(counts, n);
        for (int a = 1; a <= d; ++a) {
          const int c = counts[static_cast<std::size_t>(a - 1)];
          if (c == 0) continue;
          const double pa = p.prob(a);
          if (pa == 0.0) return;  // zero-probability symbol used: term vanishes
          ln_term += static_cast<double>(c) * std::log(pa);
        }
        acc.add(std::exp(ln_term));
      },
      cap);
  return std::clamp(acc.sum, 0.0, 1.0);
}

}  // namespace

double set_probability(const Distribution& p, const TypicalSetSpec& spec, std::int64_t cap) {
  return typical_mass(p, spec.n(), spec.d(),
                      [&](const std::vector<int>& counts) {
                        return spec.admits(type_entropy(counts, spec.n()));
                      },
                      cap);
}

double strong_set_probability(const Distribution& p, int n, double epsilon, std::int64_t cap) {
  if (!(epsilon > 0.0)) throw validation_error("epsilon must be > 0");
  const int d = p.size();
  const double slack = epsilon / static_cast<double>(d);
  return typical_mass(p, n, d,
                      [&](const std::vector<int>& counts) {
                        for (int a = 1; a <= d; ++a) {
                          const double type_a = static_cast<double>(counts[static_cast<std::size_t>(a - 1)]) /
                                                static_cast<double>(n);
                          if (std::abs(type_a - p.prob(a)) > slack) return false;
                        }
                        return true;
                      },
                      cap);
}

}  // namespace etsc

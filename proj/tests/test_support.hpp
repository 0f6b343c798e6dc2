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

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "etsc/quantum_state.hpp"
#include "etsc/typical_projector.hpp"

namespace etsc::testing {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

// Random full-support density matrix G G^dag / tr(G G^dag).
inline DensityMatrix random_density(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  }
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  m = (m + m.adjoint()) / 2.0;
  return DensityMatrix(std::move(m));
}

inline OrthonormalBasis random_basis(int d, std::mt19937_64& rng) {
  return OrthonormalBasis(haar_unitary(d, rng));
}

// ---------------------------------------------------------------------------
// Brute-force oracles. These enumerate words and evaluate entropies and
// probabilities directly, independent of the type-class machinery they check.
// ---------------------------------------------------------------------------

// Visits every word in {1..d}^n in lexicographic order.
inline void for_each_word(int n, int d, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> word(static_cast<std::size_t>(n), 1);
  for (;;) {
    fn(word);
    int pos = n - 1;
    while (pos >= 0 && word[static_cast<std::size_t>(pos)] == d) {
      word[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) return;
    ++word[static_cast<std::size_t>(pos)];
  }
}

// Entropy in bits of the word's empirical frequencies, computed directly.
inline double word_entropy(const std::vector<int>& word, int d) {
  std::vector<int> counts(static_cast<std::size_t>(d), 0);
  for (int s : word) ++counts[static_cast<std::size_t>(s - 1)];
  const double n = static_cast<double>(word.size());
  double h = 0.0;
  for (int c : counts) {
    if (c > 0) h -= (c / n) * std::log2(c / n);
  }
  return h;
}

inline bool word_is_entropy_typical(const std::vector<int>& word, int d, double h, double eps) {
  return std::abs(word_entropy(word, d) - h) <= eps + 1e-12;
}

inline std::int64_t brute_typical_count(int n, int d, double h, double eps) {
  std::int64_t count = 0;
  for_each_word(n, d, [&](const std::vector<int>& word) {
    if (word_is_entropy_typical(word, d, h, eps)) ++count;
  });
  return count;
}

inline std::vector<std::vector<int>> brute_typical_words(int n, int d, double h, double eps) {
  std::vector<std::vector<int>> words;
  for_each_word(n, d, [&](const std::vector<int>& word) {
    if (word_is_entropy_typical(word, d, h, eps)) words.push_back(word);
  });
  return words;
}

inline double brute_set_probability(const std::vector<double>& p, int n, double h, double eps) {
  const int d = static_cast<int>(p.size());
  double total = 0.0;
  for_each_word(n, d, [&](const std::vector<int>& word) {
    if (!word_is_entropy_typical(word, d, h, eps)) return;
    double mass = 1.0;
    for (int s : word) mass *= p[static_cast<std::size_t>(s - 1)];
    total += mass;
  });
  return total;
}

inline double brute_strong_probability(const std::vector<double>& p, int n, double eps) {
  const int d = static_cast<int>(p.size());
  double total = 0.0;
  for_each_word(n, d, [&](const std::vector<int>& word) {
    std::vector<int> counts(static_cast<std::size_t>(d), 0);
    for (int s : word) ++counts[static_cast<std::size_t>(s - 1)];
    for (int a = 0; a < d; ++a) {
      const double freq = static_cast<double>(counts[static_cast<std::size_t>(a)]) / n;
      if (std::abs(freq - p[static_cast<std::size_t>(a)]) > eps / d) return;
    }
    double mass = 1.0;
    for (int s : word) mass *= p[static_cast<std::size_t>(s - 1)];
    total += mass;
  });
  return total;
}

inline double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

// Inverse of the binary entropy on [0, 1/2], by bisection.
inline double binary_entropy_inverse(double h) {
  double lo = 0.0;
  double hi = 0.5;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (binary_entropy(mid) < h ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace etsc::testing

// Copyright 2026 The paucity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Seeded generators shared by the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "paucity/curve.hpp"
#include "paucity/numeric.hpp"

namespace paucity::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return range(0, 1) == 1; }

  UniPoly poly(unsigned degree, std::int64_t bound) {
    UniPoly p(degree + 1);
    for (auto& c : p) c = from_i64(range(-bound, bound));
    while (p[degree] == 0) p[degree] = from_i64(range(-bound, bound));
    return p;
  }

  // Random nonempty subset of [n].
  GroundSet subset(std::int64_t n) {
    std::vector<std::int64_t> xs;
    for (std::int64_t x = 1; x <= n; ++x) {
      if (coin()) xs.push_back(x);
    }
    if (xs.empty()) xs.push_back(range(1, n));
    return GroundSet(xs, n);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Systems from the fixed test battery.
inline std::vector<SeparatedSystem> battery() {
  return {SeparatedSystem::monomials({2}),    SeparatedSystem::monomials({3}),
          SeparatedSystem::monomials({1, 2}), SeparatedSystem::monomials({1, 3}),
          SeparatedSystem::monomials({2, 3}), SeparatedSystem::moment(3)};
}

// Counts (m, n) in X^s x X^s with sum_i phi_j(n_i) - phi_j(m_i) = a_j by
// walking every tuple. Kept deliberately naive.
inline std::uint64_t naive_count(const SeparatedSystem& sys, const GroundSet& g, unsigned s,
                                 const std::vector<BigInt>& a) {
  const auto& el = g.elements();
  const std::size_t k = el.size();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < 2 * s; ++i) total *= k;
  std::uint64_t hits = 0;
  std::vector<std::size_t> idx(2 * s, 0);
  for (std::uint64_t step = 0; step < total; ++step) {
    bool ok = true;
    for (std::size_t j = 0; j < sys.r() && ok; ++j) {
      BigInt sum = 0;
      for (unsigned i = 0; i < s; ++i) {
        sum += sys.value(j, from_i64(el[idx[s + i]])) - sys.value(j, from_i64(el[idx[i]]));
      }
      ok = sum == a[j];
    }
    if (ok) ++hits;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (++idx[i] < k) break;
      idx[i] = 0;
    }
  }
  return hits;
}

}  // namespace paucity::testing

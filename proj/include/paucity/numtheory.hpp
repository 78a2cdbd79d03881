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

#include <cstdint>
#include <utility>
#include <vector>

#include "paucity/numeric.hpp"

namespace paucity {

/// Prime factorization of |n| (n != 0) as ascending (prime, exponent) pairs.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);

/// All positive divisors of |n|, ascending.
std::vector<BigInt> positive_divisors(const BigInt& n);

/// Positive divisors d of |n| with d <= bound, found by trial division.
/// Cheaper than factoring when bound is small relative to |n|.
std::vector<std::int64_t> small_divisors(const BigInt& n, std::int64_t bound);

/// Number of ordered factorizations of |n| into k positive factors.
BigInt ordered_factorization_count(const BigInt& n, unsigned k);

}  // namespace paucity

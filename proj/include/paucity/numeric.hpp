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

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace paucity {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

/// Parses a base-10 integer, optionally signed. Throws Error(kInvalidInput).
BigInt parse_bigint(const std::string& text);
/// Accepts "a", "a/b" or a decimal literal such as "1.75".
Rational parse_rational(const std::string& text);

inline bool fits_i64(const BigInt& v) { return v.fits_slong_p() != 0; }
std::int64_t to_i64(const BigInt& v);
inline BigInt from_i64(std::int64_t v) { return BigInt(static_cast<long>(v)); }

/// Natural log of |v| for v != 0 that does not overflow for huge values.
double log_abs(const BigInt& v);
double to_double(const Rational& v);

BigInt ipow(const BigInt& base, unsigned long exponent);
Rational rpow(const Rational& base, unsigned long exponent);

std::size_t hash_bigint(const BigInt& v) noexcept;

inline void hash_combine(std::size_t& seed, std::size_t v) noexcept {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

struct BigIntVectorHash {
  std::size_t operator()(const std::vector<BigInt>& v) const noexcept {
    std::size_t h = v.size();
    for (const auto& x : v) hash_combine(h, hash_bigint(x));
    return h;
  }
};

struct I64VectorHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) hash_combine(h, std::hash<std::int64_t>{}(x));
    return h;
  }
};

}  // namespace paucity

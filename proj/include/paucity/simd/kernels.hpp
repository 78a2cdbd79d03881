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

// Int64 lane kernels behind the exact-arithmetic code. Each kernel has a scalar
// reference in namespace scalar and optional vector variants; the public entry
// points dispatch on the level chosen at startup (PAUCITY_SIMD=scalar|avx2|neon
// overrides detection).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace paucity::simd {

enum class Level { kScalar, kAvx2, kNeon };

std::string_view level_name(Level level) noexcept;
bool level_available(Level level) noexcept;
Level active_level() noexcept;
/// Forces a level; returns false (and changes nothing) when it is not available.
bool set_level(Level level) noexcept;

/// True when Horner evaluation of coeffs at any |x| <= max_abs_x keeps every
/// intermediate inside int64. The kernels below assume this holds.
bool horner_fits(std::span<const std::int64_t> coeffs, std::int64_t max_abs_x) noexcept;

/// out[i] = sum_k coeffs[k] * xs[i]^k (ascending coefficients).
void poly_eval(std::span<const std::int64_t> coeffs, std::span<const std::int64_t> xs,
               std::span<std::int64_t> out) noexcept;

std::size_t count_equal(std::span<const std::int64_t> values, std::int64_t target) noexcept;

/// Appends every i with values[i] == target to hits, in ascending order.
void find_equal(std::span<const std::int64_t> values, std::int64_t target,
                std::vector<std::uint32_t>& hits);

/// out[i] = in[i] + delta (wrapping; callers bound the range first).
void add_scalar(std::span<const std::int64_t> in, std::int64_t delta,
                std::span<std::int64_t> out) noexcept;

/// Indices i with coeffs evaluated at xs[i] equal to zero. Falls back to
/// nothing: callers must check horner_fits first.
void poly_zeros(std::span<const std::int64_t> coeffs, std::span<const std::int64_t> xs,
                std::vector<std::uint32_t>& hits);

#define PAUCITY_KERNEL_DECLS                                                                   \
  void poly_eval(std::span<const std::int64_t> coeffs, std::span<const std::int64_t> xs,     \
                 std::span<std::int64_t> out) noexcept;                                       \
  std::size_t count_equal(std::span<const std::int64_t> values, std::int64_t target) noexcept; \
  void find_equal(std::span<const std::int64_t> values, std::int64_t target,                 \
                  std::vector<std::uint32_t>& hits);                                          \
  void add_scalar(std::span<const std::int64_t> in, std::int64_t delta,                      \
                  std::span<std::int64_t> out) noexcept;

namespace scalar {
PAUCITY_KERNEL_DECLS
}
namespace avx2 {
PAUCITY_KERNEL_DECLS
}
namespace neon {
PAUCITY_KERNEL_DECLS
}

#undef PAUCITY_KERNEL_DECLS

}  // namespace paucity::simd

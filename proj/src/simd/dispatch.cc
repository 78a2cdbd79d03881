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

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <limits>

#include "paucity/simd/kernels.hpp"

namespace paucity::simd {

namespace {

Level detect() noexcept {
  Level best = Level::kScalar;
#if defined(PAUCITY_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) best = Level::kAvx2;
#elif defined(PAUCITY_HAVE_NEON)
  best = Level::kNeon;
#endif
  if (const char* env = std::getenv("PAUCITY_SIMD")) {
    for (Level l : {Level::kScalar, Level::kAvx2, Level::kNeon}) {
      if (level_name(l) == env && level_available(l)) return l;
    }
  }
  return best;
}

std::atomic<Level>& current() noexcept {
  static std::atomic<Level> level{detect()};
  return level;
}

}  // namespace

std::string_view level_name(Level level) noexcept {
  switch (level) {
    case Level::kScalar: return "scalar";
    case Level::kAvx2: return "avx2";
    case Level::kNeon: return "neon";
  }
  return "scalar";
}

bool level_available(Level level) noexcept {
  switch (level) {
    case Level::kScalar: return true;
    case Level::kAvx2:
#if defined(PAUCITY_HAVE_AVX2)
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Level::kNeon:
#if defined(PAUCITY_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Level active_level() noexcept { return current().load(std::memory_order_relaxed); }

bool set_level(Level level) noexcept {
  if (!level_available(level)) return false;
  current().store(level, std::memory_order_relaxed);
  return true;
}

bool horner_fits(std::span<const std::int64_t> coeffs, std::int64_t max_abs_x) noexcept {
  using u128 = unsigned __int128;
  constexpr u128 kLimit = static_cast<u128>(std::numeric_limits<std::int64_t>::max());
  const u128 x = static_cast<u128>(max_abs_x < 0 ? -static_cast<u128>(max_abs_x) : max_abs_x);
  u128 bound = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    std::int64_t c = coeffs[k];
    if (c == std::numeric_limits<std::int64_t>::min()) return false;
    u128 mag = static_cast<u128>(c < 0 ? -c : c);
    if (bound != 0 && x != 0 && bound > kLimit / x) return false;
    bound = bound * x;
    if (bound > kLimit) return false;
    bound += mag;
    if (bound > kLimit) return false;
  }
  return true;
}

#if defined(PAUCITY_HAVE_AVX2)
#define PAUCITY_DISPATCH(fn, ...)                               \
  switch (active_level()) {                                     \
    case Level::kAvx2: return avx2::fn(__VA_ARGS__);            \
    default: return scalar::fn(__VA_ARGS__);                    \
  }
#elif defined(PAUCITY_HAVE_NEON)
#define PAUCITY_DISPATCH(fn, ...)                               \
  switch (active_level()) {                                     \
    case Level::kNeon: return neon::fn(__VA_ARGS__);            \
    default: return scalar::fn(__VA_ARGS__);                    \
  }
#else
#define PAUCITY_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__);
#endif

void poly_eval(std::span<const std::int64_t> coeffs, std::span<const std::int64_t> xs,
               std::span<std::int64_t> out) noexcept {
  PAUCITY_DISPATCH(poly_eval, coeffs, xs, out)
}

std::size_t count_equal(std::span<const std::int64_t> values, std::int64_t target) noexcept {
  PAUCITY_DISPATCH(count_equal, values, target)
}

void find_equal(std::span<const std::int64_t> values, std::int64_t target,
                std::vector<std::uint32_t>& hits) {
  PAUCITY_DISPATCH(find_equal, values, target, hits)
}

void add_scalar(std::span<const std::int64_t> in, std::int64_t delta,
                std::span<std::int64_t> out) noexcept {
  PAUCITY_DISPATCH(add_scalar, in, delta, out)
}

void poly_zeros(std::span<const std::int64_t> coeffs, std::span<const std::int64_t> xs,
                std::vector<std::uint32_t>& hits) {
  constexpr std::size_t kBlock = 256;
  std::int64_t buffer[kBlock];
  for (std::size_t base = 0; base < xs.size(); base += kBlock) {
    std::size_t len = std::min(kBlock, xs.size() - base);
    poly_eval(coeffs, xs.subspan(base, len), std::span<std::int64_t>(buffer, len));
    std::size_t before = hits.size();
    find_equal(std::span<const std::int64_t>(buffer, len), 0, hits);
    for (std::size_t k = before; k < hits.size(); ++k) hits[k] += static_cast<std::uint32_t>(base);
  }
}

#undef PAUCITY_DISPATCH

}  // namespace paucity::simd

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

#include <immintrin.h>

#include "paucity/simd/kernels.hpp"

namespace paucity::simd::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

// Low 64 bits of a lane-wise 64x64 product, built from 32x32->64 multiplies.
inline __m256i mullo_epi64(__m256i a, __m256i b) {
  __m256i a_hi = _mm256_srli_epi64(a, 32);
  __m256i b_hi = _mm256_srli_epi64(b, 32);
  __m256i lo = _mm256_mul_epu32(a, b);
  __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(a_hi, b), _mm256_mul_epu32(a, b_hi));
  return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

inline __m256i load(const std::int64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline unsigned eq_mask(__m256i v, __m256i t) {
  return static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(v, t))));
}

}  // namespace

void poly_eval(std::span<const std::int64_t> coeffs, std::span<const std::int64_t> xs,
               std::span<std::int64_t> out) noexcept {
  std::size_t i = 0;
  const std::size_t n = xs.size();
  for (; i + kLanes <= n; i += kLanes) {
    __m256i x = load(xs.data() + i);
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      acc = _mm256_add_epi64(mullo_epi64(acc, x), _mm256_set1_epi64x(coeffs[k]));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), acc);
  }
  if (i < n) scalar::poly_eval(coeffs, xs.subspan(i), out.subspan(i));
}

std::size_t count_equal(std::span<const std::int64_t> values, std::int64_t target) noexcept {
  const __m256i t = _mm256_set1_epi64x(target);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + kLanes <= values.size(); i += kLanes) {
    count += static_cast<std::size_t>(__builtin_popcount(eq_mask(load(values.data() + i), t)));
  }
  return count + scalar::count_equal(values.subspan(i), target);
}

void find_equal(std::span<const std::int64_t> values, std::int64_t target,
                std::vector<std::uint32_t>& hits) {
  const __m256i t = _mm256_set1_epi64x(target);
  std::size_t i = 0;
  for (; i + kLanes <= values.size(); i += kLanes) {
    unsigned mask = eq_mask(load(values.data() + i), t);
    while (mask != 0) {
      unsigned lane = static_cast<unsigned>(__builtin_ctz(mask));
      hits.push_back(static_cast<std::uint32_t>(i + lane));
      mask &= mask - 1;
    }
  }
  for (; i < values.size(); ++i) {
    if (values[i] == target) hits.push_back(static_cast<std::uint32_t>(i));
  }
}

void add_scalar(std::span<const std::int64_t> in, std::int64_t delta,
                std::span<std::int64_t> out) noexcept {
  const __m256i d = _mm256_set1_epi64x(delta);
  std::size_t i = 0;
  for (; i + kLanes <= in.size(); i += kLanes) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i),
                        _mm256_add_epi64(load(in.data() + i), d));
  }
  if (i < in.size()) scalar::add_scalar(in.subspan(i), delta, out.subspan(i));
}

}  // namespace paucity::simd::avx2

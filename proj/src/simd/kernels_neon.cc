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

#include <arm_neon.h>

#include "paucity/simd/kernels.hpp"

namespace paucity::simd::neon {

// NEON has no 64-bit lane multiply, so polynomial evaluation stays scalar.

namespace {
constexpr std::size_t kLanes = 2;
}

void poly_eval(std::span<const std::int64_t> coeffs, std::span<const std::int64_t> xs,
               std::span<std::int64_t> out) noexcept {
  scalar::poly_eval(coeffs, xs, out);
}

std::size_t count_equal(std::span<const std::int64_t> values, std::int64_t target) noexcept {
  const int64x2_t t = vdupq_n_s64(target);
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + kLanes <= values.size(); i += kLanes) {
    uint64x2_t eq = vceqq_s64(vld1q_s64(values.data() + i), t);
    acc = vsubq_u64(acc, eq);  // all-ones lanes count as -1
  }
  return static_cast<std::size_t>(vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1)) +
         scalar::count_equal(values.subspan(i), target);
}

void find_equal(std::span<const std::int64_t> values, std::int64_t target,
                std::vector<std::uint32_t>& hits) {
  const int64x2_t t = vdupq_n_s64(target);
  std::size_t i = 0;
  for (; i + kLanes <= values.size(); i += kLanes) {
    uint64x2_t eq = vceqq_s64(vld1q_s64(values.data() + i), t);
    if (vgetq_lane_u64(eq, 0) != 0) hits.push_back(static_cast<std::uint32_t>(i));
    if (vgetq_lane_u64(eq, 1) != 0) hits.push_back(static_cast<std::uint32_t>(i + 1));
  }
  for (; i < values.size(); ++i) {
    if (values[i] == target) hits.push_back(static_cast<std::uint32_t>(i));
  }
}

void add_scalar(std::span<const std::int64_t> in, std::int64_t delta,
                std::span<std::int64_t> out) noexcept {
  const int64x2_t d = vdupq_n_s64(delta);
  std::size_t i = 0;
  for (; i + kLanes <= in.size(); i += kLanes) {
    vst1q_s64(out.data() + i, vaddq_s64(vld1q_s64(in.data() + i), d));
  }
  if (i < in.size()) scalar::add_scalar(in.subspan(i), delta, out.subspan(i));
}

}  // namespace paucity::simd::neon

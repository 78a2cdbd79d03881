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

#include "paucity/simd/kernels.hpp"

namespace paucity::simd::scalar {

// Arithmetic goes through uint64 so that the reference and the vector
// variants agree bit for bit even on wraparound.

void poly_eval(std::span<const std::int64_t> coeffs, std::span<const std::int64_t> xs,
               std::span<std::int64_t> out) noexcept {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::uint64_t acc = 0;
    auto x = static_cast<std::uint64_t>(xs[i]);
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      acc = acc * x + static_cast<std::uint64_t>(coeffs[k]);
    }
    out[i] = static_cast<std::int64_t>(acc);
  }
}

std::size_t count_equal(std::span<const std::int64_t> values, std::int64_t target) noexcept {
  std::size_t n = 0;
  for (auto v : values) n += (v == target);
  return n;
}

void find_equal(std::span<const std::int64_t> values, std::int64_t target,
                std::vector<std::uint32_t>& hits) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == target) hits.push_back(static_cast<std::uint32_t>(i));
  }
}

void add_scalar(std::span<const std::int64_t> in, std::int64_t delta,
                std::span<std::int64_t> out) noexcept {
  for (std::size_t i = 0; i < in.size(); ++i) {
    out[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(in[i]) +
                                       static_cast<std::uint64_t>(delta));
  }
}

}  // namespace paucity::simd::scalar

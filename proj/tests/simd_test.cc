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

#include <algorithm>

#include "doctest.h"
#include "paucity/simd/kernels.hpp"
#include "test_support.hpp"

using namespace paucity;
using simd::Level;

namespace {

std::vector<Level> available_levels() {
  std::vector<Level> out;
  for (Level l : {Level::kScalar, Level::kAvx2, Level::kNeon}) {
    if (simd::level_available(l)) out.push_back(l);
  }
  return out;
}

struct LevelGuard {
  Level saved = simd::active_level();
  ~LevelGuard() { simd::set_level(saved); }
};

}  // namespace

TEST_CASE("scalar level is always available") {
  CHECK(simd::level_available(Level::kScalar));
  CHECK(simd::level_name(Level::kScalar) == "scalar");
}

TEST_CASE("kernels agree across dispatch levels") {
  LevelGuard guard;
  testing::Gen gen(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.range(0, 77));
    std::vector<std::int64_t> xs(n);
    for (auto& x : xs) x = gen.range(-40, 40);
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(gen.range(1, 5)));
    for (auto& c : coeffs) c = gen.range(-9, 9);
    const std::int64_t target = gen.range(-3, 3);
    const std::int64_t delta = gen.range(-1000, 1000);

    std::vector<std::vector<std::int64_t>> evals, shifted;
    std::vector<std::size_t> counts;
    std::vector<std::vector<std::uint32_t>> finds, zeros;
    for (Level l : available_levels()) {
      REQUIRE(simd::set_level(l));
      std::vector<std::int64_t> out(n), sh(n);
      simd::poly_eval(coeffs, xs, out);
      simd::add_scalar(xs, delta, sh);
      std::vector<std::uint32_t> hits, z;
      simd::find_equal(xs, target, hits);
      simd::poly_zeros(coeffs, xs, z);
      evals.push_back(out);
      shifted.push_back(sh);
      counts.push_back(simd::count_equal(xs, target));
      finds.push_back(hits);
      zeros.push_back(z);
    }
    // Direct reference
    std::vector<std::int64_t> ref(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t v = 0;
      for (std::size_t k = coeffs.size(); k-- > 0;) v = v * xs[i] + coeffs[k];
      ref[i] = v;
    }
    for (std::size_t k = 0; k < evals.size(); ++k) {
      CHECK(evals[k] == ref);
      CHECK(shifted[k] == shifted[0]);
      CHECK(counts[k] == static_cast<std::size_t>(std::count(xs.begin(), xs.end(), target)));
      CHECK(finds[k] == finds[0]);
      CHECK(zeros[k] == zeros[0]);
    }
  }
}

TEST_CASE("horner_fits guards overflow") {
  std::vector<std::int64_t> small{1, 2, 3};
  CHECK(simd::horner_fits(small, 1000));
  std::vector<std::int64_t> big{0, 0, 0, 0, 0, 0, 0, 1};
  CHECK_FALSE(simd::horner_fits(big, 1'000'000));
}

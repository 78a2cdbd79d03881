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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "doctest.h"
#include "paucity/averaging.hpp"
#include "paucity/error.hpp"
#include "test_support.hpp"

using namespace paucity;

namespace {

const SeparatedSystem kT = SeparatedSystem::monomials({1});
const SeparatedSystem kT2 = SeparatedSystem::monomials({2});

PointSet pts(std::initializer_list<std::int64_t> xs) {
  PointSet out;
  for (auto x : xs) out.insert(Point{x});
  return out;
}

Exponent ex(long num, long den = 1) { return Exponent{Rational(num, den), false}; }

}  // namespace

TEST_CASE("forward average S") {
  auto sf = apply_S(kT2, GroundSet({1, 2}), LatticeFunction::indicator(pts({1, 4}), 1));
  CHECK(sf.at({0}) == 2);
  CHECK(apply_S(kT2, GroundSet({1, 2}), LatticeFunction()).is_zero());
  auto sd = apply_S(kT, GroundSet({1, 2}), LatticeFunction::delta({0}));
  CHECK(sd.at({-1}) == 1);
  CHECK(sd.at({-2}) == 1);
  CHECK(sd.support_size() == 2);
}

TEST_CASE("backward average S*") {
  auto s = apply_S_star(kT2, GroundSet({1}), LatticeFunction::delta({0}));
  CHECK(s.at({1}) == 1);
  CHECK(s.support_size() == 1);
}

TEST_CASE("curve measure") {
  auto mu = curve_measure_mu(kT2, GroundSet::range(3));
  CHECK(mu.at({1}) == 1);
  CHECK(mu.at({4}) == 1);
  CHECK(mu.at({9}) == 1);
  CHECK(mu.l1_norm() == 3);
  CHECK(mu.linf_norm() == 1);
  auto folded = curve_measure_mu(SeparatedSystem::validate({{BigInt(0), BigInt(-4), BigInt(1)}}), GroundSet({1, 3}));
  CHECK(folded.support_size() == 1);
  CHECK(folded.at({-3}) == 2);
  CHECK(curve_measure_mu(kT2, GroundSet()).is_zero());
}

TEST_CASE("means") {
  auto m1 = means(kT2, GroundSet({1, 2}), pts({1, 4}), pts({0}));
  CHECK(m1.pairing == 2);
  CHECK(m1.alpha == 2);
  CHECK(m1.beta == 1);
  auto m2 = means(kT2, GroundSet::range(3), pts({0}), pts({0}));
  CHECK(m2.pairing == 0);
  auto m3 = means(kT, GroundSet({1, 2}), pts({0, 1, 2, 3}), pts({0, 1}));
  CHECK(m3.pairing == 4);
  CHECK(m3.alpha == 2);
  CHECK(m3.beta == 1);
  CHECK_THROWS_AS(means(kT, GroundSet({1}), PointSet(), pts({0})), Error);
}

TEST_CASE("restricted weak type ratio") {
  CHECK(rwt_ratio(kT2, GroundSet::range(3), pts({0}), pts({0}), ex(3, 2), ex(3)) == 0.0);
  // Curve image against the origin: pairing |X|, normalized ratio |X|^{-1/2}.
  for (std::int64_t n : {4, 9, 25}) {
    auto g = GroundSet::range(n);
    auto w = extremal_witnesses(kT2, g, "curve");
    CHECK(rwt_ratio(kT2, g, *w.e, *w.f, ex(2), ex(2)) == doctest::Approx(std::pow(double(n), -0.5)));
  }
  CHECK(rwt_ratio_from(BigInt(6), 3, BigInt(4), BigInt(9), ex(2), ex(2), RwtForm::kDual) ==
        doctest::Approx(2.0 / (2.0 * 3.0)));
  CHECK(rwt_ratio_from(BigInt(6), 3, BigInt(4), BigInt(9), ex(3, 2), ex(3), RwtForm::kDiagonal) ==
        doctest::Approx(2.0 / (std::pow(4.0, 2.0 / 3) * std::pow(9.0, 2.0 / 3))));
}

TEST_CASE("extremal witnesses") {
  auto g = GroundSet::range(3);
  auto d = extremal_witnesses(kT2, g, "delta");
  CHECK(*d.e == pts({0}));
  CHECK(*d.f == pts({-1, -4, -9}));
  auto c = extremal_witnesses(kT2, g, "curve");
  CHECK(*c.e == pts({1, 4, 9}));
  CHECK(*c.f == pts({0}));
  auto b = extremal_witnesses(kT, GroundSet::range(2), "box");
  REQUIRE(b.e_box.has_value());
  CHECK(b.e_box->lo == Point{0});
  CHECK(b.e_box->hi == Point{4});
  CHECK(b.f_box->lo == Point{0});
  CHECK(b.f_box->hi == Point{2});
  CHECK(witness_pairing(kT, GroundSet::range(2), b) == 6);
  CHECK_THROWS_AS(extremal_witnesses(kT, g, "blob"), Error);
}

TEST_CASE("box pairing matches explicit enumeration") {
  for (const auto& sys : testing::battery()) {
    if (sys.total_degree() > 3) continue;
    auto g = GroundSet::range(3);
    auto w = extremal_witnesses(sys, g, "box");
    PointSet e, f;
    for (const auto& [box, out] : {std::pair{*w.e_box, &e}, std::pair{*w.f_box, &f}}) {
      Point p = box.lo;
      for (;;) {
        out->insert(p);
        std::size_t j = 0;
        while (j < p.size() && p[j] == box.hi[j]) {
          p[j] = box.lo[j];
          ++j;
        }
        if (j == p.size()) break;
        ++p[j];
      }
    }
    CHECK(witness_pairing(sys, g, w) == means(sys, g, e, f).pairing);
  }
}

TEST_CASE("random witness search is thread independent") {
  auto g = GroundSet::range(10);
  auto one = random_witness_search(kT2, g, 40, 7, ex(5, 3), ex(5, 2), 1);
  auto four = random_witness_search(kT2, g, 40, 7, ex(5, 3), ex(5, 2), 4);
  CHECK(one.trial == four.trial);
  CHECK(one.ratio == four.ratio);
  CHECK(*one.best.e == *four.best.e);
}

TEST_CASE("point set specs") {
  CHECK(parse_point_set("points:0,1;2,3", 2).size() == 2);
  CHECK(parse_point_set("box:0,0:2,1", 2).size() == 6);
  CHECK(parse_point_set("box:3:1", 1).empty());
  CHECK_THROWS_AS(parse_point_set("points:1,2,3", 2), Error);
  const char* path = "averaging_test_points.txt";
  {
    std::ofstream out(path);
    out << "# E\n1 2\n3,4\n";
  }
  CHECK(parse_point_set(std::string("file:") + path, 2) == PointSet{{1, 2}, {3, 4}});
  std::remove(path);
}

TEST_CASE("checked point arithmetic") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(add_points({big}, {1}), Error);
  CHECK(sub_points({5, 2}, {1, 3}) == Point{4, -1});
}

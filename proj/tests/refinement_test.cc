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

#include "doctest.h"
#include "paucity/error.hpp"
#include "paucity/refinement.hpp"
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

PointSet interval(std::int64_t lo, std::int64_t hi) {
  PointSet out;
  for (auto x = lo; x <= hi; ++x) out.insert(Point{x});
  return out;
}

bool all_hold(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (c.applicable && !c.holds) return false;
  }
  return true;
}

// F: points in a small box; E: part of F + gamma(X) plus stray points.
std::pair<PointSet, PointSet> draw_sets(testing::Gen& gen, const SeparatedSystem& sys, const GroundSet& g) {
  PointSet e, f;
  const auto nf = gen.range(1, sys.r() == 1 ? 3 : 6);
  while (static_cast<std::int64_t>(f.size()) < nf) {
    Point p(sys.r());
    for (auto& c : p) c = gen.range(0, 2);
    f.insert(p);
  }
  for (const auto& x : f) {
    for (const auto& gx : curve_points(sys, g)) {
      if (gen.range(0, 3) > 0) e.insert(add_points(x, gx));
    }
  }
  Point stray(sys.r());
  for (auto& c : stray) c = gen.range(-2, 3);
  e.insert(stray);
  return {e, f};
}

}  // namespace

TEST_CASE("first flowing step by hand") {
  auto fr = flow(kT, GroundSet({1, 2}), pts({0, 1, 2, 3}), pts({0, 1}), 1);
  CHECK(fr.e[1] == pts({1, 2, 3}));
  CHECK(fr.ok());
}

TEST_CASE("zero pairing keeps the sets") {
  auto fr = flow(kT2, GroundSet::range(3), pts({100}), pts({0}), 3);
  for (unsigned j = 0; j <= 3; ++j) {
    CHECK(fr.e[j] == pts({100}));
    CHECK(fr.f[j] == pts({0}));
  }
  auto zero = flow(kT2, GroundSet::range(3), pts({1}), pts({0}), 0);
  CHECK(zero.e.size() == 1);
  CHECK_THROWS_AS(flow(kT2, GroundSet::range(3), PointSet(), pts({0}), 1), Error);
}

TEST_CASE("flowing inequalities on random draws") {
  testing::Gen gen(31);
  for (int k = 0; k < 40; ++k) {
    const auto sys = testing::battery()[k % 6];
    auto g = gen.subset(12);
    auto [e, f] = draw_sets(gen, sys, g);
    auto fr = flow(sys, g, e, f, static_cast<unsigned>(gen.range(1, 4)));
    CHECK(fr.ok());
  }
}

TEST_CASE("s = 1 tower by direct construction") {
  auto g = GroundSet::range(3);
  auto box = interval(0, 9);
  auto tower = build_tower(kT2, g, box, box, 1);
  REQUIRE(tower.levels.size() == 1);
  const auto& lv = tower.levels[0];
  // B_1 = {n : y - n^2 in F_0}, A_1 = {(m; n) : y - n^2 + m^2 in E_0}
  const auto y = tower.anchor[0];
  std::size_t b = 0, a = 0, a_generic = 0;
  for (std::int64_t n = 1; n <= 3; ++n) {
    if (!box.count({y - n * n})) continue;
    ++b;
    for (std::int64_t m = 1; m <= 3; ++m) {
      if (box.count({y - n * n + m * m})) {
        ++a;
        a_generic += m != n;
      }
    }
  }
  CHECK(lv.b.size() == b);
  CHECK(lv.a.size() == a);
  CHECK(lv.a_generic == a_generic);
  CHECK(lv.b_special == 0);
  CHECK(all_hold(tower.size_checks));
  CHECK(static_cast<long>(lv.b.size()) * 2 >= tower.flow.base.beta);
}

TEST_CASE("special pairs follow equal polynomial values") {
  auto folded = SeparatedSystem::validate({{BigInt(0), BigInt(-4), BigInt(1)}});
  auto g = GroundSet({1, 3});
  auto e = pts({-6, -3, 0});
  auto f = pts({0, 3});
  auto tower = build_tower(folded, g, e, f, 1, {1'000'000, Point{0}});
  for (const auto& a : tower.levels[0].a) CHECK_FALSE(a.generic);  // phi(1) == phi(3)

  auto t2 = build_tower(kT2, GroundSet::range(2), interval(0, 8), interval(0, 8), 1);
  for (const auto& a : t2.levels[0].a) CHECK(a.generic == (a.m[0] != a.n[0]));
}

TEST_CASE("tower errors") {
  CHECK_THROWS_AS(build_tower(kT, GroundSet::range(3), pts({1}), pts({0}), 1), Error);
  // zero pairing: nothing flows away, and B_1 is empty
  auto idle = build_tower(kT2, GroundSet::range(3), pts({100}), pts({0}), 1);
  CHECK(idle.anchor == Point{100});
  CHECK(idle.levels[0].b.empty());
}

TEST_CASE("pruning bounds on random towers") {
  testing::Gen gen(41);
  int built = 0;
  for (int k = 0; k < 50; ++k) {
    const auto sys = testing::battery()[k % 6];
    auto g = gen.subset(7);
    auto [e, f] = draw_sets(gen, sys, g);
    const unsigned s = static_cast<unsigned>(gen.range(1, 2));
    try {
      auto tower = build_tower(sys, g, e, f, s);
      CHECK(all_hold(verify_pruning_bounds(tower, sys)));
      CHECK(all_hold(union_bound_checks(tower, sys, g)));
      if (s == 1) CHECK(tower.levels[0].b_special == 0);
      ++built;
    } catch (const Error& err) {
      CHECK(err.code() == Errc::kEmptyAnchor);
    }
  }
  CHECK(built > 30);
}

TEST_CASE("anchor choice does not change verdicts") {
  testing::Gen gen(43);
  for (int k = 0; k < 8; ++k) {
    const auto sys = testing::battery()[k % 3];
    auto g = gen.subset(5);
    auto [e, f] = draw_sets(gen, sys, g);
    try {
      auto inv = anchor_invariance(sys, g, e, f, 1);
      CHECK(inv.invariant);
      CHECK(inv.anchors >= 1);
    } catch (const Error& err) {
      CHECK(err.code() == Errc::kEmptyAnchor);
    }
  }
}

TEST_CASE("threshold constant and generic lower bound") {
  CHECK(threshold_constant(kT2, 1) == 16);
  CHECK(threshold_constant(SeparatedSystem::moment(2), 2) == 48);
  auto g = GroundSet::range(20);
  auto tower = build_tower(kT2, g, interval(0, 2400), interval(0, 2000), 1);
  auto lower = generic_lower_bound(tower, kT2);
  CHECK(lower.applicable);
  CHECK(lower.holds);
}

TEST_CASE("certificates") {
  auto small = refinement_certificate(kT2, GroundSet::range(50), pts({0}), pts({0}), 1);
  CHECK(small.branch == "small_alpha");
  CHECK(small.lhs == 0);

  auto m2 = SeparatedSystem::moment(2);
  auto g = GroundSet::range(20);
  auto w = extremal_witnesses(m2, g, "curve");
  auto cert = refinement_certificate(m2, g, *w.e, *w.f, 2);
  CHECK(cert.constant <= 1024);
  CHECK(all_hold(cert.checks));

  auto single = refinement_certificate(kT2, GroundSet({1}), pts({1}), pts({0}), 1);
  CHECK(single.constant <= 3);
  CHECK(all_hold(single.checks));
}

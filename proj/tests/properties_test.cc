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

// Seeded property tests across modules.

#include <set>

#include "doctest.h"
#include "paucity/averaging.hpp"
#include "paucity/counting.hpp"
#include "paucity/polynomial.hpp"
#include "test_support.hpp"

using namespace paucity;
using testing::Gen;

namespace {

Polynomial random_poly(Gen& gen, const std::vector<std::string>& vars) {
  Polynomial p;
  for (int t = 0, n = static_cast<int>(gen.range(1, 5)); t < n; ++t) {
    std::vector<std::pair<std::string, unsigned>> powers;
    for (const auto& v : vars) powers.emplace_back(v, static_cast<unsigned>(gen.range(0, 3)));
    p += Polynomial::monomial(BigInt(static_cast<long>(gen.range(-9, 9))), powers);
  }
  return p;
}

LatticeFunction random_function(Gen& gen, std::size_t dim) {
  LatticeFunction f;
  for (int i = 0, n = static_cast<int>(gen.range(1, 5)); i < n; ++i) {
    Point p(dim);
    for (auto& c : p) c = gen.range(-3, 3);
    Rational v(static_cast<long>(gen.range(-5, 5)), static_cast<unsigned long>(gen.range(1, 4)));
    v.canonicalize();
    f.add(p, v);
  }
  return f;
}

}  // namespace

TEST_CASE("polynomial evaluation is a ring homomorphism") {
  Gen gen(101);
  const std::vector<std::string> vars{"A", "B", "C"};
  for (int k = 0; k < 100; ++k) {
    auto p = random_poly(gen, vars), q = random_poly(gen, vars);
    std::map<std::string, BigInt> pt;
    for (const auto& v : vars) pt[v] = BigInt(static_cast<long>(gen.range(-6, 6)));
    CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
    CHECK((p - q).evaluate(pt) == p.evaluate(pt) - q.evaluate(pt));
    if (!q.is_zero()) CHECK(exact_divide(p * q, q) == p);
  }
}

TEST_CASE("swapping sides negates the target") {
  Gen gen(102);
  for (const auto& sys : testing::battery()) {
    for (int k = 0; k < 5; ++k) {
      auto g = gen.subset(sys.r() == 3 ? 6 : 10);
      const unsigned s = static_cast<unsigned>(gen.range(1, 2));
      std::vector<BigInt> a(sys.r()), neg(sys.r());
      for (std::size_t j = 0; j < sys.r(); ++j) {
        a[j] = BigInt(static_cast<long>(gen.range(-30, 30)));
        neg[j] = -a[j];
      }
      CHECK(brute_count({sys, g, s, a}).count == brute_count({sys, g, s, neg}).count);
    }
  }
}

TEST_CASE("constant terms do not change counts") {
  Gen gen(103);
  for (int k = 0; k < 20; ++k) {
    auto base = testing::battery()[2 + k % 4];
    auto polys = base.polys();
    for (auto& p : polys) p[0] += BigInt(static_cast<long>(gen.range(-50, 50)));
    auto moved = SeparatedSystem::validate(polys);
    auto g = gen.subset(9);
    std::vector<BigInt> a(base.r());
    for (auto& x : a) x = BigInt(static_cast<long>(gen.range(-10, 10)));
    CHECK(brute_count({base, g, 2, a}).count == brute_count({moved, g, 2, a}).count);
  }
}

TEST_CASE("diagonal solutions dominate |X|^s") {
  Gen gen(104);
  for (const auto& sys : testing::battery()) {
    auto g = gen.subset(8);
    for (unsigned s = 1; s <= 2; ++s) {
      std::uint64_t floor = 1;
      for (unsigned i = 0; i < s; ++i) floor *= g.size();
      CHECK(diagonal_count(sys, g, s) >= floor);
    }
  }
}

TEST_CASE("case partition is exhaustive") {
  Gen gen(105);
  for (int k = 0; k < 30; ++k) {
    const auto sys = testing::battery()[2 + k % 3];
    auto kit = EliminationKit::build(sys);
    auto g = gen.subset(10);
    SystemInstance inst{sys, g, 2, {BigInt(static_cast<long>(gen.range(-8, 8))), BigInt(static_cast<long>(gen.range(-200, 200)))}};
    auto part = case_partition(inst, kit);
    const auto& p = *part.partition;
    CHECK(p[0] + p[1] + p[2] == part.count);
    CHECK(part.count == brute_count(inst).count);
  }
}

TEST_CASE("averaging operators are adjoint and linear") {
  Gen gen(106);
  for (int k = 0; k < 60; ++k) {
    const auto sys = testing::battery()[k % 6];
    auto g = gen.subset(6);
    auto f = random_function(gen, sys.r()), h = random_function(gen, sys.r());
    auto sf = apply_S(sys, g, f);
    CHECK(inner(sf, h) == inner(f, apply_S_star(sys, g, h)));
    LatticeFunction sum = f;
    for (const auto& [p, v] : h.values()) sum.add(p, v);
    LatticeFunction expect = sf;
    const auto sh = apply_S(sys, g, h);
    for (const auto& [p, v] : sh.values()) expect.add(p, v);
    CHECK(apply_S(sys, g, sum) == expect);
    CHECK(apply_S_star(sys, g, f) == convolve(curve_measure_mu(sys, g), f));
  }
}

TEST_CASE("divisor tuples multiply back") {
  Gen gen(107);
  for (int k = 0; k < 40; ++k) {
    BigInt m(static_cast<long>(gen.range(-400, 400)));
    if (m == 0) continue;
    const unsigned s = static_cast<unsigned>(gen.range(1, 3));
    std::set<std::vector<BigInt>> seen;
    for (const auto& t : divisor_tuples(m, s)) {
      BigInt prod = 1;
      for (const auto& x : t) prod *= x;
      CHECK(prod == m);
      CHECK(seen.insert(t).second);
    }
  }
}

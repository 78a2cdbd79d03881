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
#include <map>
#include <set>

#include "doctest.h"
#include "paucity/counting.hpp"
#include "paucity/error.hpp"
#include "test_support.hpp"

using namespace paucity;
using testing::naive_count;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.push_back(BigInt(x));
  return out;
}

const SeparatedSystem kMoment2 = SeparatedSystem::moment(2);

}  // namespace

TEST_CASE("brute force anchors") {
  auto t2 = SeparatedSystem::monomials({2});
  CountOptions collect;
  collect.collect = true;
  auto one = brute_count({t2, GroundSet::range(10), 1, ints({3})}, collect);
  CHECK(one.count == 1);
  REQUIRE(one.witnesses.has_value());
  CHECK((*one.witnesses)[0] == SolutionPair{{1}, {2}});
  CHECK(brute_count({kMoment2, GroundSet::range(4), 2, ints({1, 3})}).count == 12);
  auto four = brute_count({kMoment2, GroundSet::range(4), 2, ints({0, -4})}, collect);
  CHECK(four.count == 4);
  for (const auto& w : *four.witnesses) {
    CHECK(std::set<std::int64_t>(w.m.begin(), w.m.end()) == std::set<std::int64_t>{1, 4});
    CHECK(std::set<std::int64_t>(w.n.begin(), w.n.end()) == std::set<std::int64_t>{2, 3});
  }
}

TEST_CASE("case partition anchors") {
  auto kit = EliminationKit::build(kMoment2);
  auto p1 = case_partition({kMoment2, GroundSet::range(4), 2, ints({0, -4})}, kit);
  CHECK(*p1.partition == std::array<std::uint64_t, 3>{0, 0, 4});
  auto p2 = case_partition({kMoment2, GroundSet::range(4), 2, ints({1, 3})}, kit);
  CHECK(*p2.partition == std::array<std::uint64_t, 3>{12, 0, 0});
  auto p3 = case_partition({kMoment2, GroundSet::range(4), 2, ints({0, 100})}, kit);
  CHECK(*p3.partition == std::array<std::uint64_t, 3>{0, 0, 0});
}

TEST_CASE("base case 1") {
  auto t2 = SeparatedSystem::monomials({2}).poly(0);
  auto t3 = SeparatedSystem::monomials({3}).poly(0);
  CHECK(guided_count_base1(t2, GroundSet::range(10), BigInt(3)).count == 1);
  CHECK(guided_count_base1(t2, GroundSet::range(10), BigInt(1)).count == 0);
  CHECK(guided_count_base1(t3, GroundSet::range(20), BigInt(7)).count == 1);
  CHECK_THROWS_AS(guided_count_base1(t2, GroundSet::range(10), BigInt(0)), Error);
}

TEST_CASE("base case 2") {
  CHECK(guided_count_base2(kMoment2, GroundSet::range(4), ints({1, 3})).count == 12);
  CHECK(guided_count_base2(kMoment2, GroundSet::range(4), ints({0, -4})).count == 4);
  auto two_t = SeparatedSystem::validate({ints({0, 2}), ints({0, 0, 1})});
  auto none = guided_count_base2(two_t, GroundSet::range(10), ints({1, 5}));
  CHECK(none.count == 0);
  CHECK(none.note == "NoIntegralSolutions");
}

TEST_CASE("case 3") {
  auto kit = EliminationKit::build(kMoment2);
  CHECK(guided_count_case3({kMoment2, GroundSet::range(4), 2, ints({0, -4})}, kit).count == 4);
  CHECK(guided_count_case3({kMoment2, GroundSet::range(4), 2, ints({1, 3})}, kit).count == 0);
  testing::Gen gen(12);
  for (int k = 0; k < 20; ++k) {
    SystemInstance inst{kMoment2, GroundSet::range(12), 2,
                        ints({static_cast<long>(gen.range(-20, 20)), static_cast<long>(gen.range(-20, 20))})};
    if (inst.a[0] == 0 && inst.a[1] == 0) inst.a[1] = 1;
    CHECK(guided_count_case3(inst, kit).count == (*case_partition(inst, kit).partition)[2]);
  }
}

TEST_CASE("maxnumreps") {
  auto t2 = SeparatedSystem::monomials({2});
  CHECK(maxnumreps(t2, GroundSet::range(5), 1).count == 1);
  auto lin = maxnumreps(SeparatedSystem::monomials({1}), GroundSet::range(5), 1);
  CHECK(lin.count == 4);
  CHECK(*lin.argmax == ints({-1}));
  auto single = maxnumreps(t2, GroundSet({1}), 1);
  CHECK(single.count == 0);
  CHECK_FALSE(single.argmax.has_value());
}

TEST_CASE("maxnumreps is the largest count over explicit targets") {
  for (const auto& sys : {kMoment2, SeparatedSystem::monomials({2})}) {
    for (std::int64_t n : {6, 9}) {
      auto g = GroundSet::range(n);
      const unsigned s = static_cast<unsigned>(sys.r());
      // Every target with nonzero coordinates is some realized difference.
      std::map<std::vector<BigInt>, std::uint64_t> seen;
      SumMultiset sums(sys, g, s, 1'000'000);
      for (const auto& [u, cu] : sums.entries()) {
        for (const auto& [v, cv] : sums.entries()) {
          std::vector<BigInt> a(sys.r());
          bool nonzero = true;
          for (std::size_t j = 0; j < sys.r(); ++j) {
            a[j] = u[j] - v[j];
            nonzero = nonzero && a[j] != 0;
          }
          if (nonzero) seen[a] += cu * cv;
        }
      }
      std::uint64_t best = 0;
      for (const auto& [a, c] : seen) best = std::max(best, c);
      CHECK(maxnumreps(sys, g, s).count == best);
    }
  }
}

TEST_CASE("diagonal counts") {
  CHECK(diagonal_count(SeparatedSystem::monomials({2}), GroundSet::range(5), 1) == 5);
  auto shifted = SeparatedSystem::validate({ints({0, -4, 1})});
  CHECK(diagonal_count(shifted, GroundSet({1, 3}), 1) == 4);
  CHECK(diagonal_count(kMoment2, GroundSet::range(3), 2) == 15);
}

TEST_CASE("divisor tuples") {
  CHECK(divisor_tuples(BigInt(12), 2).size() == 12);
  CHECK(divisor_tuples(BigInt(1), 1) == std::vector<std::vector<BigInt>>{ints({1})});
  CHECK(divisor_tuples(BigInt(-1), 2).size() == 2);
  for (const auto& t : divisor_tuples(BigInt(-30), 3)) CHECK(t[0] * t[1] * t[2] == -30);
}

TEST_CASE("L function") {
  CHECK(L_function(1, std::exp(std::exp(1.0))) == doctest::Approx(15.1543).epsilon(1e-4));
  CHECK(L_function(0, 100) == doctest::Approx(1.0));
  CHECK(L_function(2, 1e6) == doctest::Approx(3.73e4).epsilon(1e-2));
  CHECK_THROWS_AS(L_function(1, 2.0), Error);
}

TEST_CASE("counts agree with a naive tuple walk") {
  testing::Gen gen(21);
  for (const auto& sys : testing::battery()) {
    for (int k = 0; k < 6; ++k) {
      const unsigned s = static_cast<unsigned>(gen.range(1, 2));
      auto g = gen.subset(sys.r() == 3 ? 5 : 8);
      std::vector<BigInt> a(sys.r());
      for (std::size_t j = 0; j < sys.r(); ++j) {
        auto m = g.elements()[gen.engine()() % g.size()];
        auto n = g.elements()[gen.engine()() % g.size()];
        a[j] = sys.value(j, BigInt(static_cast<long>(n))) - sys.value(j, BigInt(static_cast<long>(m)));
      }
      CHECK(brute_count({sys, g, s, a}).count == naive_count(sys, g, s, a));
    }
  }
}

TEST_CASE("thread count does not change results") {
  SystemInstance inst{SeparatedSystem::moment(3), GroundSet::range(9), 3, ints({1, 5, 19})};
  CountOptions one, four;
  four.threads = 4;
  CHECK(brute_count(inst, one).count == brute_count(inst, four).count);
  SumMultiset sums(inst.system, inst.ground, 3, 1'000'000);
  CHECK(sums.count(inst.a, 1) == sums.count(inst.a, 4));
}

TEST_CASE("budget breaker") {
  CountOptions tight;
  tight.budget = 10;
  CHECK_THROWS_AS(brute_count({kMoment2, GroundSet::range(40), 2, ints({1, 1})}, tight), Error);
}

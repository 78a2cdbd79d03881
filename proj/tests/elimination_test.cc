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
#include "paucity/elimination.hpp"
#include "paucity/error.hpp"
#include "test_support.hpp"

using namespace paucity;

namespace {

Polynomial var(const std::string& n) { return Polynomial::variable(n); }
Polynomial X(std::size_t i) { return var(x_var(i)); }
Polynomial T(std::size_t i) { return var(t_var(i)); }

// Q(x_1, ..., x_s) evaluated at the power sums of explicit integer points.
BigInt q_at_points(const Polynomial& q, const SeparatedSystem& sys, const std::vector<long>& xs) {
  std::map<std::string, BigInt> pt;
  for (std::size_t i = 0; i < sys.r(); ++i) {
    BigInt sum = 0;
    for (long x : xs) sum += sys.value(i, BigInt(x));
    pt[t_var(i + 1)] = sum;
  }
  return q.evaluate(pt);
}

}  // namespace

TEST_CASE("Vandermonde") {
  CHECK(vandermonde(1) == Polynomial(1L));
  CHECK(vandermonde(2) == X(2) - X(1));
  CHECK(vandermonde(3) == (X(2) - X(1)) * (X(3) - X(1)) * (X(3) - X(2)));
}

TEST_CASE("Jacobian cofactor") {
  CHECK(jacobian_cofactor(SeparatedSystem::moment(3)) == Polynomial(6L));
  CHECK(jacobian_cofactor(SeparatedSystem::moment(2)) == Polynomial(2L));
  CHECK(jacobian_cofactor(SeparatedSystem::monomials({2, 3})) == 6L * X(1) * X(2));
}

TEST_CASE("eliminants") {
  CHECK(eliminant(SeparatedSystem::moment(2)) == T(1) * T(1) - T(2));
  CHECK(eliminant(SeparatedSystem::moment(3)) == T(1).pow(3) - 3L * T(1) * T(2) + 2L * T(3));
  CHECK(eliminant(SeparatedSystem::monomials({2, 3})) == T(1).pow(3) - T(2).pow(2));
  CHECK(eliminant(SeparatedSystem::monomials({2})) == T(1));
  for (const auto& sys : testing::battery()) {
    auto q = eliminant(sys);
    CHECK(check_eliminant(q, sys).ok());
    if (sys.r() <= 3) CHECK(eliminant(sys, EliminantStrategy::kResultant) == q);
  }
  CHECK_THROWS_AS(eliminant(SeparatedSystem::monomials({2, 3}), EliminantStrategy::kNewton), Error);
}

TEST_CASE("eliminant vanishes on r-1 points and not on r") {
  testing::Gen gen(3);
  for (const auto& sys : testing::battery()) {
    auto q = eliminant(sys);
    const std::size_t r = sys.r();
    for (int k = 0; k < 20; ++k) {
      std::vector<long> xs;
      for (std::size_t i = 0; i + 1 < r; ++i) xs.push_back(static_cast<long>(gen.range(-30, 30)));
      CHECK(q_at_points(q, sys, xs) == 0);
    }
    bool nonzero = false;
    for (int k = 0; k < 20 && !nonzero; ++k) {
      std::vector<long> xs;
      for (std::size_t i = 0; i < r; ++i) xs.push_back(static_cast<long>(gen.range(-30, 30)));
      nonzero = q_at_points(q, sys, xs) != 0;
    }
    CHECK(nonzero);
  }
}

TEST_CASE("quotient R") {
  CHECK(quotient_R(SeparatedSystem::moment(2), eliminant(SeparatedSystem::moment(2))) == Polynomial(2L));
  CHECK(quotient_R(SeparatedSystem::monomials({2}), eliminant(SeparatedSystem::monomials({2}))) ==
        X(1) + var(kYVar));
  for (const auto& sys : testing::battery()) {
    auto q = eliminant(sys);
    auto rq = quotient_R(sys, q);
    Polynomial prod(1L);
    for (std::size_t i = 1; i <= sys.r(); ++i) prod *= X(i) - var(kYVar);
    CHECK(shifted_eliminant(sys, q) == rq * prod);
  }
  auto c23 = SeparatedSystem::monomials({2, 3});
  auto r23 = quotient_R(c23, eliminant(c23));
  CHECK(r23.total_degree() == 4);
  CHECK(r23.used_variables().size() == 3);
}

TEST_CASE("power sums") {
  CHECK(power_sum_sigma(SeparatedSystem::moment(1), 1, 3) == X(1) + X(2) + X(3));
  CHECK(power_sum_sigma(SeparatedSystem::monomials({2}), 1, 2) == X(1) * X(1) + X(2) * X(2));
  auto sys = SeparatedSystem::validate({{BigInt(0), BigInt(-4), BigInt(1)}});
  CHECK(power_sum_sigma(sys, 1, 1) == X(1) * X(1) - 4L * X(1));
}

TEST_CASE("definiteness probe") {
  CHECK_FALSE(definiteness_probe(Polynomial(6L), 1, 1000, 1).witness_found);
  CHECK_FALSE(definiteness_probe(6L * X(1) * X(2), 1, 1000, 1).witness_found);
  auto diff = definiteness_probe(X(1) - X(2), 1, 1000, 1);
  REQUIRE(diff.witness_found);
  CHECK(diff.witness[0] == diff.witness[1]);
}

TEST_CASE("elimination kit") {
  auto kit = EliminationKit::build(SeparatedSystem::moment(2));
  REQUIRE(kit.q.has_value());
  CHECK(kit.case_polynomial() == *kit.q);
  CHECK(kit.cofactor_in_t == Polynomial(2L));
  auto kp = EliminationKit::build(SeparatedSystem::monomials({2, 3}), EliminantStrategy::kAuto, true);
  CHECK(kp.case_polynomial() == kp.cofactor_in_t);
}

TEST_CASE("term budget trips") {
  std::vector<std::vector<Polynomial>> m(4, std::vector<Polynomial>(4));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = var("A" + std::to_string(i) + std::to_string(j));
  }
  CHECK_THROWS_AS(determinant(m, 10), Error);
  CHECK(determinant(m).term_count() == 24);
}

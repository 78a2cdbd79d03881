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
#include "paucity/polynomial.hpp"
#include "test_support.hpp"

using namespace paucity;

namespace {

const Polynomial X = Polynomial::variable("X");
const Polynomial Y = Polynomial::variable("Y");
const Polynomial Z = Polynomial::variable("Z");

Polynomial uni(const UniPoly& p, const std::string& var) { return Polynomial::univariate(p, var); }

UniPoly up(std::initializer_list<long> c) {
  UniPoly p;
  for (long x : c) p.push_back(BigInt(x));
  return p;
}

}  // namespace

TEST_CASE("ring operations") {
  CHECK((X + Y) * (X - Y) == X * X - Y * Y);
  CHECK((X + Y) + Polynomial(0L) == X + Y);
  CHECK(((X + 1L).pow(2) - (X * X + 2L * X + 1L)).is_zero());
  CHECK((X * X * Y - Z).to_string() == "1*X^2*Y + -1*Z");
  CHECK((X * X).total_degree() == 2);
  CHECK(Polynomial().total_degree() == -1);
}

TEST_CASE("substitution and evaluation") {
  CHECK((X * X - Y * Y).substitute({{"Y", X}}).is_zero());
  auto phi = uni(up({0, 0, 1}), "T");
  CHECK(phi.substitute({{"T", X + Y - Z}}) ==
        X * X + Y * Y + Z * Z + 2L * X * Y - 2L * X * Z - 2L * Y * Z);
  CHECK((X + Y).evaluate({{"X", BigInt(3)}, {"Y", BigInt(4)}}) == 7);
}

TEST_CASE("exact division") {
  CHECK(exact_divide(X * X - Y * Y, X - Y) == X + Y);
  CHECK(exact_divide(X.pow(3) - Y.pow(3), X - Y) == X * X + X * Y + Y * Y);
  CHECK_THROWS_AS(exact_divide(X * X + 1L, X - Y), Error);
  CHECK_FALSE(try_exact_divide(X * X + 1L, X - Y).has_value());
  CHECK_THROWS_AS(exact_divide(X, Polynomial()), Error);
}

TEST_CASE("perfect roots") {
  auto p = (X * Y - 3L * Z + 2L).pow(3);
  auto root = perfect_root(p, 3);
  REQUIRE(root.has_value());
  CHECK(root->pow(3) == p);
  CHECK_FALSE(perfect_root(X * X + 1L, 2).has_value());
}

TEST_CASE("differencing polynomials") {
  CHECK(first_difference_chi(up({0, 0, 0, 1})) == X * X + X * Y + Y * Y);
  CHECK(first_difference_chi(up({0, 1})) == Polynomial(1L));
  CHECK(first_difference_chi(up({0, -4, 1})) == X + Y - 4L);
  CHECK(shift_polynomial_rho(up({0, 0, 1})) == 2L * X * Y + Y * Y);
  CHECK(shift_polynomial_rho(up({0, 1})) == Y);
  CHECK(shift_polynomial_rho(up({0, 0, 0, 1})) == 3L * X * X * Y + 3L * X * Y * Y + Y.pow(3));
  CHECK(second_difference_psi(up({0, 0, 1})) == Polynomial(2L));
  CHECK(second_difference_psi(up({0, 0, 0, 1})) == 3L * X + 3L * Y);
  CHECK_THROWS_AS(second_difference_psi(up({0, 1})), Error);
}

TEST_CASE("integer roots") {
  CHECK(integer_roots(up({6, -5, 1})) == std::vector<BigInt>{2, 3});
  CHECK(integer_roots(up({1, 0, 1})).empty());
  CHECK(integer_roots(up({-3, 2})).empty());
  CHECK(integer_roots(up({0, 0, 1})) == std::vector<BigInt>{0});
  std::vector<std::int64_t> xs{-3, -1, 0, 2, 3, 7};
  CHECK(integer_roots_among(up({6, -5, 1}), xs) == std::vector<std::int64_t>{2, 3});
}

TEST_CASE("random difference identities hold exactly") {
  testing::Gen gen(77);
  for (int k = 0; k < 30; ++k) {
    auto phi = gen.poly(static_cast<unsigned>(gen.range(1, 8)), 12);
    auto fx = uni(phi, "X"), fy = uni(phi, "Y"), fz = uni(phi, "Z");
    CHECK((X - Y) * first_difference_chi(phi) == fx - fy);
    CHECK(fx + shift_polynomial_rho(phi) == fx.substitute({{"X", X + Y}}));
    if (phi.size() >= 3) {
      CHECK((X - Z) * (Y - Z) * second_difference_psi(phi) ==
            fx.substitute({{"X", X + Y - Z}}) + fz - fx - fy);
    }
  }
}

TEST_CASE("integer roots match a direct scan") {
  testing::Gen gen(78);
  for (int k = 0; k < 40; ++k) {
    // Product of linear factors with known roots, times a root-free factor.
    UniPoly p{BigInt(1)};
    std::vector<BigInt> expect;
    for (int i = 0, n = static_cast<int>(gen.range(1, 4)); i < n; ++i) {
      auto root = gen.range(-20, 20);
      UniPoly q(p.size() + 1, BigInt(0));
      for (std::size_t j = 0; j < p.size(); ++j) {
        q[j + 1] += p[j];
        q[j] -= p[j] * root;
      }
      p = q;
      expect.push_back(BigInt(static_cast<long>(root)));
    }
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    CHECK(integer_roots(p) == expect);
  }
}

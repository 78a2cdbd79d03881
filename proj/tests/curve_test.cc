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

#include "doctest.h"
#include "paucity/curve.hpp"
#include "paucity/error.hpp"
#include "test_support.hpp"

using namespace paucity;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.push_back(BigInt(x));
  return out;
}

Exponent ex(long num, long den = 1) { return Exponent{Rational(num, den), false}; }

}  // namespace

TEST_CASE("degree data") {
  auto m3 = SeparatedSystem::moment(3);
  CHECK(m3.r() == 3);
  CHECK(m3.total_degree() == 6);
  CHECK(m3.degree_product() == 6);
  auto c23 = SeparatedSystem::monomials({2, 3});
  CHECK(c23.total_degree() == 5);
  CHECK(c23.degree_product() == 6);
  CHECK(c23.jacobian_cofactor_degree() == 2);
  CHECK(c23.describe() == "(T^2, T^3)");
  CHECK(SeparatedSystem::monomials({1}).is_single_linear());
}

TEST_CASE("validation errors") {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::kIo;
  };
  CHECK(code([] { SeparatedSystem::validate({ints({0, 0, 1}), ints({1, 0, 1})}); }) == Errc::kDegreeNotSeparated);
  CHECK(code([] { SeparatedSystem::validate({ints({0})}); }) == Errc::kZeroPolynomial);
  CHECK(code([] { SeparatedSystem::validate({ints({5})}); }) == Errc::kConstantPolynomial);
}

TEST_CASE("curve evaluation") {
  CHECK(evaluate_curve(SeparatedSystem::moment(3), BigInt(2)) == ints({2, 4, 8}));
  CHECK(evaluate_curve(SeparatedSystem::monomials({2, 3}), BigInt(-1)) == ints({1, -1}));
  CHECK(evaluate_curve(SeparatedSystem::monomials({2, 3}), BigInt(0)) == ints({0, 0}));
}

TEST_CASE("curve specs round-trip") {
  auto sys = parse_curve_spec("{\"polys\": [[0, 1], [0, -4, 1]]}");
  CHECK(sys.describe() == "(T, T^2 + -4*T)");
  CHECK(parse_curve_json(sys.to_json()) == sys);
  CHECK(parse_curve_spec("moment:3") == SeparatedSystem::moment(3));
  CHECK(parse_curve_spec("powers:2,3") == SeparatedSystem::monomials({2, 3}));
  CHECK_THROWS_AS(parse_curve_spec("powers:3,2"), Error);
}

TEST_CASE("ground sets") {
  CHECK(parse_ground_set("range:5").size() == 5);
  CHECK(parse_ground_set("list:4,1,4,2").elements() == std::vector<std::int64_t>{1, 2, 4});
  CHECK_THROWS_AS(parse_ground_set("list:0,1"), Error);
  auto r1 = parse_ground_set("random:50,0.5,7");
  auto r2 = parse_ground_set("random:50,1/2,7");
  CHECK(r1 == r2);
  CHECK(r1.bound() == 50);
  CHECK(parse_ground_set("random:50,1,3").size() == 50);
  CHECK(GroundSet::range(10).truncated(4).size() == 4);
  const char* path = "curve_test_ground.txt";
  {
    std::ofstream out(path);
    out << "# comment\n3\n 9 \n1\n";
  }
  CHECK(parse_ground_set(std::string("file:") + path).elements() == std::vector<std::int64_t>{1, 3, 9});
  std::remove(path);
}

TEST_CASE("critical exponent") {
  CHECK(critical_exponent(SeparatedSystem::moment(3)) == Rational(11, 6));
  CHECK(critical_exponent(SeparatedSystem::monomials({1})) == Rational(1));
  CHECK(critical_exponent(SeparatedSystem::moment(2)) == Rational(5, 3));
}

TEST_CASE("exponents") {
  CHECK(parse_exponent("inf").infinite);
  CHECK(parse_exponent("3/2").conjugate().value == 3);
  CHECK(ex(2).conjugate().value == 2);
  CHECK(ex(1).conjugate().infinite);
  CHECK(Exponent::inf().reciprocal() == 0);
}

TEST_CASE("conjectured right-hand side") {
  // three summands evaluated by hand
  CHECK(conjecture_rhs(4, 3, ex(3, 2), ex(3)) == doctest::Approx(0.25 + 2 * std::pow(4.0, -2.0 / 3.0)));
  CHECK(conjecture_rhs(4, 3, ex(3, 2), ex(3)) == doctest::Approx(1.0437).epsilon(1e-4));
  CHECK(conjecture_rhs(1, 5, ex(7, 4), ex(7, 3)) == doctest::Approx(3.0));
  CHECK(conjecture_rhs(16, 1, ex(2), ex(2)) == doctest::Approx(1.5));
  CHECK_THROWS_AS(conjecture_rhs(4, 2, ex(5, 2), ex(3)), Error);
  CHECK_THROWS_AS(conjecture_rhs(4, 2, ex(3, 2), ex(3, 2)), Error);
}

TEST_CASE("refinement right-hand side") {
  CHECK(refinement_rhs(10, 2, BigInt(1)) == doctest::Approx(0.1 * std::cbrt(20.0)));
  CHECK(refinement_rhs(10, 2, BigInt(1)) == doctest::Approx(0.27144).epsilon(1e-4));
  CHECK(refinement_rhs(1, 1, BigInt(0)) == doctest::Approx(1.0));
  CHECK(refinement_rhs(100, 3, BigInt(0)) == doctest::Approx(0.06310).epsilon(1e-3));
}

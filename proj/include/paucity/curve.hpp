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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "paucity/numeric.hpp"
#include "paucity/polynomial.hpp"

namespace paucity {

/// A curve gamma = (phi_1, ..., phi_r) of integer polynomials with strictly
/// increasing degrees 1 <= k_1 < ... < k_r.
class SeparatedSystem {
 public:
  /// Throws ZeroPolynomial, ConstantPolynomial or DegreeNotSeparated.
  static SeparatedSystem validate(std::vector<UniPoly> polys);

  /// The moment curve (T, T^2, ..., T^r).
  static SeparatedSystem moment(unsigned r);
  /// (T^k_1, ..., T^k_r).
  static SeparatedSystem monomials(const std::vector<unsigned>& exponents);

  std::size_t r() const { return polys_.size(); }
  const std::vector<UniPoly>& polys() const { return polys_; }
  const UniPoly& poly(std::size_t i) const { return polys_[i]; }
  const std::vector<unsigned>& degrees() const { return degrees_; }
  /// D_gamma = k_1 + ... + k_r.
  unsigned total_degree() const { return total_degree_; }
  /// K_gamma = k_1 * ... * k_r.
  std::uint64_t degree_product() const { return degree_product_; }
  /// Sum of (k_i - i); the degree of the Jacobian cofactor.
  unsigned jacobian_cofactor_degree() const;
  bool is_single_linear() const { return r() == 1 && degrees_[0] == 1; }
  /// True when every phi_i is a bare power T^k_i.
  bool is_monomial() const;

  BigInt value(std::size_t i, const BigInt& n) const { return eval_uni(polys_[i], n); }
  /// Largest |phi_i(n)| over the given points.
  BigInt max_abs_value(std::size_t i, const std::vector<std::int64_t>& points) const;

  /// Human-readable form such as "(T, T^2 + -4*T)".
  std::string describe() const;
  /// {"polys": [[c0, c1, ...], ...]}.
  std::string to_json() const;

  friend bool operator==(const SeparatedSystem&, const SeparatedSystem&) = default;

 private:
  std::vector<UniPoly> polys_;
  std::vector<unsigned> degrees_;
  unsigned total_degree_ = 0;
  std::uint64_t degree_product_ = 1;
};

/// (phi_1(n), ..., phi_r(n)) in exact arithmetic.
std::vector<BigInt> evaluate_curve(const SeparatedSystem& sys, const BigInt& n);

/// Parses a curve JSON document {"polys": [[...], ...]}. Coefficients may be
/// JSON integers or decimal strings.
SeparatedSystem parse_curve_json(const std::string& text);
/// Accepts inline JSON, a path to a JSON file, "moment:R", or "powers:k1,k2,...".
SeparatedSystem parse_curve_spec(const std::string& spec);

/// Sorted distinct positive integers inside [1, bound].
class GroundSet {
 public:
  GroundSet() = default;
  /// Sorts, dedupes, and checks 1 <= x <= bound. bound 0 means max element.
  GroundSet(std::vector<std::int64_t> elements, std::int64_t bound = 0);
  static GroundSet range(std::int64_t n);

  const std::vector<std::int64_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  std::int64_t bound() const { return bound_; }
  bool contains(std::int64_t x) const;
  /// Elements not exceeding cap (the set intersected with [1, cap]).
  GroundSet truncated(std::int64_t cap) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::int64_t> elements_;
  std::int64_t bound_ = 0;
};

/// "range:N", "file:PATH" (one integer per line), "random:N,density,seed",
/// or "list:x1,x2,...".
GroundSet parse_ground_set(const std::string& spec);

/// An exponent in [1, inf]; q = inf is allowed for the target space.
struct Exponent {
  Rational value;
  bool infinite = false;

  static Exponent inf() { return Exponent{Rational(0), true}; }
  /// 1/p, which is 0 for p = inf.
  Rational reciprocal() const;
  /// Hoelder conjugate p' with 1/p + 1/p' = 1.
  Exponent conjugate() const;
  std::string to_string() const;
  double to_double() const;
};

/// Accepts rationals ("7/4", "1.5") and "inf".
Exponent parse_exponent(const std::string& text);

/// p_gamma = 2 - 1/D_gamma.
Rational critical_exponent(const SeparatedSystem& sys);

/// |X|^{-D(1/p - 1/q)} + |X|^{1/q - 1} + |X|^{-1/p}. Throws ExponentRange
/// unless 1 <= p <= 2 <= q.
double conjecture_rhs(std::uint64_t size_x, unsigned d, const Exponent& p, const Exponent& q);

/// |X|^{-1} (|X|^{s-1} + |X| * maxreps)^{1/(2s-1)}.
double refinement_rhs(std::uint64_t size_x, unsigned s, const BigInt& maxreps);

}  // namespace paucity

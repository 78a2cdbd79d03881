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
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paucity/numeric.hpp"

namespace paucity {

/// Dense ascending coefficient list c_0 + c_1 T + ... of a univariate polynomial.
using UniPoly = std::vector<BigInt>;

/// Drops trailing zero coefficients; the zero polynomial becomes empty.
UniPoly trimmed(UniPoly p);
/// Degree of a trimmed list; -1 for the zero polynomial.
int uni_degree(std::span<const BigInt> p);
BigInt eval_uni(std::span<const BigInt> p, const BigInt& x);

/// Orders variable names by alphabetic stem, then numeric suffix, so that
/// X_2 < X_10 and every X_i < Y. The first variable is the most significant
/// one in the lexicographic monomial order.
bool variable_less(std::string_view a, std::string_view b);

/// Sparse multivariate polynomial with arbitrary-precision integer coefficients.
///
/// Terms are keyed by exponent vectors over variables(), which is kept sorted
/// under variable_less; the map is ordered lexicographically descending, so
/// begin() is the leading term. Zero coefficients are never stored. Operands with
/// different variable lists are unified by name.
class Polynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using TermMap = std::map<Exponents, BigInt, std::greater<Exponents>>;

  Polynomial() = default;
  Polynomial(const BigInt& constant);  // NOLINT(runtime/explicit)
  Polynomial(long constant) : Polynomial(BigInt(constant)) {}  // NOLINT(runtime/explicit)

  static Polynomial variable(const std::string& name);
  static Polynomial univariate(std::span<const BigInt> ascending, const std::string& var);
  static Polynomial monomial(const BigInt& coeff,
                             const std::vector<std::pair<std::string, unsigned>>& powers);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigInt constant_term() const;
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  unsigned degree_in(std::string_view var) const;
  /// Variables with a nonzero exponent in some term, in canonical order.
  std::vector<std::string> used_variables() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned exponent) const;

  /// Simultaneous substitution of polynomials for variables. Names not present
  /// in the polynomial are ignored.
  Polynomial substitute(const std::map<std::string, Polynomial>& assignment) const;
  /// Exact value with every used variable assigned.
  BigInt evaluate(const std::map<std::string, BigInt>& point) const;
  /// Coefficients of a polynomial that uses at most the variable var.
  UniPoly univariate_coefficients(std::string_view var) const;
  /// Ascending coefficients in var, each a polynomial in the remaining variables.
  std::vector<Polynomial> coefficients_in(std::string_view var) const;
  Polynomial derivative(std::string_view var) const;

  /// Positive gcd of the coefficients (0 for the zero polynomial).
  BigInt content() const;
  /// Divides out the content and makes the leading coefficient positive.
  Polynomial normalized() const;
  BigInt leading_coefficient() const;

  /// Canonical text, terms in descending lex order: "3*X^2*Y + -1*Z".
  std::string to_string() const;

 private:
  void align_to(const std::vector<std::string>& vars);
  static std::vector<std::string> merged(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);
  void add_term(const Exponents& e, const BigInt& c);

  std::vector<std::string> vars_;
  TermMap terms_;

  friend Polynomial exact_divide(const Polynomial& p, const Polynomial& d);
  friend std::optional<Polynomial> try_exact_divide(const Polynomial& p, const Polynomial& d);
  friend std::optional<Polynomial> perfect_root(const Polynomial& p, unsigned k);
};

/// Multivariate division in the fixed lex order. Throws NotDivisible when the
/// remainder is nonzero, DivisionByZeroPolynomial when d == 0.
Polynomial exact_divide(const Polynomial& p, const Polynomial& d);
std::optional<Polynomial> try_exact_divide(const Polynomial& p, const Polynomial& d);

/// g with g^k == p, when p is an exact k-th power (up to nothing: signs must match).
std::optional<Polynomial> perfect_root(const Polynomial& p, unsigned k);

/// chi(X, Y) with (X - Y) chi = phi(X) - phi(Y).
Polynomial first_difference_chi(std::span<const BigInt> phi);
/// rho(X, Y) with phi(X) + rho = phi(X + Y).
Polynomial shift_polynomial_rho(std::span<const BigInt> phi);
/// psi(X, Y, Z) with (X - Z)(Y - Z) psi = phi(X + Y - Z) + phi(Z) - phi(X) - phi(Y).
/// Throws DegreeTooLow when deg phi < 2.
Polynomial second_difference_psi(std::span<const BigInt> phi);

/// All integer roots, ascending. Throws ZeroPolynomial for the zero polynomial.
std::vector<BigInt> integer_roots(std::span<const BigInt> p);
std::vector<BigInt> integer_roots(const Polynomial& p);

/// Roots among a sorted candidate list. Uses the int64 kernels when the
/// coefficients and candidates allow it. Throws ZeroPolynomial for p == 0.
std::vector<std::int64_t> integer_roots_among(std::span<const BigInt> p,
                                              std::span<const std::int64_t> candidates);

}  // namespace paucity

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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paucity/curve.hpp"
#include "paucity/polynomial.hpp"

namespace paucity {

/// Variable names used throughout: X_1.. for curve points, Y for the shared
/// shift, T_1.. for the eliminant's arguments.
std::string x_var(std::size_t i);
std::string t_var(std::size_t i);
inline constexpr const char* kYVar = "Y";

/// Determinant by fraction-free (Bareiss) elimination. term_budget bounds the
/// size of any intermediate entry (0 means unbounded); exceeding it throws
/// DegreeBudgetExceeded.
Polynomial determinant(std::vector<std::vector<Polynomial>> m, std::size_t term_budget = 0);

/// Resultant of a and b viewed as polynomials in var, from the Sylvester matrix.
Polynomial resultant(const Polynomial& a, const Polynomial& b, const std::string& var,
                     std::size_t term_budget = 0);

/// prod_{i<j} (X_j - X_i).
Polynomial vandermonde(unsigned r);

/// det(phi_i'(X_j)) / V_r. Throws NotDivisible if V_r does not divide.
Polynomial jacobian_cofactor(const SeparatedSystem& sys);

/// sigma_{i,s} = sum_{j<=s} phi_i(X_j); i is 1-based.
Polynomial power_sum_sigma(const SeparatedSystem& sys, std::size_t i, unsigned s);

enum class EliminantStrategy { kAuto, kNewton, kResultant };
const char* strategy_name(EliminantStrategy s);
EliminantStrategy parse_strategy(const std::string& name);

inline constexpr std::size_t kDefaultTermBudget = 100000;

/// Q in T_1..T_r with Q(sigma_{.,r-1}) == 0 and Q(sigma_{.,r}) != 0, normalized
/// (content removed, positive leading coefficient, perfect powers reduced).
/// Throws StrategyInapplicable or DegreeBudgetExceeded.
Polynomial eliminant(const SeparatedSystem& sys, EliminantStrategy strategy = EliminantStrategy::kAuto,
                     std::size_t term_budget = kDefaultTermBudget);

/// Q(sigma_{1,s}, ..., sigma_{r,s}).
Polynomial compose_with_sigma(const Polynomial& q, const SeparatedSystem& sys, unsigned s);

struct EliminantCheck {
  bool vanishes_below = false;  // Q(sigma_{., r-1}) == 0
  bool nonzero_at_r = false;    // Q(sigma_{., r}) != 0
  bool ok() const { return vanishes_below && nonzero_at_r; }
};
EliminantCheck check_eliminant(const Polynomial& q, const SeparatedSystem& sys);

/// R with Q(sigma_{.,r}(X) - phi_.(Y)) = R * prod (X_i - Y). Throws NotDivisible.
Polynomial quotient_R(const SeparatedSystem& sys, const Polynomial& q);
/// The left side Q(sigma_{.,r}(X) - phi_.(Y)) of the factorization.
Polynomial shifted_eliminant(const SeparatedSystem& sys, const Polynomial& q);
/// P_gamma with X_i renamed to T_i, so it can be evaluated where Q is.
Polynomial cofactor_as_eliminant(const Polynomial& p, unsigned r);

struct DefinitenessReport {
  bool witness_found = false;
  std::vector<BigInt> witness;  // coordinates, in P.used_variables() order
  BigInt value;
  std::uint64_t points_checked = 0;
};

/// Looks for x with every coordinate in [lambda, lambda + range] and |P(x)| < 1.
/// Sweeps the whole box when it has at most `samples` points, else draws
/// `samples` seeded random points. A refutation probe only.
DefinitenessReport definiteness_probe(const Polynomial& p, std::int64_t lambda, std::uint64_t samples,
                                      std::uint64_t seed, std::int64_t range = 16);

/// V_r, P_gamma, Q and R for one curve.
struct EliminationKit {
  SeparatedSystem system;
  Polynomial vandermonde;
  Polynomial cofactor;
  std::optional<Polynomial> q;
  Polynomial cofactor_in_t;  // P_gamma over T_1..T_r
  std::optional<Polynomial> r;
  std::string strategy;  // strategy that produced q, or the reason it is missing
  std::string r_error;   // why r is missing, if it is
  bool use_p = false;

  /// Never throws for an unsupported eliminant; q stays empty instead.
  static EliminationKit build(const SeparatedSystem& sys, EliminantStrategy strategy = EliminantStrategy::kAuto,
                              bool use_p = false, std::size_t term_budget = kDefaultTermBudget);
  /// The polynomial evaluated at M in the case split: Q, or P when use_p.
  const Polynomial& case_polynomial() const;
};

}  // namespace paucity

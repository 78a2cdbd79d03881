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

#include "paucity/elimination.hpp"

#include <map>
#include <random>
#include <utility>

#include "paucity/error.hpp"

namespace paucity {

std::string x_var(std::size_t i) { return "X_" + std::to_string(i); }
std::string t_var(std::size_t i) { return "T_" + std::to_string(i); }

namespace {

void check_budget(const Polynomial& p, std::size_t budget) {
  if (budget != 0 && p.term_count() > budget) {
    fail(Errc::kDegreeBudgetExceeded,
         "intermediate polynomial has " + std::to_string(p.term_count()) + " terms (budget " +
             std::to_string(budget) + ")");
  }
}

Polynomial uni_in(const UniPoly& phi, const Polynomial& arg) {
  Polynomial acc;
  for (std::size_t k = phi.size(); k-- > 0;) acc = acc * arg + Polynomial(phi[k]);
  return acc;
}

}  // namespace

Polynomial determinant(std::vector<std::vector<Polynomial>> m, std::size_t term_budget) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial(1);
  for (const auto& row : m) {
    if (row.size() != n) fail(Errc::kInvalidInput, "determinant of a non-square matrix");
  }
  bool negate = false;
  Polynomial prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return Polynomial();
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_divide(num, prev);
        check_budget(m[i][j], term_budget);
      }
      m[i][k] = Polynomial();
    }
    prev = m[k][k];
  }
  Polynomial det = std::move(m[n - 1][n - 1]);
  return negate ? -det : det;
}

Polynomial resultant(const Polynomial& a, const Polynomial& b, const std::string& var, std::size_t term_budget) {
  auto ca = a.coefficients_in(var);
  auto cb = b.coefficients_in(var);
  if (ca.empty() || cb.empty()) return Polynomial();
  const std::size_t da = ca.size() - 1;
  const std::size_t db = cb.size() - 1;
  if (da == 0 && db == 0) return Polynomial(1);
  if (da == 0) return ca[0].pow(static_cast<unsigned>(db));
  if (db == 0) return cb[0].pow(static_cast<unsigned>(da));
  const std::size_t n = da + db;
  std::vector<std::vector<Polynomial>> syl(n, std::vector<Polynomial>(n));
  for (std::size_t row = 0; row < db; ++row) {
    for (std::size_t k = 0; k <= da; ++k) syl[row][row + k] = ca[da - k];
  }
  for (std::size_t row = 0; row < da; ++row) {
    for (std::size_t k = 0; k <= db; ++k) syl[db + row][row + k] = cb[db - k];
  }
  return determinant(std::move(syl), term_budget);
}

Polynomial vandermonde(unsigned r) {
  Polynomial v(1);
  for (unsigned j = 2; j <= r; ++j) {
    for (unsigned i = 1; i < j; ++i) v *= Polynomial::variable(x_var(j)) - Polynomial::variable(x_var(i));
  }
  return v;
}

Polynomial jacobian_cofactor(const SeparatedSystem& sys) {
  const std::size_t r = sys.r();
  std::vector<std::vector<Polynomial>> m(r, std::vector<Polynomial>(r));
  for (std::size_t i = 0; i < r; ++i) {
    Polynomial dphi = Polynomial::univariate(sys.poly(i), "T").derivative("T");
    for (std::size_t j = 0; j < r; ++j) {
      m[i][j] = dphi.substitute({{"T", Polynomial::variable(x_var(j + 1))}});
    }
  }
  return exact_divide(determinant(std::move(m)), vandermonde(static_cast<unsigned>(r)));
}

Polynomial power_sum_sigma(const SeparatedSystem& sys, std::size_t i, unsigned s) {
  if (i < 1 || i > sys.r()) fail(Errc::kInvalidInput, "sigma index out of range");
  Polynomial total;
  for (unsigned j = 1; j <= s; ++j) total += uni_in(sys.poly(i - 1), Polynomial::variable(x_var(j)));
  return total;
}

const char* strategy_name(EliminantStrategy s) {
  switch (s) {
    case EliminantStrategy::kAuto: return "auto";
    case EliminantStrategy::kNewton: return "newton";
    case EliminantStrategy::kResultant: return "resultant";
  }
  return "?";
}

EliminantStrategy parse_strategy(const std::string& name) {
  if (name == "auto") return EliminantStrategy::kAuto;
  if (name == "newton") return EliminantStrategy::kNewton;
  if (name == "resultant") return EliminantStrategy::kResultant;
  fail(Errc::kInvalidInput, "unknown eliminant strategy: " + name);
}

namespace {

bool newton_applicable(const SeparatedSystem& sys) {
  if (!sys.is_monomial()) return false;
  const unsigned d = sys.degrees()[0];
  for (std::size_t i = 0; i < sys.r(); ++i) {
    if (sys.degrees()[i] != d * (i + 1)) return false;
  }
  return true;
}

// E_k = k! e_k in terms of power sums T_i = p_i, via
// E_k = sum_{i=1..k} (-1)^{i-1} (k-1)!/(k-i)! E_{k-i} p_i.
Polynomial newton_eliminant(std::size_t r) {
  std::vector<Polynomial> e{Polynomial(1)};
  for (std::size_t k = 1; k <= r; ++k) {
    Polynomial ek;
    BigInt falling = 1;  // (k-1)!/(k-i)!
    for (std::size_t i = 1; i <= k; ++i) {
      if (i > 1) falling *= static_cast<unsigned long>(k - i + 1);
      Polynomial term = Polynomial(falling) * e[k - i] * Polynomial::variable(t_var(i));
      if (i % 2 == 0) {
        ek -= term;
      } else {
        ek += term;
      }
    }
    e.push_back(std::move(ek));
  }
  return e[r];
}

Polynomial reduce_powers(Polynomial q) {
  q = q.normalized();
  for (int k = q.total_degree(); k >= 2; --k) {
    while (auto root = perfect_root(q, static_cast<unsigned>(k))) q = root->normalized();
  }
  return q;
}

Polynomial resultant_eliminant(const SeparatedSystem& sys, std::size_t budget) {
  const std::size_t r = sys.r();
  if (r == 1) return Polynomial::variable(t_var(1));
  if (r > 3) fail(Errc::kStrategyInapplicable, "resultant strategy supports r <= 3");
  auto z1 = Polynomial::variable("Z_1");
  auto z2 = Polynomial::variable("Z_2");
  std::vector<Polynomial> eq;
  for (std::size_t i = 0; i < r; ++i) {
    Polynomial e = Polynomial::variable(t_var(i + 1)) - uni_in(sys.poly(i), z1);
    if (r == 3) e -= uni_in(sys.poly(i), z2);
    check_budget(e, budget);
    eq.push_back(std::move(e));
  }
  Polynomial raw;
  if (r == 2) {
    raw = resultant(eq[0], eq[1], "Z_1", budget);
  } else {
    Polynomial r12 = resultant(eq[0], eq[1], "Z_2", budget);
    Polynomial r13 = resultant(eq[0], eq[2], "Z_2", budget);
    raw = resultant(r12, r13, "Z_1", budget);
  }
  if (raw.is_zero()) fail(Errc::kStrategyInapplicable, "iterated resultant vanished identically");
  return reduce_powers(raw);
}

}  // namespace

Polynomial eliminant(const SeparatedSystem& sys, EliminantStrategy strategy, std::size_t term_budget) {
  if (strategy == EliminantStrategy::kAuto) {
    strategy = newton_applicable(sys) ? EliminantStrategy::kNewton : EliminantStrategy::kResultant;
  }
  Polynomial q;
  if (strategy == EliminantStrategy::kNewton) {
    if (!newton_applicable(sys)) {
      fail(Errc::kStrategyInapplicable, "newton strategy needs phi_i = T^(i*d)");
    }
    q = newton_eliminant(sys.r()).normalized();
  } else {
    q = resultant_eliminant(sys, term_budget);
  }
  if (!check_eliminant(q, sys).ok()) {
    fail(Errc::kStrategyInapplicable, std::string(strategy_name(strategy)) + " strategy produced an invalid eliminant");
  }
  return q;
}

Polynomial compose_with_sigma(const Polynomial& q, const SeparatedSystem& sys, unsigned s) {
  std::map<std::string, Polynomial> assignment;
  for (std::size_t i = 1; i <= sys.r(); ++i) assignment[t_var(i)] = power_sum_sigma(sys, i, s);
  return q.substitute(assignment);
}

EliminantCheck check_eliminant(const Polynomial& q, const SeparatedSystem& sys) {
  const auto r = static_cast<unsigned>(sys.r());
  EliminantCheck c;
  c.vanishes_below = compose_with_sigma(q, sys, r - 1).is_zero();
  c.nonzero_at_r = !compose_with_sigma(q, sys, r).is_zero();
  return c;
}

Polynomial shifted_eliminant(const SeparatedSystem& sys, const Polynomial& q) {
  const auto r = static_cast<unsigned>(sys.r());
  auto y = Polynomial::variable(kYVar);
  std::map<std::string, Polynomial> assignment;
  for (std::size_t i = 1; i <= sys.r(); ++i) {
    assignment[t_var(i)] = power_sum_sigma(sys, i, r) - uni_in(sys.poly(i - 1), y);
  }
  return q.substitute(assignment);
}

Polynomial quotient_R(const SeparatedSystem& sys, const Polynomial& q) {
  auto y = Polynomial::variable(kYVar);
  Polynomial lhs = shifted_eliminant(sys, q);
  Polynomial divisor(1);
  for (std::size_t i = 1; i <= sys.r(); ++i) divisor *= Polynomial::variable(x_var(i)) - y;
  return exact_divide(lhs, divisor);
}

Polynomial cofactor_as_eliminant(const Polynomial& p, unsigned r) {
  std::map<std::string, Polynomial> rename;
  for (unsigned i = 1; i <= r; ++i) rename[x_var(i)] = Polynomial::variable(t_var(i));
  return p.substitute(rename);
}

DefinitenessReport definiteness_probe(const Polynomial& p, std::int64_t lambda, std::uint64_t samples,
                                      std::uint64_t seed, std::int64_t range) {
  DefinitenessReport rep;
  const auto vars = p.used_variables();
  std::map<std::string, BigInt> point;
  auto test = [&](const std::vector<std::int64_t>& xs) {
    for (std::size_t i = 0; i < vars.size(); ++i) point[vars[i]] = from_i64(xs[i]);
    BigInt v = p.evaluate(point);
    ++rep.points_checked;
    if (v == 0) {  // |v| < 1 for an integer value
      rep.witness_found = true;
      rep.value = v;
      for (auto x : xs) rep.witness.push_back(from_i64(x));
      return true;
    }
    return false;
  };
  if (range < 0) range = 0;
  const auto side = static_cast<std::uint64_t>(range) + 1;
  std::uint64_t box = 1;
  bool small_box = true;
  for (std::size_t i = 0; i < vars.size() && small_box; ++i) {
    if (box > samples / side) small_box = false;
    box *= side;
  }
  std::vector<std::int64_t> xs(vars.size(), lambda);
  if (small_box) {
    while (true) {
      if (test(xs)) return rep;
      std::size_t i = 0;
      while (i < xs.size() && xs[i] == lambda + range) xs[i++] = lambda;
      if (i == xs.size()) break;
      ++xs[i];
    }
    return rep;
  }
  std::mt19937_64 rng(seed);
  for (std::uint64_t k = 0; k < samples; ++k) {
    for (auto& x : xs) x = lambda + static_cast<std::int64_t>(rng() % side);
    if (test(xs)) return rep;
  }
  return rep;
}

EliminationKit EliminationKit::build(const SeparatedSystem& sys, EliminantStrategy strategy, bool use_p,
                                     std::size_t term_budget) {
  EliminationKit kit;
  kit.system = sys;
  kit.vandermonde = paucity::vandermonde(static_cast<unsigned>(sys.r()));
  kit.cofactor = jacobian_cofactor(sys);
  kit.use_p = use_p;
  kit.cofactor_in_t = cofactor_as_eliminant(kit.cofactor, static_cast<unsigned>(sys.r()));
  try {
    kit.q = eliminant(sys, strategy, term_budget);
    EliminantStrategy used = strategy;
    if (used == EliminantStrategy::kAuto) {
      used = newton_applicable(sys) ? EliminantStrategy::kNewton : EliminantStrategy::kResultant;
    }
    kit.strategy = strategy_name(used);
  } catch (const Error& e) {
    kit.strategy = std::string("unavailable: ") + e.what();
  }
  if (use_p || kit.q) {
    try {
      kit.r = quotient_R(sys, use_p ? kit.cofactor_in_t : *kit.q);
    } catch (const Error& e) {
      kit.r_error = e.what();
    }
  }
  return kit;
}

const Polynomial& EliminationKit::case_polynomial() const {
  if (use_p) return cofactor_in_t;
  if (!q) fail(Errc::kEliminantUnavailable, "no eliminant for " + system.describe() + " (" + strategy + ")");
  return *q;
}

}  // namespace paucity

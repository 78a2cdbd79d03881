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

#include "paucity/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "paucity/error.hpp"
#include "paucity/numtheory.hpp"
#include "paucity/simd/kernels.hpp"

namespace paucity {

UniPoly trimmed(UniPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int uni_degree(std::span<const BigInt> p) {
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k] != 0) return static_cast<int>(k);
  }
  return -1;
}

BigInt eval_uni(std::span<const BigInt> p, const BigInt& x) {
  BigInt acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

namespace {

struct NameKey {
  std::string_view stem;
  bool has_index = false;
  BigInt index;
};

NameKey split_name(std::string_view name) {
  std::size_t end = name.size();
  while (end > 0 && std::isdigit(static_cast<unsigned char>(name[end - 1]))) --end;
  NameKey key;
  if (end < name.size()) {
    key.has_index = true;
    key.index = BigInt(std::string(name.substr(end)), 10);
  }
  std::size_t stem_end = end;
  if (key.has_index && stem_end > 0 && name[stem_end - 1] == '_') --stem_end;
  key.stem = name.substr(0, stem_end);
  return key;
}

}  // namespace

bool variable_less(std::string_view a, std::string_view b) {
  NameKey ka = split_name(a);
  NameKey kb = split_name(b);
  if (ka.stem != kb.stem) return ka.stem < kb.stem;
  if (ka.has_index != kb.has_index) return !ka.has_index;
  if (ka.has_index && ka.index != kb.index) return ka.index < kb.index;
  return a < b;
}

Polynomial::Polynomial(const BigInt& constant) {
  if (constant != 0) terms_.emplace(Exponents{}, constant);
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, BigInt(1));
  return p;
}

Polynomial Polynomial::univariate(std::span<const BigInt> ascending, const std::string& var) {
  Polynomial p;
  p.vars_ = {var};
  for (std::size_t k = 0; k < ascending.size(); ++k) {
    if (ascending[k] != 0) p.terms_.emplace(Exponents{static_cast<std::uint32_t>(k)}, ascending[k]);
  }
  return p;
}

Polynomial Polynomial::monomial(const BigInt& coeff,
                                const std::vector<std::pair<std::string, unsigned>>& powers) {
  Polynomial p(coeff);
  for (const auto& [name, e] : powers) p *= variable(name).pow(e);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](std::uint32_t e) { return e == 0; }));
}

BigInt Polynomial::constant_term() const {
  Exponents zero(vars_.size(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int Polynomial::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto x : e) d += static_cast<int>(x);
    best = std::max(best, d);
  }
  return best;
}

unsigned Polynomial::degree_in(std::string_view var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e[idx]);
  return best;
}

std::vector<std::string> Polynomial::used_variables() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (const auto& [e, c] : terms_) {
      if (e[i] != 0) {
        out.push_back(vars_[i]);
        break;
      }
    }
  }
  return out;
}

std::vector<std::string> Polynomial::merged(const std::vector<std::string>& a,
                                            const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && variable_less(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || variable_less(b[j], a[i])) {
      out.push_back(b[j++]);
    } else {
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
  return out;
}

void Polynomial::align_to(const std::vector<std::string>& vars) {
  if (vars == vars_) return;
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    where[i] = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), vars_[i]) - vars.begin());
  }
  TermMap remapped;
  for (auto& [e, c] : terms_) {
    Exponents f(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[where[i]] = e[i];
    remapped.emplace(std::move(f), std::move(c));
  }
  terms_ = std::move(remapped);
  vars_ = vars;
}

void Polynomial::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.vars_ == vars_) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  auto vars = merged(vars_, o.vars_);
  align_to(vars);
  Polynomial other = o;
  other.align_to(vars);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  const Polynomial* lhs = &a;
  const Polynomial* rhs = &b;
  Polynomial la, lb;
  if (a.vars_ != b.vars_) {
    auto vars = Polynomial::merged(a.vars_, b.vars_);
    la = a;
    la.align_to(vars);
    lb = b;
    lb.align_to(vars);
    lhs = &la;
    rhs = &lb;
  }
  Polynomial out;
  out.vars_ = lhs->vars_;
  Polynomial::Exponents e(out.vars_.size());
  BigInt prod;
  for (const auto& [ea, ca] : lhs->terms_) {
    for (const auto& [eb, cb] : rhs->terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      out.add_term(e, prod);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  auto vars = Polynomial::merged(a.vars_, b.vars_);
  Polynomial la = a, lb = b;
  la.align_to(vars);
  lb.align_to(vars);
  return la.terms_ == lb.terms_;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& assignment) const {
  std::vector<const Polynomial*> image(vars_.size(), nullptr);
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = assignment.find(vars_[i]);
    if (it != assignment.end()) {
      image[i] = &it->second;
    } else {
      kept.push_back(vars_[i]);
    }
  }
  // powers[i][e] = image[i]^e, filled lazily
  std::vector<std::vector<Polynomial>> powers(vars_.size());
  auto power_of = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= e) cache.push_back(cache.back() * *image[i]);
    return cache[e];
  };

  Polynomial out;
  for (const auto& [e, c] : terms_) {
    Polynomial term;
    term.vars_ = kept;
    Exponents rest;
    rest.reserve(kept.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!image[i]) rest.push_back(e[i]);
    }
    term.terms_.emplace(std::move(rest), c);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (image[i] && e[i] > 0) term *= power_of(i, e[i]);
    }
    out += term;
  }
  return out;
}

BigInt Polynomial::evaluate(const std::map<std::string, BigInt>& point) const {
  std::vector<const BigInt*> values(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it != point.end()) values[i] = &it->second;
  }
  BigInt total = 0, term, pw;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!values[i]) fail(Errc::kInvalidInput, "evaluate: no value for variable " + vars_[i]);
      mpz_pow_ui(pw.get_mpz_t(), values[i]->get_mpz_t(), e[i]);
      term *= pw;
    }
    total += term;
  }
  return total;
}

UniPoly Polynomial::univariate_coefficients(std::string_view var) const {
  std::size_t idx = vars_.size();
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == var) idx = i;
  }
  UniPoly out;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != idx && e[i] != 0) {
        fail(Errc::kInvalidInput, "polynomial is not univariate in " + std::string(var));
      }
    }
    std::uint32_t k = idx < e.size() ? e[idx] : 0;
    if (out.size() <= k) out.resize(k + 1);
    out[k] += c;
  }
  return trimmed(std::move(out));
}

std::vector<Polynomial> Polynomial::coefficients_in(std::string_view var) const {
  std::size_t idx = vars_.size();
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == var) idx = i;
  }
  std::vector<Polynomial> out;
  std::vector<std::string> rest_vars;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i != idx) rest_vars.push_back(vars_[i]);
  }
  for (const auto& [e, c] : terms_) {
    std::uint32_t k = idx < e.size() ? e[idx] : 0;
    if (out.size() <= k) {
      out.resize(k + 1);
      for (auto& p : out) {
        if (p.vars_.empty()) p.vars_ = rest_vars;
      }
    }
    Exponents rest;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != idx) rest.push_back(e[i]);
    }
    out[k].add_term(rest, c);
  }
  return out;
}

Polynomial Polynomial::derivative(std::string_view var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return Polynomial();
  std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  Polynomial out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents f = e;
    --f[idx];
    out.add_term(f, c * e[idx]);
  }
  return out;
}

BigInt Polynomial::content() const {
  BigInt g = 0;
  for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

BigInt Polynomial::leading_coefficient() const {
  return terms_.empty() ? BigInt(0) : terms_.begin()->second;
}

Polynomial Polynomial::normalized() const {
  if (is_zero()) return *this;
  BigInt g = content();
  if (leading_coefficient() < 0) g = -g;
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << '*' << vars_[i];
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return os.str();
}

namespace {

bool monomial_divides(const Polynomial::Exponents& divisor, const Polynomial::Exponents& e) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (divisor[i] > e[i]) return false;
  }
  return true;
}

}  // namespace

std::optional<Polynomial> try_exact_divide(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) fail(Errc::kDivisionByZeroPolynomial, "division by the zero polynomial");
  auto vars = Polynomial::merged(p.vars_, d.vars_);
  Polynomial rem = p;
  rem.align_to(vars);
  Polynomial div = d;
  div.align_to(vars);
  Polynomial quotient;
  quotient.vars_ = vars;

  const auto& [lead_e, lead_c] = *div.terms_.begin();
  Polynomial::Exponents shift(vars.size());
  BigInt q;
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms_.begin();
    if (!monomial_divides(lead_e, e)) return std::nullopt;
    if (!mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), lead_c.get_mpz_t());
    for (std::size_t i = 0; i < vars.size(); ++i) shift[i] = e[i] - lead_e[i];
    quotient.add_term(shift, q);
    Polynomial::Exponents f(vars.size());
    BigInt prod;
    for (const auto& [de, dc] : div.terms_) {
      for (std::size_t i = 0; i < vars.size(); ++i) f[i] = de[i] + shift[i];
      mpz_mul(prod.get_mpz_t(), dc.get_mpz_t(), q.get_mpz_t());
      rem.add_term(f, -prod);
    }
  }
  return quotient;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
  auto q = try_exact_divide(p, d);
  if (!q) fail(Errc::kNotDivisible, "(" + p.to_string() + ") is not divisible by (" + d.to_string() + ")");
  return *q;
}

std::optional<Polynomial> perfect_root(const Polynomial& p, unsigned k) {
  if (k == 0) fail(Errc::kInvalidInput, "perfect_root: k must be positive");
  if (k == 1 || p.is_zero()) return p;
  const auto& vars = p.vars_;
  const auto& [lead_e, lead_c] = *p.terms_.begin();
  Polynomial::Exponents root_e(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (lead_e[i] % k != 0) return std::nullopt;
    root_e[i] = lead_e[i] / k;
  }
  if (lead_c < 0 && k % 2 == 0) return std::nullopt;
  BigInt root_c;
  if (mpz_root(root_c.get_mpz_t(), lead_c.get_mpz_t(), k) == 0) return std::nullopt;

  Polynomial g;
  g.vars_ = vars;
  g.terms_.emplace(root_e, root_c);
  const int max_degree = p.total_degree() / static_cast<int>(k);
  // divisor of every correction term: k * lt(g)^(k-1)
  BigInt step_c = ipow(root_c, k - 1) * k;
  Polynomial::Exponents step_e(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) step_e[i] = root_e[i] * (k - 1);

  for (std::size_t guard = 0; guard < 1'000'000; ++guard) {
    Polynomial diff = p - g.pow(k);
    if (diff.is_zero()) return g;
    diff.align_to(vars);
    const auto& [e, c] = *diff.terms_.begin();
    if (!monomial_divides(step_e, e)) return std::nullopt;
    if (!mpz_divisible_p(c.get_mpz_t(), step_c.get_mpz_t())) return std::nullopt;
    Polynomial::Exponents te(vars.size());
    int deg = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      te[i] = e[i] - step_e[i];
      deg += static_cast<int>(te[i]);
    }
    if (deg > max_degree || !(te < root_e)) return std::nullopt;
    BigInt tc;
    mpz_divexact(tc.get_mpz_t(), c.get_mpz_t(), step_c.get_mpz_t());
    g.add_term(te, tc);
  }
  return std::nullopt;
}

namespace {

Polynomial phi_of(std::span<const BigInt> phi, const Polynomial& arg) {
  Polynomial acc;
  for (std::size_t k = phi.size(); k-- > 0;) acc = acc * arg + Polynomial(phi[k]);
  return acc;
}

}  // namespace

Polynomial first_difference_chi(std::span<const BigInt> phi) {
  if (uni_degree(phi) < 1) fail(Errc::kDegreeTooLow, "chi needs deg phi >= 1");
  auto X = Polynomial::variable("X");
  auto Y = Polynomial::variable("Y");
  return exact_divide(phi_of(phi, X) - phi_of(phi, Y), X - Y);
}

Polynomial shift_polynomial_rho(std::span<const BigInt> phi) {
  if (uni_degree(phi) < 1) fail(Errc::kDegreeTooLow, "rho needs deg phi >= 1");
  auto X = Polynomial::variable("X");
  auto Y = Polynomial::variable("Y");
  return phi_of(phi, X + Y) - phi_of(phi, X);
}

Polynomial second_difference_psi(std::span<const BigInt> phi) {
  if (uni_degree(phi) < 2) fail(Errc::kDegreeTooLow, "psi needs deg phi >= 2");
  auto X = Polynomial::variable("X");
  auto Y = Polynomial::variable("Y");
  auto Z = Polynomial::variable("Z");
  Polynomial second = phi_of(phi, X + Y - Z) + phi_of(phi, Z) - phi_of(phi, X) - phi_of(phi, Y);
  return exact_divide(second, (X - Z) * (Y - Z));
}

std::vector<BigInt> integer_roots(std::span<const BigInt> p) {
  const int deg = uni_degree(p);
  if (deg < 0) fail(Errc::kZeroPolynomial, "integer_roots of the zero polynomial");
  std::size_t low = 0;
  while (p[low] == 0) ++low;
  std::vector<BigInt> roots;
  if (low > 0) roots.emplace_back(0);
  if (static_cast<int>(low) == deg) return roots;

  std::span<const BigInt> reduced = p.subspan(low, static_cast<std::size_t>(deg) + 1 - low);
  const BigInt& lead = reduced.back();
  const BigInt& trail = reduced.front();
  // Cauchy bound: every root satisfies |x| <= 1 + max |c_i / lead|.
  BigInt bound = 0;
  for (std::size_t i = 0; i + 1 < reduced.size(); ++i) {
    BigInt ratio = abs(reduced[i]) / abs(lead);
    if (ratio > bound) bound = ratio;
  }
  bound += 1;
  std::vector<BigInt> candidates;
  if (bound <= (1 << 20)) {
    for (auto d : small_divisors(trail, bound.get_si())) candidates.emplace_back(static_cast<long>(d));
  } else {
    for (auto& d : positive_divisors(trail)) {
      if (d > bound) break;
      candidates.push_back(d);
    }
  }
  for (const auto& d : candidates) {
    if (eval_uni(reduced, d) == 0) roots.push_back(d);
    BigInt neg = -d;
    if (eval_uni(reduced, neg) == 0) roots.push_back(neg);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<BigInt> integer_roots(const Polynomial& p) {
  auto used = p.used_variables();
  if (used.size() > 1) fail(Errc::kInvalidInput, "integer_roots needs a univariate polynomial");
  UniPoly coeffs = used.empty() ? UniPoly{p.constant_term()} : p.univariate_coefficients(used[0]);
  return integer_roots(std::span<const BigInt>(coeffs));
}

std::vector<std::int64_t> integer_roots_among(std::span<const BigInt> p,
                                              std::span<const std::int64_t> candidates) {
  const int deg = uni_degree(p);
  if (deg < 0) fail(Errc::kZeroPolynomial, "integer_roots_among of the zero polynomial");
  std::vector<std::int64_t> out;
  if (deg == 0 || candidates.empty()) return out;

  std::int64_t max_abs = 0;
  for (auto x : candidates) max_abs = std::max(max_abs, x < 0 ? -x : x);
  bool small = true;
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(deg) + 1);
  for (std::size_t k = 0; k < coeffs.size() && small; ++k) {
    if (fits_i64(p[k])) {
      coeffs[k] = p[k].get_si();
    } else {
      small = false;
    }
  }
  if (small && simd::horner_fits(coeffs, max_abs)) {
    std::vector<std::uint32_t> hits;
    simd::poly_zeros(coeffs, candidates, hits);
    out.reserve(hits.size());
    for (auto i : hits) out.push_back(candidates[i]);
    return out;
  }
  std::size_t low = 0;
  while (p[low] == 0) ++low;
  const BigInt& trail = p[low];
  BigInt x;
  for (auto c : candidates) {
    if (c == 0) {
      if (low > 0) out.push_back(0);
      continue;
    }
    if (!mpz_divisible_ui_p(trail.get_mpz_t(), static_cast<unsigned long>(c < 0 ? -c : c))) continue;
    x = static_cast<long>(c);
    if (eval_uni(p.subspan(0, static_cast<std::size_t>(deg) + 1), x) == 0) out.push_back(c);
  }
  return out;
}

}  // namespace paucity

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

#include "paucity/numtheory.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

#include "paucity/error.hpp"

namespace paucity {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kInvalidInput: return "InvalidInput";
    case Errc::kDegreeNotSeparated: return "DegreeNotSeparated";
    case Errc::kZeroPolynomial: return "ZeroPolynomial";
    case Errc::kConstantPolynomial: return "ConstantPolynomial";
    case Errc::kExponentRange: return "ExponentRangeError";
    case Errc::kNotDivisible: return "NotDivisible";
    case Errc::kDivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case Errc::kDegreeTooLow: return "DegreeTooLow";
    case Errc::kStrategyInapplicable: return "StrategyInapplicable";
    case Errc::kDegreeBudgetExceeded: return "DegreeBudgetExceeded";
    case Errc::kBudgetExceeded: return "BudgetExceeded";
    case Errc::kZeroShift: return "ZeroShift";
    case Errc::kEliminantUnavailable: return "EliminantUnavailable";
    case Errc::kZeroTarget: return "ZeroTarget";
    case Errc::kDomainError: return "DomainError";
    case Errc::kEmptySet: return "EmptySet";
    case Errc::kEmptyBase: return "EmptyBase";
    case Errc::kLinearCurveExcluded: return "LinearCurveExcluded";
    case Errc::kEmptyAnchor: return "EmptyAnchor";
    case Errc::kOverflow: return "Overflow";
    case Errc::kIo: return "IoError";
  }
  return "Unknown";
}

BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t j = text.size();
  while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
  std::string body = text.substr(i, j - i);
  if (!body.empty() && body[0] == '+') body.erase(0, 1);
  std::size_t digits = (!body.empty() && body[0] == '-') ? 1 : 0;
  if (body.size() == digits) fail(Errc::kInvalidInput, "empty integer literal '" + text + "'");
  for (std::size_t k = digits; k < body.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(body[k]))) {
      fail(Errc::kInvalidInput, "not an integer: '" + text + "'");
    }
  }
  return BigInt(body, 10);
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) fail(Errc::kInvalidInput, "zero denominator in '" + text + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (frac.empty()) frac = "0";
    BigInt w = parse_bigint(whole);
    BigInt f = parse_bigint(frac);
    if (f < 0) fail(Errc::kInvalidInput, "bad decimal '" + text + "'");
    BigInt scale = ipow(BigInt(10), frac.size());
    Rational q(abs(w) * scale + f, scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  return Rational(parse_bigint(text));
}

std::int64_t to_i64(const BigInt& v) {
  if (!fits_i64(v)) fail(Errc::kOverflow, "value " + v.get_str() + " does not fit in 64 bits");
  return static_cast<std::int64_t>(v.get_si());
}

double log_abs(const BigInt& v) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double to_double(const Rational& v) { return v.get_d(); }

BigInt ipow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational rpow(const Rational& base, unsigned long exponent) {
  Rational out(ipow(base.get_num(), exponent), ipow(base.get_den(), exponent));
  out.canonicalize();
  return out;
}

std::size_t hash_bigint(const BigInt& v) noexcept {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(v.get_mpz_t()) + 1);
  std::size_t limbs = mpz_size(v.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    hash_combine(h, static_cast<std::size_t>(mpz_getlimbn(v.get_mpz_t(), i)));
  }
  return h;
}

namespace {

constexpr unsigned kTrialLimit = 10007;

bool is_probable_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard's rho. Returns a nontrivial factor of composite n.
BigInt pollard_brent(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return BigInt(2);
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto step = [&](const BigInt& v) {
      BigInt out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          BigInt diff = abs(x - y);
          q = (q * diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        BigInt diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = pollard_brent(n);
  split(d, out);
  split(BigInt(n / d), out);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n) {
  if (n == 0) fail(Errc::kZeroTarget, "cannot factor zero");
  BigInt rest = abs(n);
  std::map<BigInt, unsigned> found;
  for (unsigned p = 2; p < kTrialLimit && rest > 1; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      ++found[BigInt(p)];
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
  }
  split(rest, found);
  return {found.begin(), found.end()};
}

std::vector<BigInt> positive_divisors(const BigInt& n) {
  std::vector<BigInt> divisors{BigInt(1)};
  for (const auto& [p, e] : factorize(n)) {
    std::size_t base = divisors.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * pk);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

std::vector<std::int64_t> small_divisors(const BigInt& n, std::int64_t bound) {
  if (n == 0) fail(Errc::kZeroTarget, "divisors of zero are unbounded");
  std::vector<std::int64_t> out;
  BigInt a = abs(n);
  if (a.fits_ulong_p()) {
    unsigned long v = a.get_ui();
    for (std::int64_t d = 1; d <= bound && static_cast<unsigned long>(d) <= v; ++d) {
      if (v % static_cast<unsigned long>(d) == 0) out.push_back(d);
    }
    return out;
  }
  for (std::int64_t d = 1; d <= bound; ++d) {
    if (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(d))) out.push_back(d);
  }
  return out;
}

BigInt ordered_factorization_count(const BigInt& n, unsigned k) {
  if (k == 0) return abs(n) == 1 ? 1 : 0;
  // tau_k(n) = prod over p^e of C(e + k - 1, k - 1)
  BigInt total = 1;
  for (const auto& [p, e] : factorize(n)) {
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), e + k - 1, k - 1);
    total *= c;
  }
  return total;
}

}  // namespace paucity

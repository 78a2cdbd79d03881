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

#include "paucity/curve.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

#include "paucity/error.hpp"

namespace paucity {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
  }
  return out;
}

std::int64_t parse_i64(const std::string& text, const char* what) {
  BigInt v = parse_bigint(text);
  if (!fits_i64(v)) fail(Errc::kInvalidInput, std::string(what) + " out of range: " + text);
  return v.get_si();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::kIo, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

SeparatedSystem SeparatedSystem::validate(std::vector<UniPoly> polys) {
  if (polys.empty()) fail(Errc::kInvalidInput, "a curve needs at least one polynomial");
  SeparatedSystem sys;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    UniPoly p = trimmed(std::move(polys[i]));
    int deg = uni_degree(p);
    if (deg < 0) fail(Errc::kZeroPolynomial, "phi_" + std::to_string(i + 1) + " is zero");
    if (deg == 0) fail(Errc::kConstantPolynomial, "phi_" + std::to_string(i + 1) + " is constant");
    auto k = static_cast<unsigned>(deg);
    if (!sys.degrees_.empty() && sys.degrees_.back() >= k) {
      fail(Errc::kDegreeNotSeparated, "degrees must strictly increase: deg phi_" + std::to_string(i) +
                                          " = " + std::to_string(sys.degrees_.back()) + ", deg phi_" +
                                          std::to_string(i + 1) + " = " + std::to_string(k));
    }
    sys.degrees_.push_back(k);
    sys.total_degree_ += k;
    sys.degree_product_ *= k;
    sys.polys_.push_back(std::move(p));
  }
  return sys;
}

SeparatedSystem SeparatedSystem::moment(unsigned r) {
  std::vector<unsigned> ks(r);
  for (unsigned i = 0; i < r; ++i) ks[i] = i + 1;
  return monomials(ks);
}

SeparatedSystem SeparatedSystem::monomials(const std::vector<unsigned>& exponents) {
  std::vector<UniPoly> polys;
  for (unsigned k : exponents) {
    UniPoly p(k + 1, BigInt(0));
    p[k] = 1;
    polys.push_back(std::move(p));
  }
  return validate(std::move(polys));
}

unsigned SeparatedSystem::jacobian_cofactor_degree() const {
  unsigned total = 0;
  for (std::size_t i = 0; i < degrees_.size(); ++i) total += degrees_[i] - static_cast<unsigned>(i + 1);
  return total;
}

bool SeparatedSystem::is_monomial() const {
  for (const auto& p : polys_) {
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      if (p[k] != 0) return false;
    }
    if (p.back() != 1) return false;
  }
  return true;
}

BigInt SeparatedSystem::max_abs_value(std::size_t i, const std::vector<std::int64_t>& points) const {
  BigInt best = 0;
  for (auto x : points) {
    BigInt v = abs(value(i, from_i64(x)));
    if (v > best) best = v;
  }
  return best;
}

std::string SeparatedSystem::describe() const {
  std::string out = "(";
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    if (i) out += ", ";
    std::string term;
    const auto& p = polys_[i];
    for (std::size_t k = p.size(); k-- > 0;) {
      if (p[k] == 0) continue;
      if (!term.empty()) term += " + ";
      std::string mono = k == 0 ? "" : (k == 1 ? "T" : "T^" + std::to_string(k));
      if (mono.empty()) {
        term += p[k].get_str();
      } else if (p[k] == 1) {
        term += mono;
      } else {
        term += p[k].get_str() + "*" + mono;
      }
    }
    out += term;
  }
  return out + ")";
}

std::string SeparatedSystem::to_json() const {
  nlohmann::json j;
  j["polys"] = nlohmann::json::array();
  for (const auto& p : polys_) {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& x : p) {
      if (fits_i64(x)) {
        c.push_back(x.get_si());
      } else {
        c.push_back(x.get_str());
      }
    }
    j["polys"].push_back(c);
  }
  return j.dump();
}

std::vector<BigInt> evaluate_curve(const SeparatedSystem& sys, const BigInt& n) {
  std::vector<BigInt> out;
  out.reserve(sys.r());
  for (std::size_t i = 0; i < sys.r(); ++i) out.push_back(sys.value(i, n));
  return out;
}

SeparatedSystem parse_curve_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::kInvalidInput, std::string("curve JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("polys") || !j["polys"].is_array()) {
    fail(Errc::kInvalidInput, "curve JSON needs a \"polys\" array");
  }
  std::vector<UniPoly> polys;
  for (const auto& jp : j["polys"]) {
    if (!jp.is_array()) fail(Errc::kInvalidInput, "each polynomial must be a coefficient array");
    UniPoly p;
    for (const auto& c : jp) {
      if (c.is_number_integer()) {
        p.push_back(from_i64(c.get<std::int64_t>()));
      } else if (c.is_string()) {
        p.push_back(parse_bigint(c.get<std::string>()));
      } else {
        fail(Errc::kInvalidInput, "coefficients must be integers");
      }
    }
    polys.push_back(std::move(p));
  }
  return SeparatedSystem::validate(std::move(polys));
}

SeparatedSystem parse_curve_spec(const std::string& spec) {
  if (spec.rfind("moment:", 0) == 0) {
    auto r = parse_i64(spec.substr(7), "moment curve dimension");
    if (r < 1 || r > 64) fail(Errc::kInvalidInput, "moment curve dimension must be in [1, 64]");
    return SeparatedSystem::moment(static_cast<unsigned>(r));
  }
  if (spec.rfind("powers:", 0) == 0) {
    std::vector<unsigned> ks;
    for (const auto& part : split(spec.substr(7), ',')) {
      auto k = parse_i64(part, "exponent");
      if (k < 0 || k > 4096) fail(Errc::kInvalidInput, "exponent out of range: " + part);
      ks.push_back(static_cast<unsigned>(k));
    }
    return SeparatedSystem::monomials(ks);
  }
  auto first = spec.find_first_not_of(" \t\n");
  if (first != std::string::npos && spec[first] == '{') return parse_curve_json(spec);
  return parse_curve_json(read_file(spec));
}

GroundSet::GroundSet(std::vector<std::int64_t> elements, std::int64_t bound) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (!elements_.empty() && elements_.front() < 1) {
    fail(Errc::kInvalidInput, "ground set elements must be positive");
  }
  std::int64_t top = elements_.empty() ? 0 : elements_.back();
  bound_ = bound == 0 ? top : bound;
  if (top > bound_) fail(Errc::kInvalidInput, "ground set element exceeds the bound");
}

GroundSet GroundSet::range(std::int64_t n) {
  if (n < 0) fail(Errc::kInvalidInput, "range bound must be nonnegative");
  std::vector<std::int64_t> xs(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = i + 1;
  return GroundSet(std::move(xs), n);
}

bool GroundSet::contains(std::int64_t x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

GroundSet GroundSet::truncated(std::int64_t cap) const {
  std::vector<std::int64_t> kept;
  for (auto x : elements_) {
    if (x <= cap) kept.push_back(x);
  }
  return GroundSet(std::move(kept), std::min(cap, bound_));
}

GroundSet parse_ground_set(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) fail(Errc::kInvalidInput, "ground set spec needs a kind: " + spec);
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "range") return GroundSet::range(parse_i64(rest, "range bound"));
  if (kind == "list") {
    std::vector<std::int64_t> xs;
    for (const auto& part : split(rest, ',')) {
      if (!part.empty()) xs.push_back(parse_i64(part, "element"));
    }
    return GroundSet(std::move(xs));
  }
  if (kind == "file") {
    std::stringstream in(read_file(rest));
    std::vector<std::int64_t> xs;
    std::string line;
    while (std::getline(in, line)) {
      auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') continue;
      xs.push_back(parse_i64(line.substr(b, line.find_last_not_of(" \t\r") - b + 1), "element"));
    }
    return GroundSet(std::move(xs));
  }
  if (kind == "random") {
    auto parts = split(rest, ',');
    if (parts.size() != 3) fail(Errc::kInvalidInput, "random ground set needs N,density,seed");
    std::int64_t n = parse_i64(parts[0], "N");
    double density = to_double(parse_rational(parts[1]));
    auto seed = static_cast<std::uint64_t>(parse_i64(parts[2], "seed"));
    if (n < 0 || density < 0.0 || density > 1.0) fail(Errc::kInvalidInput, "bad random ground set parameters");
    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> xs;
    for (std::int64_t x = 1; x <= n; ++x) {
      // top 53 bits, so the draw is identical on every platform
      double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < density) xs.push_back(x);
    }
    return GroundSet(std::move(xs), n);
  }
  fail(Errc::kInvalidInput, "unknown ground set kind: " + kind);
}

Rational Exponent::reciprocal() const {
  if (infinite) return Rational(0);
  return Rational(1) / value;
}

Exponent Exponent::conjugate() const {
  if (infinite) return Exponent{Rational(1), false};
  if (value == 1) return inf();
  Rational v = value / (value - 1);
  v.canonicalize();
  return Exponent{v, false};
}

std::string Exponent::to_string() const { return infinite ? "inf" : value.get_str(); }

double Exponent::to_double() const {
  return infinite ? HUGE_VAL : paucity::to_double(value);
}

Exponent parse_exponent(const std::string& text) {
  if (text == "inf" || text == "infinity") return Exponent::inf();
  Rational v = parse_rational(text);
  if (v < 1) fail(Errc::kExponentRange, "exponent must be at least 1: " + text);
  return Exponent{v, false};
}

Rational critical_exponent(const SeparatedSystem& sys) {
  Rational p = Rational(2) - Rational(1, sys.total_degree());
  p.canonicalize();
  return p;
}

double conjecture_rhs(std::uint64_t size_x, unsigned d, const Exponent& p, const Exponent& q) {
  if (p.infinite || p.value < 1 || p.value > 2 || (!q.infinite && q.value < 2)) {
    fail(Errc::kExponentRange, "need 1 <= p <= 2 <= q, got p = " + p.to_string() + ", q = " + q.to_string());
  }
  if (size_x == 0) fail(Errc::kInvalidInput, "|X| must be at least 1");
  const double lx = std::log(static_cast<double>(size_x));
  const Rational ip = p.reciprocal();
  const Rational iq = q.reciprocal();
  const double e1 = -to_double(Rational(d) * (ip - iq));
  const double e2 = to_double(iq - 1);
  const double e3 = -to_double(ip);
  return std::exp(e1 * lx) + std::exp(e2 * lx) + std::exp(e3 * lx);
}

double refinement_rhs(std::uint64_t size_x, unsigned s, const BigInt& maxreps) {
  if (s < 1 || size_x < 1 || maxreps < 0) fail(Errc::kInvalidInput, "refinement_rhs needs s, |X| >= 1, maxreps >= 0");
  BigInt x(static_cast<unsigned long>(size_x));
  BigInt inner = ipow(x, s - 1) + x * maxreps;
  return std::exp(log_abs(inner) / static_cast<double>(2 * s - 1) - std::log(static_cast<double>(size_x)));
}

}  // namespace paucity

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

#include "paucity/averaging.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "paucity/error.hpp"
#include "paucity/parallel.hpp"

namespace paucity {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) fail(Errc::kOverflow, "lattice coordinate overflow");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) fail(Errc::kOverflow, "lattice coordinate overflow");
  return out;
}

}  // namespace

Point add_points(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = checked_add(a[j], b[j]);
  return out;
}

Point sub_points(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = checked_sub(a[j], b[j]);
  return out;
}

std::vector<Point> curve_points(const SeparatedSystem& sys, const GroundSet& ground) {
  std::vector<Point> out;
  out.reserve(ground.size());
  for (auto n : ground.elements()) {
    Point p;
    for (const auto& v : evaluate_curve(sys, from_i64(n))) p.push_back(to_i64(v));
    out.push_back(std::move(p));
  }
  return out;
}

LatticeFunction LatticeFunction::indicator(const PointSet& set, std::size_t dim) {
  LatticeFunction f(dim);
  for (const auto& p : set) f.values_.emplace(p, Rational(1));
  return f;
}

LatticeFunction LatticeFunction::delta(const Point& p) {
  LatticeFunction f(p.size());
  f.values_.emplace(p, Rational(1));
  return f;
}

Rational LatticeFunction::at(const Point& p) const {
  auto it = values_.find(p);
  return it == values_.end() ? Rational(0) : it->second;
}

void LatticeFunction::add(const Point& p, const Rational& v) {
  if (v == 0) return;
  auto [it, inserted] = values_.try_emplace(p, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) values_.erase(it);
  }
}

void LatticeFunction::set(const Point& p, const Rational& v) {
  if (v == 0) {
    values_.erase(p);
  } else {
    values_[p] = v;
  }
}

Rational LatticeFunction::sum() const {
  Rational s = 0;
  for (const auto& [p, v] : values_) s += v;
  return s;
}

Rational LatticeFunction::l1_norm() const {
  Rational s = 0;
  for (const auto& [p, v] : values_) s += abs(v);
  return s;
}

Rational LatticeFunction::linf_norm() const {
  Rational m = 0;
  for (const auto& [p, v] : values_) m = std::max<Rational>(m, abs(v));
  return m;
}

PointSet LatticeFunction::level_set(const Rational& threshold) const {
  PointSet out;
  for (const auto& [p, v] : values_) {
    if (v >= threshold) out.insert(p);
  }
  return out;
}

LatticeFunction LatticeFunction::reflected() const {
  LatticeFunction out(dim_);
  Point zero(dim_, 0);
  for (const auto& [p, v] : values_) out.values_.emplace(sub_points(zero, p), v);
  return out;
}

Rational inner(const LatticeFunction& f, const LatticeFunction& g) {
  const auto& small = f.support_size() <= g.support_size() ? f : g;
  const auto& big = &small == &f ? g : f;
  Rational s = 0;
  for (const auto& [p, v] : small.values()) s += v * big.at(p);
  return s;
}

LatticeFunction convolve(const LatticeFunction& f, const LatticeFunction& g) {
  LatticeFunction out(std::max(f.dim(), g.dim()));
  for (const auto& [y, fy] : f.values()) {
    for (const auto& [z, gz] : g.values()) out.add(add_points(y, z), fy * gz);
  }
  return out;
}

LatticeFunction apply_S(const SeparatedSystem& sys, const GroundSet& ground, const LatticeFunction& f) {
  const auto curve = curve_points(sys, ground);
  LatticeFunction out(sys.r());
  for (const auto& [p, v] : f.values()) {
    for (const auto& g : curve) out.add(sub_points(p, g), v);
  }
  return out;
}

LatticeFunction apply_S_star(const SeparatedSystem& sys, const GroundSet& ground, const LatticeFunction& f) {
  const auto curve = curve_points(sys, ground);
  LatticeFunction out(sys.r());
  for (const auto& [p, v] : f.values()) {
    for (const auto& g : curve) out.add(add_points(p, g), v);
  }
  return out;
}

LatticeFunction curve_measure_mu(const SeparatedSystem& sys, const GroundSet& ground) {
  LatticeFunction mu(sys.r());
  for (const auto& g : curve_points(sys, ground)) mu.add(g, Rational(1));
  return mu;
}

std::uint64_t count_S(const std::vector<Point>& curve, const PointSet& e, const Point& x) {
  std::uint64_t c = 0;
  for (const auto& g : curve) c += e.count(add_points(x, g));
  return c;
}

std::uint64_t count_S_star(const std::vector<Point>& curve, const PointSet& f, const Point& y) {
  std::uint64_t c = 0;
  for (const auto& g : curve) c += f.count(sub_points(y, g));
  return c;
}

MeansReport means(const SeparatedSystem& sys, const GroundSet& ground, const PointSet& e, const PointSet& f) {
  if (e.empty() || f.empty()) fail(Errc::kEmptySet, "means need nonempty E and F");
  const auto curve = curve_points(sys, ground);
  std::uint64_t pairing = 0;
  for (const auto& x : f) pairing += count_S(curve, e, x);
  MeansReport m;
  m.pairing = BigInt(static_cast<unsigned long>(pairing));
  m.alpha = Rational(m.pairing, BigInt(static_cast<unsigned long>(f.size())));
  m.beta = Rational(m.pairing, BigInt(static_cast<unsigned long>(e.size())));
  m.alpha.canonicalize();
  m.beta.canonicalize();
  return m;
}

BigInt Box::volume() const {
  BigInt v = 1;
  for (std::size_t j = 0; j < lo.size(); ++j) {
    if (hi[j] < lo[j]) return 0;
    v *= from_i64(hi[j]) - from_i64(lo[j]) + 1;
  }
  return v;
}

bool Box::contains(const Point& p) const {
  for (std::size_t j = 0; j < lo.size(); ++j) {
    if (p[j] < lo[j] || p[j] > hi[j]) return false;
  }
  return true;
}

BigInt WitnessSets::size_e() const {
  return e ? BigInt(static_cast<unsigned long>(e->size())) : e_box->volume();
}

BigInt WitnessSets::size_f() const {
  return f ? BigInt(static_cast<unsigned long>(f->size())) : f_box->volume();
}

BigInt witness_pairing(const SeparatedSystem& sys, const GroundSet& ground, const WitnessSets& w) {
  const auto curve = curve_points(sys, ground);
  if (w.e && w.f) {
    std::uint64_t pairing = 0;
    for (const auto& x : *w.f) pairing += count_S(curve, *w.e, x);
    return BigInt(static_cast<unsigned long>(pairing));
  }
  if (!w.e_box || !w.f_box) fail(Errc::kInvalidInput, "witness mixes explicit sets and boxes");
  // #{x in F : x + gamma(n) in E} is a product of interval overlaps
  BigInt total = 0;
  for (const auto& g : curve) {
    BigInt term = 1;
    for (std::size_t j = 0; j < g.size() && term != 0; ++j) {
      std::int64_t lo = std::max(w.f_box->lo[j], checked_sub(w.e_box->lo[j], g[j]));
      std::int64_t hi = std::min(w.f_box->hi[j], checked_sub(w.e_box->hi[j], g[j]));
      term = hi < lo ? BigInt(0) : term * (from_i64(hi) - from_i64(lo) + 1);
    }
    total += term;
  }
  return total;
}

double rwt_ratio_from(const BigInt& pairing, std::uint64_t size_x, const BigInt& size_e, const BigInt& size_f,
                      const Exponent& p, const Exponent& q, RwtForm form) {
  if (size_e == 0 || size_f == 0) fail(Errc::kEmptySet, "rwt_ratio needs nonempty E and F");
  if (size_x == 0) fail(Errc::kEmptySet, "rwt_ratio needs a nonempty ground set");
  if (pairing == 0) return 0.0;
  const double ip = to_double(p.reciprocal());
  const double iqd = form == RwtForm::kDual ? to_double(Rational(1) - q.reciprocal()) : ip;
  const double log_ratio =
      log_abs(pairing) - std::log(static_cast<double>(size_x)) - ip * log_abs(size_e) - iqd * log_abs(size_f);
  return std::exp(log_ratio);
}

double rwt_ratio(const SeparatedSystem& sys, const GroundSet& ground, const PointSet& e, const PointSet& f,
                 const Exponent& p, const Exponent& q, RwtForm form) {
  if (e.empty() || f.empty()) fail(Errc::kEmptySet, "rwt_ratio needs nonempty E and F");
  MeansReport m = means(sys, ground, e, f);
  return rwt_ratio_from(m.pairing, ground.size(), BigInt(static_cast<unsigned long>(e.size())),
                        BigInt(static_cast<unsigned long>(f.size())), p, q, form);
}

namespace {

Point parse_point(const std::string& text, std::size_t dim) {
  Point p;
  std::string item;
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  while (in >> item) p.push_back(to_i64(parse_bigint(item)));
  if (p.size() != dim) {
    fail(Errc::kInvalidInput, "point '" + text + "' needs " + std::to_string(dim) + " coordinates");
  }
  return p;
}

}  // namespace

PointSet parse_point_set(const std::string& spec, std::size_t dim) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) fail(Errc::kInvalidInput, "point set spec needs a kind: " + spec);
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  PointSet out;
  if (kind == "points") {
    std::istringstream in(rest);
    std::string item;
    while (std::getline(in, item, ';')) {
      if (item.find_first_not_of(' ') != std::string::npos) out.insert(parse_point(item, dim));
    }
    return out;
  }
  if (kind == "box") {
    auto sep = rest.find(':');
    if (sep == std::string::npos) fail(Errc::kInvalidInput, "box spec needs lo:hi");
    Box box{parse_point(rest.substr(0, sep), dim), parse_point(rest.substr(sep + 1), dim)};
    if (box.volume() > 10'000'000) fail(Errc::kBudgetExceeded, "box has more than 10^7 points");
    if (box.volume() == 0) return out;
    Point p = box.lo;
    for (;;) {
      out.insert(p);
      std::size_t j = 0;
      while (j < dim && p[j] == box.hi[j]) {
        p[j] = box.lo[j];
        ++j;
      }
      if (j == dim) break;
      ++p[j];
    }
    return out;
  }
  if (kind == "file") {
    std::ifstream in(rest);
    if (!in) fail(Errc::kIo, "cannot read " + rest);
    std::string line;
    while (std::getline(in, line)) {
      auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') continue;
      out.insert(parse_point(line, dim));
    }
    return out;
  }
  fail(Errc::kInvalidInput, "unknown point set kind: " + kind);
}

WitnessSets extremal_witnesses(const SeparatedSystem& sys, const GroundSet& ground, const std::string& kind) {
  const auto curve = curve_points(sys, ground);
  const Point zero(sys.r(), 0);
  WitnessSets w;
  w.kind = kind;
  if (kind == "delta") {
    w.e = PointSet{zero};
    w.f.emplace();
    for (const auto& g : curve) w.f->insert(sub_points(zero, g));
    if (w.f->empty()) w.f->insert(zero);
    return w;
  }
  if (kind == "curve") {
    w.e = PointSet(curve.begin(), curve.end());
    if (w.e->empty()) w.e->insert(zero);
    w.f = PointSet{zero};
    return w;
  }
  if (kind == "box") {
    Box f{zero, zero}, e{zero, zero};
    for (std::size_t j = 0; j < sys.r(); ++j) {
      std::int64_t lo = 0, hi = 0, big = 0;
      for (const auto& g : curve) {
        lo = std::min(lo, g[j]);
        hi = std::max(hi, g[j]);
        big = std::max(big, g[j] < 0 ? -g[j] : g[j]);
      }
      f.hi[j] = big;
      e.lo[j] = lo;
      e.hi[j] = checked_add(big, hi);
    }
    w.f_box = f;
    w.e_box = e;
    return w;
  }
  fail(Errc::kInvalidInput, "unknown witness kind: " + kind);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit_draw(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

RandomSearchResult random_witness_search(const SeparatedSystem& sys, const GroundSet& ground, std::uint64_t trials,
                                         std::uint64_t seed, const Exponent& p, const Exponent& q,
                                         unsigned threads) {
  if (ground.empty()) fail(Errc::kEmptySet, "random witness search needs a nonempty ground set");
  const auto curve = curve_points(sys, ground);
  const std::size_t r = sys.r();
  struct Trial {
    WitnessSets w;
    BigInt pairing;
    double ratio = -1.0;
  };
  std::vector<Trial> results(trials);
  parallel_chunks(trials, 8, threads, [&](std::size_t lo, std::size_t hi, std::size_t) {
    for (std::size_t t = lo; t < hi; ++t) {
      std::mt19937_64 rng(mix_seed(seed, t));
      // F: one to three points of the cube [0, 2]^r
      PointSet f;
      const std::size_t f_size = 1 + rng() % 3;
      while (f.size() < f_size) {
        Point x(r);
        for (auto& c : x) c = static_cast<std::int64_t>(rng() % 3);
        f.insert(std::move(x));
      }
      // E: a random half of the translates F + gamma(X), never empty
      PointSet reach;
      for (const auto& x : f) {
        for (const auto& g : curve) reach.insert(add_points(x, g));
      }
      PointSet e;
      for (const auto& y : reach) {
        if (unit_draw(rng()) < 0.5) e.insert(y);
      }
      if (e.empty()) e.insert(*reach.begin());
      Trial& out = results[t];
      out.w.kind = "random";
      std::uint64_t pairing = 0;
      for (const auto& x : f) pairing += count_S(curve, e, x);
      out.pairing = BigInt(static_cast<unsigned long>(pairing));
      out.ratio = rwt_ratio_from(out.pairing, ground.size(), BigInt(static_cast<unsigned long>(e.size())),
                                 BigInt(static_cast<unsigned long>(f.size())), p, q);
      out.w.e = std::move(e);
      out.w.f = std::move(f);
    }
  });
  RandomSearchResult best;
  best.ratio = -1.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    if (results[t].ratio > best.ratio) {
      best.best = results[t].w;
      best.pairing = results[t].pairing;
      best.ratio = results[t].ratio;
      best.trial = t;
    }
  }
  if (trials == 0) best.ratio = 0.0;
  return best;
}

}  // namespace paucity

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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "paucity/curve.hpp"

namespace paucity {

/// A lattice point in Z^r. Coordinates are checked int64 (Overflow on wrap).
using Point = std::vector<std::int64_t>;
using PointSet = std::set<Point>;

Point add_points(const Point& a, const Point& b);
Point sub_points(const Point& a, const Point& b);

/// gamma(n) for every n in the ground set, in ground-set order.
std::vector<Point> curve_points(const SeparatedSystem& sys, const GroundSet& ground);

/// Finitely supported rational function on Z^r. Zero values are never stored.
class LatticeFunction {
 public:
  LatticeFunction() = default;
  explicit LatticeFunction(std::size_t dim) : dim_(dim) {}

  static LatticeFunction indicator(const PointSet& set, std::size_t dim);
  static LatticeFunction delta(const Point& p);

  std::size_t dim() const { return dim_; }
  const std::map<Point, Rational>& values() const { return values_; }
  std::size_t support_size() const { return values_.size(); }
  bool is_zero() const { return values_.empty(); }

  Rational at(const Point& p) const;
  void add(const Point& p, const Rational& v);
  void set(const Point& p, const Rational& v);

  Rational sum() const;
  Rational l1_norm() const;
  Rational linf_norm() const;
  /// Support points with value >= threshold.
  PointSet level_set(const Rational& threshold) const;

  /// x -> f(-x).
  LatticeFunction reflected() const;

  friend bool operator==(const LatticeFunction&, const LatticeFunction&) = default;

 private:
  std::size_t dim_ = 0;
  std::map<Point, Rational> values_;
};

Rational inner(const LatticeFunction& f, const LatticeFunction& g);
/// (f * g)(x) = sum_y f(y) g(x - y).
LatticeFunction convolve(const LatticeFunction& f, const LatticeFunction& g);

/// S f(x) = sum_{n in X} f(x + gamma(n)).
LatticeFunction apply_S(const SeparatedSystem& sys, const GroundSet& ground, const LatticeFunction& f);
/// S* f(x) = sum_{n in X} f(x - gamma(n)).
LatticeFunction apply_S_star(const SeparatedSystem& sys, const GroundSet& ground, const LatticeFunction& f);
/// mu = sum_n delta_{gamma(n)}. S* f = mu * f and S f = reflect(mu) * f.
LatticeFunction curve_measure_mu(const SeparatedSystem& sys, const GroundSet& ground);

/// S 1_E and S* 1_F evaluated only where needed, as integer counts.
std::uint64_t count_S(const std::vector<Point>& curve, const PointSet& e, const Point& x);
std::uint64_t count_S_star(const std::vector<Point>& curve, const PointSet& f, const Point& y);

struct MeansReport {
  BigInt pairing;  // <S 1_E, 1_F>
  Rational alpha;  // pairing / |F|
  Rational beta;   // pairing / |E|
};

/// Throws EmptySet when E or F is empty.
MeansReport means(const SeparatedSystem& sys, const GroundSet& ground, const PointSet& e, const PointSet& f);

/// Axis-aligned box prod_j [lo_j, hi_j].
struct Box {
  Point lo;
  Point hi;
  BigInt volume() const;
  bool contains(const Point& p) const;
};

/// A pair (E, F), stored explicitly or as boxes when too large to list.
struct WitnessSets {
  std::string kind;
  std::optional<PointSet> e, f;
  std::optional<Box> e_box, f_box;

  BigInt size_e() const;
  BigInt size_f() const;
};

/// <S 1_E, 1_F> for explicit sets or boxes (interval overlaps for boxes).
BigInt witness_pairing(const SeparatedSystem& sys, const GroundSet& ground, const WitnessSets& w);

enum class RwtForm {
  kDual,     // |E|^{1/p} |F|^{1/q'}
  kDiagonal  // |E|^{1/p} |F|^{1/p}
};

/// <A 1_E, 1_F> / (|E|^{1/p} |F|^{1/q'}) with A = S / |X|.
double rwt_ratio_from(const BigInt& pairing, std::uint64_t size_x, const BigInt& size_e, const BigInt& size_f,
                      const Exponent& p, const Exponent& q, RwtForm form = RwtForm::kDual);
double rwt_ratio(const SeparatedSystem& sys, const GroundSet& ground, const PointSet& e, const PointSet& f,
                 const Exponent& p, const Exponent& q, RwtForm form = RwtForm::kDual);

/// Point-set specs: "points:0,1;2,3", "box:0,0:3,5" (inclusive corners) or
/// "file:PATH" with one point per line, coordinates separated by commas or
/// spaces. Every point must have dim coordinates.
PointSet parse_point_set(const std::string& spec, std::size_t dim);

/// delta: E = {0}, F = -gamma(X). curve: E = gamma(X), F = {0}.
/// box: F = prod [0, L_j] with L_j = max |phi_j| and E the smallest box holding
/// every translate F + gamma(n).
WitnessSets extremal_witnesses(const SeparatedSystem& sys, const GroundSet& ground, const std::string& kind);

struct RandomSearchResult {
  WitnessSets best;
  BigInt pairing;
  double ratio = 0.0;
  std::uint64_t trial = 0;  // index of the winning trial
};

/// Seeded search over `trials` small random (E, F) pairs, maximizing rwt_ratio.
/// Trials are independent, so the result is the same for any thread count.
RandomSearchResult random_witness_search(const SeparatedSystem& sys, const GroundSet& ground, std::uint64_t trials,
                                         std::uint64_t seed, const Exponent& p, const Exponent& q,
                                         unsigned threads = 1);

/// splitmix64 step, used to derive independent per-item seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);
/// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
double unit_draw(std::uint64_t bits);

}  // namespace paucity

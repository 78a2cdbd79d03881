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
#include <optional>
#include <string>
#include <vector>

#include "paucity/averaging.hpp"
#include "paucity/counting.hpp"
#include "paucity/curve.hpp"

namespace paucity {

/// One exact inequality lhs <= rhs (or lhs >= rhs) with its verdict.
struct Check {
  std::string name;
  unsigned index = 0;  // j or t, when the check is indexed
  Rational lhs;
  Rational rhs;
  bool at_least = false;  // true for lhs >= rhs
  bool applicable = true;
  bool holds = true;
  std::string note;
};

Check make_check(std::string name, unsigned index, Rational lhs, Rational rhs, bool at_least);

struct FlowResult {
  MeansReport base;
  std::vector<PointSet> e;  // E_0 .. E_J
  std::vector<PointSet> f;  // F_0 .. F_J
  std::vector<Check> checks;
  bool ok() const;
};

/// E_{j+1} = {y in E_j : S* 1_{F_j}(y) >= beta / 2^{j+1}},
/// F_{j+1} = {x in F_j : S 1_{E_{j+1}}(x) >= alpha / 2^{j+1}}, followed by an
/// exact check of nesting and of the pointwise and mass inequalities.
/// Throws EmptyBase when E or F is empty.
FlowResult flow(const SeparatedSystem& sys, const GroundSet& ground, const PointSet& e, const PointSet& f, unsigned depth);

/// (m_1..m_t; n_1..n_t) with the lattice point y - sum gamma(n) + sum gamma(m).
/// B-level entries carry one more n than m.
struct TowerEntry {
  Tuple m;
  Tuple n;
  Point pos;
  bool slice = false;    // prefix lies in the previous generic set
  bool generic = false;
};

struct TowerLevel {
  unsigned t = 0;
  std::vector<TowerEntry> b;
  std::vector<TowerEntry> a;
  std::uint64_t b_slice = 0, b_generic = 0, b_special = 0;
  std::uint64_t a_slice = 0, a_generic = 0, a_special = 0;
};

struct RefinementTower {
  unsigned s = 0;
  FlowResult flow;
  Point anchor;
  std::vector<TowerLevel> levels;  // t = 1..s
  bool truncated = false;          // stopped at the tuple budget
  std::vector<Check> size_checks;  // |B_1| >= beta/2^s, |A_t| lower bounds
};

struct TowerOptions {
  std::uint64_t budget = 1'000'000;  // stored tuples per level
  std::optional<Point> anchor;       // default: smallest element of E_s
};

/// Throws LinearCurveExcluded for a single linear polynomial and EmptyAnchor
/// when E_s is empty.
RefinementTower build_tower(const SeparatedSystem& sys, const GroundSet& ground, const PointSet& e,
                            const PointSet& f, unsigned s, const TowerOptions& opt = {});

/// |B_{t+1}^sp| <= t K |A_t^g| and |A_t^sp| <= (t+1) K |B_t^g| for every level.
std::vector<Check> verify_pruning_bounds(const RefinementTower& tower, const SeparatedSystem& sys);

/// C = 2^{s+1} (s+1) K_gamma.
Rational threshold_constant(const SeparatedSystem& sys, unsigned s);

/// |A_1^g| >= alpha beta / 2^{2s+1} when alpha, beta >= C (not applicable otherwise).
Check generic_lower_bound(const RefinementTower& tower, const SeparatedSystem& sys);

/// |A_t^g| <= maxnumreps_t(X) |E_{s-t}|; a check is marked not applicable when
/// maxnumreps_t exceeds the budget.
std::vector<Check> union_bound_checks(const RefinementTower& tower, const SeparatedSystem& sys,
                                      const GroundSet& ground, const CountOptions& opt = {});

/// Rebuilds the tower from every y in E_s and reports whether the pruning
/// verdicts ever change.
struct AnchorInvariance {
  std::uint64_t anchors = 0;
  bool invariant = true;
};
AnchorInvariance anchor_invariance(const SeparatedSystem& sys, const GroundSet& ground, const PointSet& e,
                                   const PointSet& f, unsigned s, const TowerOptions& opt = {});

struct Certificate {
  unsigned s = 0;
  MeansReport means;
  Rational threshold;      // C
  std::string branch;      // small_alpha | small_beta | tower
  Rational lhs;            // alpha^s beta^{s-1}
  Rational lhs_full;       // alpha^s beta^s
  MaxReps maxreps;         // maxnumreps_{s-1}
  BigInt rhs;              // (|X|^{s-1} + |X| maxreps) |E|
  Rational constant;       // lhs / rhs
  Rational constant_full;  // lhs_full / rhs
  std::optional<RefinementTower> tower;
  std::vector<Check> checks;
};

Certificate refinement_certificate(const SeparatedSystem& sys, const GroundSet& ground, const PointSet& e,
                                   const PointSet& f, unsigned s, const CountOptions& count_opt = {},
                                   const TowerOptions& tower_opt = {});

}  // namespace paucity

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

#include "paucity/refinement.hpp"

#include <algorithm>
#include <map>

#include "paucity/error.hpp"

namespace paucity {

namespace {

Rational rat(std::uint64_t v) { return Rational(BigInt(static_cast<unsigned long>(v))); }

Rational pow2(unsigned k) { return Rational(BigInt(1) << k); }

Rational rpow_q(const Rational& base, unsigned k) {
  Rational out = 1;
  for (unsigned i = 0; i < k; ++i) out *= base;
  return out;
}

std::uint64_t pairing_of(const std::vector<Point>& curve, const PointSet& e, const PointSet& f) {
  std::uint64_t total = 0;
  for (const auto& x : f) total += count_S(curve, e, x);
  return total;
}

}  // namespace

Check make_check(std::string name, unsigned index, Rational lhs, Rational rhs, bool at_least) {
  Check c;
  c.name = std::move(name);
  c.index = index;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.at_least = at_least;
  c.holds = at_least ? c.lhs >= c.rhs : c.lhs <= c.rhs;
  return c;
}

bool FlowResult::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return !c.applicable || c.holds; });
}

FlowResult flow(const SeparatedSystem& sys, const GroundSet& ground, const PointSet& e, const PointSet& f,
                unsigned depth) {
  if (e.empty() || f.empty()) fail(Errc::kEmptyBase, "the flowing construction needs nonempty E and F");
  const auto curve = curve_points(sys, ground);
  FlowResult out;
  out.base = means(sys, ground, e, f);
  const Rational& alpha = out.base.alpha;
  const Rational& beta = out.base.beta;
  out.e.push_back(e);
  out.f.push_back(f);
  for (unsigned j = 0; j < depth; ++j) {
    const Rational beta_cut = beta / pow2(j + 1);
    const Rational alpha_cut = alpha / pow2(j + 1);
    PointSet next_e, next_f;
    for (const auto& y : out.e[j]) {
      if (rat(count_S_star(curve, out.f[j], y)) >= beta_cut) next_e.insert(y);
    }
    for (const auto& x : out.f[j]) {
      if (rat(count_S(curve, next_e, x)) >= alpha_cut) next_f.insert(x);
    }
    out.e.push_back(std::move(next_e));
    out.f.push_back(std::move(next_f));
  }

  const Rational pairing0(out.base.pairing);
  for (unsigned j = 0; j <= depth; ++j) {
    if (j > 0) {
      auto outside = [](const PointSet& inner, const PointSet& outer) {
        std::uint64_t c = 0;
        for (const auto& p : inner) c += outer.count(p) ? 0 : 1;
        return c;
      };
      out.checks.push_back(make_check("nesting E", j, rat(outside(out.e[j], out.e[j - 1])), 0, false));
      out.checks.push_back(make_check("nesting F", j, rat(outside(out.f[j], out.f[j - 1])), 0, false));

      // (2.2): S 1_{E_j} >= alpha / 2^j on F_j
      std::optional<std::uint64_t> min_left;
      for (const auto& x : out.f[j]) {
        auto v = count_S(curve, out.e[j], x);
        min_left = std::min(min_left.value_or(v), v);
      }
      Check left = make_check("left mean", j, rat(min_left.value_or(0)), alpha / pow2(j), true);
      if (!min_left) {
        left.holds = true;
        left.note = "F_j empty";
      }
      out.checks.push_back(left);

      // (2.3): S* 1_{F_{j-1}} >= beta / 2^j on E_j
      std::optional<std::uint64_t> min_right;
      for (const auto& y : out.e[j]) {
        auto v = count_S_star(curve, out.f[j - 1], y);
        min_right = std::min(min_right.value_or(v), v);
      }
      Check right = make_check("right mean", j, rat(min_right.value_or(0)), beta / pow2(j), true);
      if (!min_right) {
        right.holds = true;
        right.note = "E_j empty";
      }
      out.checks.push_back(right);
    }
    // (2.4)
    out.checks.push_back(
        make_check("density", j, rat(pairing_of(curve, out.e[j], out.f[j])), pairing0 / pow2(j), true));
  }
  if (out.base.pairing > 0) {
    Check pos = make_check("nonempty", depth, rat(std::min(out.e[depth].size(), out.f[depth].size())), 1, true);
    out.checks.push_back(pos);
  }
  return out;
}

RefinementTower build_tower(const SeparatedSystem& sys, const GroundSet& ground, const PointSet& e,
                            const PointSet& f, unsigned s, const TowerOptions& opt) {
  if (sys.is_single_linear()) fail(Errc::kLinearCurveExcluded, "the tower excludes a single linear polynomial");
  if (s < 1) fail(Errc::kInvalidInput, "s must be at least 1");
  RefinementTower tower;
  tower.s = s;
  tower.flow = flow(sys, ground, e, f, s);
  const auto& es = tower.flow.e;
  const auto& fs = tower.flow.f;
  if (es[s].empty()) fail(Errc::kEmptyAnchor, "E_s is empty (alpha = 0)");
  if (opt.anchor) {
    if (!es[s].count(*opt.anchor)) fail(Errc::kInvalidInput, "the requested anchor is not in E_s");
    tower.anchor = *opt.anchor;
  } else {
    tower.anchor = *es[s].begin();
  }
  const Point& y = tower.anchor;
  const auto& elems = ground.elements();
  const auto curve = curve_points(sys, ground);
  std::map<std::int64_t, const Point*> gamma;
  for (std::size_t i = 0; i < elems.size(); ++i) gamma[elems[i]] = &curve[i];
  // phi(u) == phi(v) for some phi
  auto collide = [&](std::int64_t u, std::int64_t v) {
    const Point& gu = *gamma[u];
    const Point& gv = *gamma[v];
    for (std::size_t j = 0; j < gu.size(); ++j) {
      if (gu[j] == gv[j]) return true;
    }
    return false;
  };
  auto over_budget = [&](std::size_t n) { return n > opt.budget; };

  const Rational& alpha = tower.flow.base.alpha;
  const Rational& beta = tower.flow.base.beta;

  for (unsigned t = 1; t <= s; ++t) {
    TowerLevel level;
    level.t = t;
    const PointSet& f_target = fs[s - t];
    const PointSet& e_target = es[s - t];
    // B_t
    if (t == 1) {
      for (auto n1 : elems) {
        Point pos = sub_points(y, *gamma[n1]);
        if (f_target.count(pos)) level.b.push_back({{}, {n1}, std::move(pos), true, true});
      }
    } else {
      for (const auto& prev : tower.levels.back().a) {
        for (auto nn : elems) {
          Point pos = sub_points(prev.pos, *gamma[nn]);
          if (!f_target.count(pos)) continue;
          TowerEntry b{prev.m, prev.n, std::move(pos), prev.generic, false};
          b.n.push_back(nn);
          if (b.slice) {
            b.generic = std::none_of(prev.m.begin(), prev.m.end(), [&](std::int64_t mj) { return collide(nn, mj); });
          }
          level.b.push_back(std::move(b));
          if (over_budget(level.b.size())) break;
        }
        if (over_budget(level.b.size())) break;
      }
    }
    if (over_budget(level.b.size())) {
      tower.truncated = true;
      break;
    }
    // A_t
    for (const auto& b : level.b) {
      for (auto mm : elems) {
        Point pos = add_points(b.pos, *gamma[mm]);
        if (!e_target.count(pos)) continue;
        TowerEntry a{b.m, b.n, std::move(pos), b.generic, false};
        a.m.push_back(mm);
        if (a.slice) {
          if (t == 1) {
            a.generic = !collide(mm, b.n[0]);
          } else {
            bool clash = false;
            for (std::size_t j = 0; j + 1 < a.n.size() && !clash; ++j) clash = collide(mm, a.n[j]);
            a.generic = !clash && a.pos != y;
          }
        }
        level.a.push_back(std::move(a));
        if (over_budget(level.a.size())) break;
      }
      if (over_budget(level.a.size())) break;
    }
    if (over_budget(level.a.size())) {
      tower.truncated = true;
      break;
    }
    for (const auto& b : level.b) {
      level.b_slice += b.slice;
      level.b_generic += b.generic;
    }
    for (const auto& a : level.a) {
      level.a_slice += a.slice;
      level.a_generic += a.generic;
    }
    level.b_special = level.b_slice - level.b_generic;
    level.a_special = level.a_slice - level.a_generic;

    if (t == 1) {
      tower.size_checks.push_back(make_check("|B_1| lower bound", 1, rat(level.b.size()), beta / pow2(s), true));
    }
    unsigned exponent = 0;
    for (unsigned i = 0; i < t; ++i) exponent += 2 * (s - i);
    tower.size_checks.push_back(
        make_check("|A_t| lower bound", t, rat(level.a.size()), rpow_q(alpha * beta, t) / pow2(exponent), true));
    tower.levels.push_back(std::move(level));
  }
  return tower;
}

std::vector<Check> verify_pruning_bounds(const RefinementTower& tower, const SeparatedSystem& sys) {
  const Rational k = rat(sys.degree_product());
  std::vector<Check> out;
  for (std::size_t i = 0; i < tower.levels.size(); ++i) {
    const auto& lv = tower.levels[i];
    const unsigned t = lv.t;
    out.push_back(make_check("|A_t^sp| <= (t+1) K |B_t^g|", t, rat(lv.a_special), Rational(t + 1) * k * rat(lv.b_generic),
                             false));
    if (i + 1 < tower.levels.size()) {
      const auto& next = tower.levels[i + 1];
      out.push_back(make_check("|B_{t+1}^sp| <= t K |A_t^g|", t, rat(next.b_special), Rational(t) * k * rat(lv.a_generic),
                               false));
    }
  }
  return out;
}

Rational threshold_constant(const SeparatedSystem& sys, unsigned s) {
  return pow2(s + 1) * Rational(s + 1) * rat(sys.degree_product());
}

Check generic_lower_bound(const RefinementTower& tower, const SeparatedSystem& sys) {
  const Rational c = threshold_constant(sys, tower.s);
  const auto& base = tower.flow.base;
  const std::uint64_t a1g = tower.levels.empty() ? 0 : tower.levels[0].a_generic;
  Check chk = make_check("|A_1^g| >= alpha beta / 2^{2s+1}", 1, rat(a1g), base.alpha * base.beta / pow2(2 * tower.s + 1),
                         true);
  if (base.alpha < c || base.beta < c) {
    chk.applicable = false;
    chk.note = "alpha or beta below C";
  }
  return chk;
}

std::vector<Check> union_bound_checks(const RefinementTower& tower, const SeparatedSystem& sys,
                                      const GroundSet& ground, const CountOptions& opt) {
  std::vector<Check> out;
  for (const auto& lv : tower.levels) {
    const Rational e_size = rat(tower.flow.e[tower.s - lv.t].size());
    try {
      MaxReps mr = maxnumreps(sys, ground, lv.t, opt);
      out.push_back(make_check("|A_t^g| <= maxnumreps_t |E_{s-t}|", lv.t, rat(lv.a_generic), rat(mr.count) * e_size,
                               false));
    } catch (const Error& err) {
      if (err.code() != Errc::kBudgetExceeded) throw;
      Check c = make_check("|A_t^g| <= maxnumreps_t |E_{s-t}|", lv.t, rat(lv.a_generic), 0, false);
      c.applicable = false;
      c.holds = true;
      c.note = "maxnumreps over budget";
      out.push_back(c);
    }
  }
  return out;
}

AnchorInvariance anchor_invariance(const SeparatedSystem& sys, const GroundSet& ground, const PointSet& e,
                                   const PointSet& f, unsigned s, const TowerOptions& opt) {
  AnchorInvariance out;
  const FlowResult fl = flow(sys, ground, e, f, s);
  std::optional<std::vector<bool>> first;
  for (const auto& y : fl.e[s]) {
    TowerOptions o = opt;
    o.anchor = y;
    auto tower = build_tower(sys, ground, e, f, s, o);
    std::vector<bool> verdicts;
    for (const auto& c : verify_pruning_bounds(tower, sys)) verdicts.push_back(c.holds);
    ++out.anchors;
    if (!first) {
      first = verdicts;
    } else if (*first != verdicts) {
      out.invariant = false;
    }
  }
  return out;
}

Certificate refinement_certificate(const SeparatedSystem& sys, const GroundSet& ground, const PointSet& e,
                                   const PointSet& f, unsigned s, const CountOptions& count_opt,
                                   const TowerOptions& tower_opt) {
  if (sys.is_single_linear()) fail(Errc::kLinearCurveExcluded, "the certificate excludes a single linear polynomial");
  if (s < 1) fail(Errc::kInvalidInput, "s must be at least 1");
  Certificate cert;
  cert.s = s;
  cert.means = means(sys, ground, e, f);
  cert.threshold = threshold_constant(sys, s);
  const Rational& alpha = cert.means.alpha;
  const Rational& beta = cert.means.beta;
  cert.lhs = rpow_q(alpha, s) * rpow_q(beta, s - 1);
  cert.lhs_full = rpow_q(alpha, s) * rpow_q(beta, s);
  if (s > 1) cert.maxreps = maxnumreps(sys, ground, s - 1, count_opt);
  const BigInt x(static_cast<unsigned long>(ground.size()));
  cert.rhs = (ipow(x, s - 1) + x * BigInt(static_cast<unsigned long>(cert.maxreps.count))) *
             BigInt(static_cast<unsigned long>(e.size()));
  cert.constant = cert.lhs / Rational(cert.rhs);
  cert.constant_full = cert.lhs_full / Rational(cert.rhs);
  if (alpha < cert.threshold) {
    cert.branch = "small_alpha";
  } else if (beta < cert.threshold) {
    cert.branch = "small_beta";
  } else {
    cert.branch = "tower";
    cert.tower = build_tower(sys, ground, e, f, s, tower_opt);
    for (auto& c : cert.tower->flow.checks) cert.checks.push_back(c);
    for (auto& c : cert.tower->size_checks) cert.checks.push_back(c);
    for (auto& c : verify_pruning_bounds(*cert.tower, sys)) cert.checks.push_back(c);
    cert.checks.push_back(generic_lower_bound(*cert.tower, sys));
    for (auto& c : union_bound_checks(*cert.tower, sys, ground, count_opt)) cert.checks.push_back(c);
  }
  return cert;
}

}  // namespace paucity

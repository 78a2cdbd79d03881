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

// Command-line front end for the paucity library.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "paucity/averaging.hpp"
#include "paucity/counting.hpp"
#include "paucity/elimination.hpp"
#include "paucity/error.hpp"
#include "paucity/harness.hpp"
#include "paucity/refinement.hpp"

namespace {

using nlohmann::ordered_json;
using namespace paucity;

struct Globals {
  std::uint64_t seed = 1;
  std::uint64_t budget = 10'000'000;
  unsigned threads = 1;
  std::string out;
  std::string format = "json";
};

// Raised for verdicts that fail (exit 1), as opposed to bad input.
struct AssertionFailure {
  std::string what;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::kIo, "cannot write " + path);
  out << text;
}

void emit_json(const ordered_json& j, const Globals& g) { emit(j.dump(2) + "\n", g.out); }

ordered_json fraction(const Rational& q) {
  return ordered_json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

ordered_json big_list(const std::vector<BigInt>& v) {
  ordered_json j = ordered_json::array();
  for (const auto& x : v) j.push_back(x.get_str());
  return j;
}

std::vector<BigInt> parse_target(const std::string& text) {
  std::vector<BigInt> a;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) a.push_back(parse_bigint(item));
  return a;
}

ordered_json check_json(const Check& c) {
  ordered_json j{{"name", c.name}, {"index", c.index}, {"lhs", fraction(c.lhs)}, {"rhs", fraction(c.rhs)},
                 {"relation", c.at_least ? ">=" : "<="}, {"applicable", c.applicable}, {"holds", c.holds}};
  if (c.applicable) j["margin"] = fraction(c.at_least ? Rational(c.lhs - c.rhs) : Rational(c.rhs - c.lhs));
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

ordered_json tuple_json(const Tuple& t) {
  ordered_json j = ordered_json::array();
  for (auto x : t) j.push_back(x);
  return j;
}

// --- subcommands ---

void curve_info(const std::string& curve, const Globals& g) {
  auto sys = parse_curve_spec(curve);
  ordered_json j;
  j["curve"] = sys.describe();
  j["polys"] = ordered_json::parse(sys.to_json())["polys"];
  j["r"] = sys.r();
  j["degrees"] = sys.degrees();
  j["D"] = sys.total_degree();
  j["K"] = sys.degree_product();
  j["jacobian_cofactor_degree"] = sys.jacobian_cofactor_degree();
  j["critical_exponent"] = fraction(critical_exponent(sys));
  j["single_linear"] = sys.is_single_linear();
  emit_json(j, g);
}

struct CountArgs {
  std::string curve, set, a, mode = "brute";
  unsigned s = 0;
  bool witnesses = false, use_p = false;
};

void count(const CountArgs& args, const Globals& g) {
  SystemInstance inst{parse_curve_spec(args.curve), parse_ground_set(args.set), 0, parse_target(args.a)};
  inst.s = args.s == 0 ? static_cast<unsigned>(inst.system.r()) : args.s;
  inst.check();
  CountOptions opt;
  opt.budget = g.budget;
  opt.threads = g.threads;
  opt.collect = args.witnesses;
  const auto start = std::chrono::steady_clock::now();
  SolutionTally tally;
  std::string mode = args.mode;
  const auto& sys = inst.system;
  if (args.mode == "brute") {
    tally = brute_count(inst, opt);
  } else if (args.mode == "partition") {
    tally = case_partition(inst, EliminationKit::build(sys, EliminantStrategy::kAuto, args.use_p), opt);
  } else if (args.mode == "guided") {
    if (sys.r() == 1 && inst.s == 1) {
      mode = "guided-base1";
      tally = guided_count_base1(sys.poly(0), inst.ground, inst.a[0], opt);
    } else if (sys.r() == 2 && inst.s == 2 && sys.degrees()[0] == 1) {
      mode = "guided-base2";
      tally = guided_count_base2(sys, inst.ground, inst.a, opt);
    } else if (inst.s == sys.r()) {
      mode = "guided-case3";
      tally = guided_count_case3(inst, EliminationKit::build(sys, EliminantStrategy::kAuto, args.use_p), opt);
    } else {
      fail(Errc::kInvalidInput, "no guided enumerator for s != r outside the base cases");
    }
  } else {
    fail(Errc::kInvalidInput, "unknown count mode: " + args.mode);
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  ordered_json j;
  j["instance"] = {{"curve", sys.describe()},
                   {"polys", ordered_json::parse(sys.to_json())["polys"]},
                   {"set", args.set},
                   {"size_x", inst.ground.size()},
                   {"s", inst.s},
                   {"a", big_list(inst.a)}};
  j["mode"] = mode;
  j["count"] = tally.count;
  if (tally.partition) j["partition"] = *tally.partition;
  if (tally.boundary_disagreements) j["boundary_disagreements"] = *tally.boundary_disagreements;
  if (tally.witnesses) {
    ordered_json w = ordered_json::array();
    for (const auto& p : *tally.witnesses) w.push_back({{"m", tuple_json(p.m)}, {"n", tuple_json(p.n)}});
    j["witnesses"] = w;
  }
  if (!tally.note.empty()) j["note"] = tally.note;
  j["elapsed_ms"] = ms;
  j["budget"] = g.budget;
  emit_json(j, g);
}

void maxreps(const std::string& curve, const std::string& set, unsigned s, const Globals& g) {
  auto sys = parse_curve_spec(curve);
  auto ground = parse_ground_set(set);
  if (s == 0) s = static_cast<unsigned>(sys.r());
  CountOptions opt;
  opt.budget = g.budget;
  opt.threads = g.threads;
  auto res = maxnumreps(sys, ground, s, opt);
  ordered_json j{{"curve", sys.describe()}, {"set", set}, {"size_x", ground.size()}, {"s", s}, {"maxnumreps", res.count}};
  j["argmax"] = res.argmax ? big_list(*res.argmax) : ordered_json(nullptr);
  emit_json(j, g);
}

void elim(const std::string& curve, const std::string& strategy, bool use_p, const Globals& g) {
  auto sys = parse_curve_spec(curve);
  auto kit = EliminationKit::build(sys, parse_strategy(strategy), use_p, g.budget < kDefaultTermBudget ? g.budget : kDefaultTermBudget);
  ordered_json j;
  j["curve"] = sys.describe();
  j["V"] = kit.vandermonde.to_string();
  j["P"] = kit.cofactor.to_string();
  j["P_in_T"] = kit.cofactor_in_t.to_string();
  j["Q"] = kit.q ? ordered_json(kit.q->to_string()) : ordered_json(nullptr);
  j["R"] = kit.r ? ordered_json(kit.r->to_string()) : ordered_json(nullptr);
  j["strategy"] = kit.strategy;
  if (!kit.r_error.empty()) j["R_error"] = kit.r_error;
  ordered_json verdicts;
  if (kit.q) {
    auto c = check_eliminant(*kit.q, sys);
    verdicts["vanishes_below_r"] = c.vanishes_below;
    verdicts["nonzero_at_r"] = c.nonzero_at_r;
  }
  if (kit.q && kit.r) {
    Polynomial prod(1L);
    for (std::size_t i = 1; i <= sys.r(); ++i) prod *= Polynomial::variable(x_var(i)) - Polynomial::variable(kYVar);
    verdicts["R_factorization"] = shifted_eliminant(sys, *kit.q) == *kit.r * prod;
  }
  j["verdicts"] = verdicts;
  emit_json(j, g);
}

struct RefineArgs {
  std::string curve, set, e, f;
  unsigned s = 0, depth = 0;
  bool exhaustive_anchor = false;
};

void refine(const RefineArgs& args, const Globals& g) {
  auto sys = parse_curve_spec(args.curve);
  auto ground = parse_ground_set(args.set);
  auto e = parse_point_set(args.e, sys.r());
  auto f = parse_point_set(args.f, sys.r());
  const unsigned s = args.s == 0 ? static_cast<unsigned>(sys.r()) : args.s;
  CountOptions copt;
  copt.budget = g.budget;
  copt.threads = g.threads;
  ordered_json j;
  j["curve"] = sys.describe();
  j["size_x"] = ground.size();
  j["size_E"] = e.size();
  j["size_F"] = f.size();
  j["s"] = s;
  bool all_hold = true;
  auto checks_json = [&](const std::vector<Check>& checks) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
      arr.push_back(check_json(c));
      if (c.applicable && !c.holds) all_hold = false;
    }
    return arr;
  };
  if (args.depth > 0) {
    auto fr = flow(sys, ground, e, f, args.depth);
    ordered_json fj;
    fj["depth"] = args.depth;
    ordered_json sizes = ordered_json::array();
    for (std::size_t i = 0; i < fr.e.size(); ++i) sizes.push_back({{"E", fr.e[i].size()}, {"F", fr.f[i].size()}});
    fj["sizes"] = sizes;
    fj["checks"] = checks_json(fr.checks);
    j["flow"] = fj;
  }
  auto cert = refinement_certificate(sys, ground, e, f, s, copt);
  ordered_json cj;
  cj["pairing"] = cert.means.pairing.get_str();
  cj["alpha"] = fraction(cert.means.alpha);
  cj["beta"] = fraction(cert.means.beta);
  cj["threshold_C"] = fraction(cert.threshold);
  cj["branch"] = cert.branch;
  cj["lhs"] = fraction(cert.lhs);
  cj["lhs_full"] = fraction(cert.lhs_full);
  cj["maxnumreps"] = cert.maxreps.count;
  cj["rhs"] = cert.rhs.get_str();
  cj["constant"] = fraction(cert.constant);
  cj["constant_full"] = fraction(cert.constant_full);
  cj["checks"] = checks_json(cert.checks);
  if (cert.tower) {
    const auto& tw = *cert.tower;
    ordered_json tj;
    tj["anchor"] = tw.anchor;
    tj["truncated"] = tw.truncated;
    ordered_json levels = ordered_json::array();
    for (const auto& lv : tw.levels) {
      levels.push_back({{"t", lv.t},
                        {"B", {{"size", lv.b.size()}, {"slice", lv.b_slice}, {"generic", lv.b_generic}, {"special", lv.b_special}}},
                        {"A", {{"size", lv.a.size()}, {"slice", lv.a_slice}, {"generic", lv.a_generic}, {"special", lv.a_special}}}});
    }
    tj["levels"] = levels;
    tj["size_checks"] = checks_json(tw.size_checks);
    tj["pruning"] = checks_json(verify_pruning_bounds(tw, sys));
    tj["generic_lower_bound"] = checks_json({generic_lower_bound(tw, sys)});
    tj["union_bound"] = checks_json(union_bound_checks(tw, sys, ground, copt));
    cj["tower"] = tj;
  }
  j["certificate"] = cj;
  if (args.exhaustive_anchor) {
    auto inv = anchor_invariance(sys, ground, e, f, s);
    j["anchor_invariance"] = {{"anchors", inv.anchors}, {"invariant", inv.invariant}};
    if (!inv.invariant) all_hold = false;
  }
  j["all_hold"] = all_hold;
  emit_json(j, g);
  if (!all_hold) throw AssertionFailure{"an inequality failed"};
}

int suite(const std::string& name, const Globals& g) {
  auto ids = suite_criteria(name);
  if (!ids) {
    std::cerr << "unknown suite: " << name << " (identities, oracle, refinement, scans, operators, all)\n";
    return static_cast<int>(ExitCode::kUsage);
  }
  SuiteOptions opt;
  opt.seed = g.seed;
  opt.threads = g.threads;
  ordered_json results = ordered_json::array();
  bool ok = true;
  for (int id : *ids) {
    auto r = run_criterion(id, opt);
    std::cerr << (r.passed ? "PASS" : "FAIL") << "  " << r.id << " " << r.name << ": " << r.detail << "\n";
    results.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    ok = ok && r.passed;
  }
  emit_json({{"suite", name}, {"seed", g.seed}, {"passed", ok}, {"criteria", results}}, g);
  return static_cast<int>(ok ? ExitCode::kOk : ExitCode::kAssertion);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting, elimination and averaging experiments for separated polynomial curves"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--budget", g.budget, "Work budget (table entries or terms)")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
  app.add_option("--out", g.out, "Output file (default stdout)");
  app.add_option("--format", g.format, "Scan output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  std::string curve = "moment:2", set = "range:10", strategy = "auto";
  auto* info = app.add_subcommand("curve-info", "Degrees, D, K and the critical exponent of a curve");
  info->add_option("--curve", curve, "Curve spec")->required();

  CountArgs ca;
  auto* cnt = app.add_subcommand("count", "Count solutions of one system");
  cnt->add_option("--curve", ca.curve, "Curve spec")->required();
  cnt->add_option("--set", ca.set, "Ground set spec")->required();
  cnt->add_option("--s", ca.s, "Number of summands (default r)");
  cnt->add_option("--a", ca.a, "Target vector, e.g. 1,3")->required();
  cnt->add_option("--mode", ca.mode, "brute | guided | partition")->check(CLI::IsMember({"brute", "guided", "partition"}));
  cnt->add_flag("--witnesses", ca.witnesses, "List the solution pairs");
  cnt->add_flag("--use-P", ca.use_p, "Use the Jacobian cofactor instead of the eliminant");

  unsigned mr_s = 0;
  auto* mr = app.add_subcommand("maxreps", "Largest representation count over targets with nonzero coordinates");
  mr->add_option("--curve", curve, "Curve spec")->required();
  mr->add_option("--set", set, "Ground set spec")->required();
  mr->add_option("--s", mr_s, "Number of summands (default r)");

  bool elim_p = false;
  auto* el = app.add_subcommand("elim", "Vandermonde, cofactor, eliminant and quotient");
  el->add_option("--curve", curve, "Curve spec")->required();
  el->add_option("--strategy", strategy, "auto | newton | resultant")->capture_default_str();
  el->add_flag("--use-P", elim_p, "Build the quotient from the cofactor");

  RefineArgs ra;
  auto* rf = app.add_subcommand("refine", "Flowing sets, refinement tower and certificate");
  rf->add_option("--curve", ra.curve, "Curve spec")->required();
  rf->add_option("--set", ra.set, "Ground set spec")->required();
  rf->add_option("--E", ra.e, "Point set spec for E")->required();
  rf->add_option("--F", ra.f, "Point set spec for F")->required();
  rf->add_option("--s", ra.s, "Tower height (default r)");
  rf->add_option("--depth", ra.depth, "Also report a flow of this depth");
  rf->add_flag("--exhaustive-anchor", ra.exhaustive_anchor, "Rebuild the tower from every anchor");

  ImprovingScanConfig ic;
  std::string ip, iq;
  auto* im = app.add_subcommand("improving", "Restricted weak type ratios for witness sets");
  im->add_option("--curve", ic.curve_spec, "Curve spec")->required();
  im->add_option("--set", ic.set_specs, "Ground set specs")->required();
  im->add_option("--p", ip, "Exponent p (default 2 - 1/(r+1))");
  im->add_option("--q", iq, "Exponent q (default p')");
  im->add_option("--witness", ic.witnesses, "delta | curve | box | random:k,seed");
  double max_c = 0;
  im->add_option("--max-constant", max_c, "Fail when a ratio exceeds this multiple of the bound");

  PaucityScanConfig pc;
  std::string sampling = "uniform";
  std::vector<std::string> targets;
  auto* ps = app.add_subcommand("paucity-scan", "Representation counts against |X|^{s-1}");
  ps->add_option("--curve", pc.curve_spec, "Curve spec")->required();
  ps->add_option("--set", pc.set_specs, "Ground set specs")->required();
  ps->add_option("--s", pc.s, "Number of summands (default r)");
  ps->add_option("--samples", pc.samples, "Targets per ground set")->capture_default_str();
  ps->add_option("--sampling", sampling, "realized | uniform | explicit")->capture_default_str();
  ps->add_option("--a", targets, "Explicit targets (implies explicit sampling)");

  std::string suite_name;
  auto* st = app.add_subcommand("suite", "Run an acceptance bundle");
  st->add_option("name", suite_name, "identities | oracle | refinement | scans | operators | all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::kUsage);
  }

  try {
    if (*info) curve_info(curve, g);
    if (*cnt) count(ca, g);
    if (*mr) maxreps(curve, set, mr_s, g);
    if (*el) elim(curve, strategy, elim_p, g);
    if (*rf) refine(ra, g);
    if (*im) {
      if (!ip.empty()) ic.p = ip;
      if (!iq.empty()) ic.q = iq;
      if (ic.witnesses.empty()) ic.witnesses = {"delta", "curve", "box"};
      if (max_c > 0) ic.max_ratio_constant = max_c;
      ic.threads = g.threads;
      auto rep = improving_scan(ic);
      rep.write(g.out, g.format);
      if (rep.failed) throw AssertionFailure{"a witness ratio exceeded the bound"};
    }
    if (*ps) {
      pc.sampling = parse_sampling(sampling);
      for (const auto& a : targets) pc.explicit_targets.push_back(parse_target(a));
      if (!targets.empty()) pc.sampling = SamplingPolicy::kExplicit;
      pc.seed = g.seed;
      pc.budget = g.budget;
      pc.threads = g.threads;
      paucity_scan(pc).write(g.out, g.format);
    }
    if (*st) return suite(suite_name, g);
  } catch (const AssertionFailure& e) {
    std::cerr << "assertion failed: " << e.what << "\n";
    return static_cast<int>(ExitCode::kAssertion);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == Errc::kBudgetExceeded || e.code() == Errc::kDegreeBudgetExceeded) {
      return static_cast<int>(ExitCode::kBudget);
    }
    return static_cast<int>(ExitCode::kUsage);
  }
  return static_cast<int>(ExitCode::kOk);
}

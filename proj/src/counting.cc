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

#include "paucity/counting.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>
#include <variant>

#include "paucity/error.hpp"
#include "paucity/numtheory.hpp"
#include "paucity/parallel.hpp"

namespace paucity {

void SystemInstance::check() const {
  if (s < 1) fail(Errc::kInvalidInput, "s must be at least 1");
  if (a.size() != system.r()) {
    fail(Errc::kInvalidInput, "target has " + std::to_string(a.size()) + " coordinates, curve has r = " +
                                  std::to_string(system.r()));
  }
}

namespace {

constexpr std::size_t kChunk = 1024;

std::uint64_t checked_power(std::uint64_t base, unsigned exp, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && total > budget / base) {
      fail(Errc::kBudgetExceeded, std::to_string(base) + "^" + std::to_string(exp) + " tuples exceed the budget of " +
                                      std::to_string(budget));
    }
    total *= base;
  }
  if (total > budget) fail(Errc::kBudgetExceeded, "tuple count exceeds the budget");
  return total;
}

// phi_j(x) for every x in the ground set, indexed by position.
struct ValueTable {
  std::vector<std::int64_t> elems;
  std::vector<std::vector<BigInt>> vals;  // [j][idx]

  ValueTable(const SeparatedSystem& sys, const GroundSet& ground) : elems(ground.elements()) {
    vals.resize(sys.r());
    for (std::size_t j = 0; j < sys.r(); ++j) {
      vals[j].reserve(elems.size());
      for (auto x : elems) vals[j].push_back(sys.value(j, from_i64(x)));
    }
  }
  std::ptrdiff_t index_of(std::int64_t x) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), x);
    if (it == elems.end() || *it != x) return -1;
    return it - elems.begin();
  }
  bool contains(std::int64_t x) const { return index_of(x) >= 0; }
  // sum_i phi_j(n_i) - sum_i phi_j(m_i) == a_j for every j
  bool solves(const Tuple& m, const Tuple& n, const std::vector<BigInt>& a) const {
    for (std::size_t j = 0; j < vals.size(); ++j) {
      BigInt d = 0;
      for (auto x : n) d += vals[j][static_cast<std::size_t>(index_of(x))];
      for (auto x : m) d -= vals[j][static_cast<std::size_t>(index_of(x))];
      if (d != a[j]) return false;
    }
    return true;
  }
  // decodes a mixed-radix id into a tuple; the first coordinate is most significant
  Tuple decode(std::uint64_t id, unsigned s) const {
    Tuple t(s);
    const auto base = static_cast<std::uint64_t>(elems.size());
    for (unsigned i = s; i-- > 0;) {
      t[i] = elems[id % base];
      id /= base;
    }
    return t;
  }
};

template <class V>
struct HashFor;
template <>
struct HashFor<std::int64_t> {
  using type = I64VectorHash;
};
template <>
struct HashFor<BigInt> {
  using type = BigIntVectorHash;
};

template <class V>
V convert(const BigInt& x);
template <>
std::int64_t convert<std::int64_t>(const BigInt& x) {
  return x.get_si();
}
template <>
BigInt convert<BigInt>(const BigInt& x) {
  return x;
}

inline BigInt widen(std::int64_t x) { return from_i64(x); }
inline const BigInt& widen(const BigInt& x) { return x; }

// Values fit in int64 when every s-fold sum stays below 2^60, leaving room for
// adding a target of magnitude up to 2^61.
constexpr long kHeadroomBits = 60;

bool fits_headroom(const ValueTable& t, unsigned s) {
  BigInt limit = BigInt(1) << kHeadroomBits;
  for (const auto& row : t.vals) {
    for (const auto& v : row) {
      if (abs(v) * s >= limit) return false;
    }
  }
  return true;
}

bool target_in_range(const std::vector<BigInt>& a) {
  BigInt limit = BigInt(1) << (kHeadroomBits + 1);
  return std::all_of(a.begin(), a.end(), [&](const BigInt& x) { return abs(x) < limit; });
}

template <class V>
struct SumTable {
  using Key = std::vector<V>;
  using Hash = typename HashFor<V>::type;
  std::unordered_map<Key, std::uint64_t, Hash> counts;
  std::unordered_map<Key, std::vector<std::uint64_t>, Hash> ids;
  std::vector<std::pair<Key, std::uint64_t>> flat;  // sorted by key

  void build(const ValueTable& t, unsigned s, std::uint64_t total, bool keep) {
    const std::size_t r = t.vals.size();
    std::vector<std::vector<V>> vals(r);
    for (std::size_t j = 0; j < r; ++j) {
      for (const auto& v : t.vals[j]) vals[j].push_back(convert<V>(v));
    }
    const auto base = static_cast<std::uint64_t>(t.elems.size());
    std::vector<std::size_t> digit(s, 0);
    Key sum(r);
    for (std::uint64_t id = 0; id < total; ++id) {
      for (std::size_t j = 0; j < r; ++j) {
        V acc = 0;
        for (unsigned i = 0; i < s; ++i) acc += vals[j][digit[i]];
        sum[j] = acc;
      }
      ++counts[sum];
      if (keep) ids[sum].push_back(id);
      for (unsigned i = s; i-- > 0;) {
        if (++digit[i] < base) break;
        digit[i] = 0;
      }
    }
    flat.assign(counts.begin(), counts.end());
    std::sort(flat.begin(), flat.end());
  }

  std::uint64_t count(const std::vector<BigInt>& a, unsigned threads) const {
    Key shift;
    for (const auto& x : a) shift.push_back(convert<V>(x));
    std::vector<std::uint64_t> partial((flat.size() + kChunk - 1) / kChunk, 0);
    parallel_chunks(flat.size(), kChunk, threads, [&](std::size_t b, std::size_t e, std::size_t c) {
      Key key(shift.size());
      std::uint64_t acc = 0;
      for (std::size_t k = b; k < e; ++k) {
        for (std::size_t j = 0; j < key.size(); ++j) key[j] = flat[k].first[j] + shift[j];
        auto it = counts.find(key);
        if (it != counts.end()) acc += flat[k].second * it->second;
      }
      partial[c] = acc;
    });
    std::uint64_t total = 0;
    for (auto p : partial) total += p;
    return total;
  }

  std::vector<SolutionPair> pairs(const ValueTable& t, unsigned s, const std::vector<BigInt>& a) const {
    Key shift;
    for (const auto& x : a) shift.push_back(convert<V>(x));
    std::vector<SolutionPair> out;
    Key key(shift.size());
    for (const auto& [v, m_ids] : ids) {
      for (std::size_t j = 0; j < key.size(); ++j) key[j] = v[j] + shift[j];
      auto it = ids.find(key);
      if (it == ids.end()) continue;
      for (auto mi : m_ids) {
        Tuple m = t.decode(mi, s);
        for (auto ni : it->second) out.push_back({m, t.decode(ni, s)});
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  MaxReps max_reps(std::uint64_t budget) const {
    const std::uint64_t n = flat.size();
    if (n > 1 && n * (n - 1) > budget) {
      fail(Errc::kBudgetExceeded, std::to_string(n * (n - 1)) + " difference accumulations exceed the budget of " +
                                      std::to_string(budget));
    }
    std::unordered_map<Key, std::uint64_t, Hash> acc;
    Key diff;
    for (const auto& [v, cv] : flat) {
      for (const auto& [w, cw] : flat) {
        diff.resize(v.size());
        bool all_nonzero = true;
        for (std::size_t j = 0; j < v.size(); ++j) {
          diff[j] = w[j] - v[j];
          if (diff[j] == 0) all_nonzero = false;
        }
        if (all_nonzero) acc[diff] += cv * cw;
      }
    }
    MaxReps best;
    const Key* arg = nullptr;
    for (const auto& [d, c] : acc) {
      if (c > best.count || (c == best.count && arg && d < *arg)) {
        best.count = c;
        arg = &d;
      }
    }
    if (arg) {
      std::vector<BigInt> a;
      for (const auto& x : *arg) a.push_back(widen(x));
      best.argmax = std::move(a);
    }
    return best;
  }
};

// Polynomial with a fixed variable order for repeated evaluation.
struct Compiled {
  std::vector<std::pair<BigInt, std::vector<std::uint32_t>>> terms;

  Compiled() = default;
  Compiled(const Polynomial& p, const std::vector<std::string>& order) {
    const auto& vars = p.variables();
    std::vector<std::ptrdiff_t> where(vars.size(), -1);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      auto it = std::find(order.begin(), order.end(), vars[i]);
      if (it != order.end()) where[i] = it - order.begin();
    }
    for (const auto& [e, c] : p.terms()) {
      std::vector<std::uint32_t> f(order.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (where[i] < 0) fail(Errc::kInvalidInput, "unexpected variable " + vars[i]);
        f[static_cast<std::size_t>(where[i])] = e[i];
      }
      terms.emplace_back(c, std::move(f));
    }
  }

  BigInt operator()(const std::vector<BigInt>& x) const {
    BigInt total = 0, term, pw;
    for (const auto& [c, e] : terms) {
      term = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        mpz_pow_ui(pw.get_mpz_t(), x[i].get_mpz_t(), e[i]);
        term *= pw;
      }
      total += term;
    }
    return total;
  }
};

// Coefficients in `var`, each compiled over `order`.
std::vector<Compiled> compiled_coefficients(const Polynomial& p, const std::string& var,
                                            const std::vector<std::string>& order) {
  std::vector<Compiled> out;
  for (const auto& c : p.coefficients_in(var)) out.emplace_back(c, order);
  return out;
}

// Ground elements y with sum_k coeffs[k](args) y^k == 0.
std::vector<std::int64_t> solve_over_ground(const std::vector<Compiled>& coeffs, const std::vector<BigInt>& args,
                                            const BigInt& constant_shift, const std::vector<std::int64_t>& ground) {
  UniPoly c;
  c.reserve(coeffs.size());
  for (const auto& f : coeffs) c.push_back(f(args));
  if (c.empty()) c.emplace_back(0);
  c[0] -= constant_shift;
  c = trimmed(std::move(c));
  if (c.empty()) return ground;  // identically zero: every element solves it
  return integer_roots_among(c, ground);
}

// Signed divisors of m bounded by |d| <= bound, ascending by magnitude then sign.
std::vector<BigInt> signed_divisors(const BigInt& m, std::int64_t bound) {
  std::vector<BigInt> out;
  if (bound < 1) return out;
  for (auto d : small_divisors(m, bound)) {
    out.emplace_back(static_cast<long>(-d));
    out.emplace_back(static_cast<long>(d));
  }
  return out;
}

std::int64_t ground_span(const GroundSet& g) {
  return g.empty() ? 0 : g.elements().back() - g.elements().front();
}

SolutionTally finish(std::vector<SolutionPair> found, bool collect) {
  SolutionTally t;
  std::sort(found.begin(), found.end());
  t.count = found.size();
  if (collect) t.witnesses = std::move(found);
  return t;
}

}  // namespace

struct SumMultiset::Impl {
  ValueTable table;
  unsigned s;
  std::uint64_t total;
  bool keep;
  std::variant<SumTable<std::int64_t>, SumTable<BigInt>> sums;

  Impl(const SeparatedSystem& sys, const GroundSet& ground, unsigned s_, std::uint64_t budget, bool keep_)
      : table(sys, ground), s(s_), total(checked_power(ground.size(), s_, budget)), keep(keep_) {
    if (fits_headroom(table, s)) {
      sums.emplace<SumTable<std::int64_t>>().build(table, s, total, keep);
    } else {
      sums.emplace<SumTable<BigInt>>().build(table, s, total, keep);
    }
  }
};

SumMultiset::SumMultiset(const SeparatedSystem& sys, const GroundSet& ground, unsigned s, std::uint64_t budget,
                         bool keep_tuples)
    : impl_(std::make_unique<Impl>(sys, ground, s, budget, keep_tuples)) {}
SumMultiset::~SumMultiset() = default;
SumMultiset::SumMultiset(SumMultiset&&) noexcept = default;
SumMultiset& SumMultiset::operator=(SumMultiset&&) noexcept = default;

std::uint64_t SumMultiset::count(const std::vector<BigInt>& a, unsigned threads) const {
  if (a.size() != impl_->table.vals.size()) fail(Errc::kInvalidInput, "target dimension does not match the curve");
  if (uses_i64() && !target_in_range(a)) return 0;
  return std::visit([&](const auto& t) { return t.count(a, threads); }, impl_->sums);
}

std::vector<SolutionPair> SumMultiset::pairs(const std::vector<BigInt>& a) const {
  if (!impl_->keep) fail(Errc::kInvalidInput, "sum multiset was built without tuples");
  if (a.size() != impl_->table.vals.size()) fail(Errc::kInvalidInput, "target dimension does not match the curve");
  if (uses_i64() && !target_in_range(a)) return {};
  return std::visit([&](const auto& t) { return t.pairs(impl_->table, impl_->s, a); }, impl_->sums);
}

std::vector<std::pair<std::vector<BigInt>, std::uint64_t>> SumMultiset::entries() const {
  std::vector<std::pair<std::vector<BigInt>, std::uint64_t>> out;
  std::visit(
      [&](const auto& t) {
        for (const auto& [k, c] : t.flat) {
          std::vector<BigInt> v;
          for (const auto& x : k) v.push_back(widen(x));
          out.emplace_back(std::move(v), c);
        }
      },
      impl_->sums);
  return out;
}

std::size_t SumMultiset::distinct() const {
  return std::visit([](const auto& t) { return t.flat.size(); }, impl_->sums);
}

std::uint64_t SumMultiset::tuples() const { return impl_->total; }

bool SumMultiset::uses_i64() const { return impl_->sums.index() == 0; }

SolutionTally brute_count(const SystemInstance& inst, const CountOptions& opt) {
  inst.check();
  SumMultiset sums(inst.system, inst.ground, inst.s, opt.budget, opt.collect);
  SolutionTally t;
  t.count = sums.count(inst.a, opt.threads);
  if (opt.collect) t.witnesses = sums.pairs(inst.a);
  return t;
}

SolutionTally case_partition(const SystemInstance& inst, const EliminationKit& kit, const CountOptions& opt) {
  inst.check();
  const std::size_t r = inst.system.r();
  if (inst.s != r) fail(Errc::kInvalidInput, "the case split needs s = r");
  const std::vector<std::string> t_order = [&] {
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= r; ++i) v.push_back(t_var(i));
    return v;
  }();
  Compiled primary(kit.case_polynomial(), t_order);
  std::optional<Compiled> other;
  if (kit.q) other.emplace(kit.use_p ? *kit.q : kit.cofactor_in_t, t_order);

  SumMultiset sums(inst.system, inst.ground, inst.s, opt.budget, true);
  const auto pairs = sums.pairs(inst.a);
  ValueTable table(inst.system, inst.ground);

  struct Partial {
    std::array<std::uint64_t, 3> cases{0, 0, 0};
    std::uint64_t disagreements = 0;
  };
  std::vector<Partial> partial((pairs.size() + kChunk - 1) / kChunk);
  parallel_chunks(pairs.size(), kChunk, opt.threads, [&](std::size_t b, std::size_t e, std::size_t c) {
    Partial acc;
    std::vector<BigInt> m_vec(r);
    for (std::size_t k = b; k < e; ++k) {
      const auto& [m, n] = pairs[k];
      bool shared = false;
      for (auto x : m) shared = shared || std::find(n.begin(), n.end(), x) != n.end();
      if (shared) {
        ++acc.cases[0];
        continue;
      }
      for (std::size_t j = 0; j < r; ++j) {
        m_vec[j] = inst.a[j];
        for (std::size_t i = 1; i < m.size(); ++i) {
          m_vec[j] += table.vals[j][static_cast<std::size_t>(table.index_of(m[i]))];
        }
      }
      bool vanishes = primary(m_vec) == 0;
      if (other && (((*other)(m_vec) == 0) != vanishes)) ++acc.disagreements;
      ++acc.cases[vanishes ? 1 : 2];
    }
    partial[c] = acc;
  });

  SolutionTally t;
  std::array<std::uint64_t, 3> cases{0, 0, 0};
  std::uint64_t disagreements = 0;
  for (const auto& p : partial) {
    for (int i = 0; i < 3; ++i) cases[i] += p.cases[i];
    disagreements += p.disagreements;
  }
  t.count = pairs.size();
  t.partition = cases;
  if (other) t.boundary_disagreements = disagreements;
  if (opt.collect) t.witnesses = pairs;
  return t;
}

SolutionTally guided_count_base1(const UniPoly& phi, const GroundSet& ground, const BigInt& a,
                                 const CountOptions& opt) {
  if (a == 0) fail(Errc::kZeroShift, "the guided count needs a nonzero target");
  if (uni_degree(phi) < 1) fail(Errc::kDegreeTooLow, "phi must be nonconstant");
  const Polynomial chi = first_difference_chi(phi);
  const auto d = Polynomial::variable("D");
  const Polynomial shifted = chi.substitute({{"X", d + Polynomial::variable("Y")}});
  const auto coeffs = compiled_coefficients(shifted, "Y", {"D"});
  const auto& elems = ground.elements();

  std::vector<SolutionPair> found;
  for (const auto& d1 : signed_divisors(a, ground_span(ground))) {
    BigInt d0 = a / d1;
    for (auto m : solve_over_ground(coeffs, {d1}, d0, elems)) {
      std::int64_t n = m + d1.get_si();
      if (!ground.contains(n)) continue;
      if (eval_uni(phi, from_i64(n)) - eval_uni(phi, from_i64(m)) != a) continue;
      found.push_back({{m}, {n}});
    }
  }
  return finish(std::move(found), opt.collect);
}

SolutionTally guided_count_base2(const SeparatedSystem& sys, const GroundSet& ground, const std::vector<BigInt>& a,
                                 const CountOptions& opt) {
  if (sys.r() != 2 || sys.degrees()[0] != 1) {
    fail(Errc::kStrategyInapplicable, "base case 2 needs a curve (alpha T + c, phi_2)");
  }
  if (a.size() != 2) fail(Errc::kInvalidInput, "base case 2 needs a target in Z^2");
  if (a[0] == 0 && a[1] == 0) fail(Errc::kZeroShift, "the guided count needs a nonzero target");
  const BigInt& alpha = sys.poly(0)[1];
  if (!mpz_divisible_p(a[0].get_mpz_t(), alpha.get_mpz_t())) {
    SolutionTally t;
    t.note = "NoIntegralSolutions";
    if (opt.collect) t.witnesses.emplace();
    return t;
  }
  const BigInt b = a[0] / alpha;
  const BigInt& c = a[1];
  const UniPoly& phi = sys.poly(1);
  const auto& elems = ground.elements();
  ValueTable table(sys, ground);
  const std::int64_t span = ground_span(ground);

  // Diagonal: n_i = m_j for some i, j. The other pair then has
  // n_i' = m_j' + b and phi(m_j' + b) - phi(m_j') = c.
  std::set<SolutionPair> diagonal;
  {
    auto y = Polynomial::variable("Y");
    Polynomial g = Polynomial::univariate(phi, "Y").substitute({{"Y", y + Polynomial(b)}}) -
                   Polynomial::univariate(phi, "Y") - Polynomial(c);
    UniPoly gc = g.is_zero() ? UniPoly{} : g.univariate_coefficients("Y");
    std::vector<std::int64_t> roots = gc.empty() ? elems : integer_roots_among(gc, elems);
    for (auto v : roots) {
      if (b > span || b < -span) break;
      std::int64_t u = v + b.get_si();
      if (!ground.contains(u)) continue;
      for (auto x : elems) {
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            Tuple m(2), n(2);
            m[j] = x;
            n[i] = x;
            m[1 - j] = v;
            n[1 - i] = u;
            if (table.solves(m, n, a)) diagonal.insert({m, n});
          }
        }
      }
    }
  }

  // Off-diagonal: with nu = n_1 - b, the linear equation gives n_2 = m_1 + m_2 - nu
  // and the second one becomes (m_1 - nu)(m_2 - nu) psi(m_1, m_2, nu) = c - rho(nu, b).
  const Polynomial psi = second_difference_psi(phi);
  const Polynomial rho = shift_polynomial_rho(phi);
  const Compiled psi_at(psi, {"X", "Y", "Z"});
  const Compiled rho_at(rho, {"X", "Y"});
  const auto psi_in_y = compiled_coefficients(psi, "Y", {"X", "Z"});
  auto off_diagonal = [](const Tuple& m, const Tuple& n) {
    return n[0] != m[0] && n[0] != m[1] && n[1] != m[0] && n[1] != m[1];
  };

  std::vector<std::vector<SolutionPair>> partial((elems.size() + 15) / 16);
  parallel_chunks(elems.size(), 16, opt.threads, [&](std::size_t lo, std::size_t hi, std::size_t chunk) {
    auto& out = partial[chunk];
    for (std::size_t k = lo; k < hi; ++k) {
      const std::int64_t u1 = elems[k];
      const BigInt nu = from_i64(u1) - b;
      const BigInt target = c - rho_at({nu, b});
      if (target == 0) {
        for (auto v1 : elems) {
          for (auto v2 : solve_over_ground(psi_in_y, {from_i64(v1), nu}, BigInt(0), elems)) {
            BigInt u2 = from_i64(v1) + v2 - nu;
            if (!fits_i64(u2) || !ground.contains(u2.get_si())) continue;
            Tuple m{v1, v2}, n{u1, u2.get_si()};
            if (off_diagonal(m, n) && table.solves(m, n, a)) out.push_back({m, n});
          }
        }
        continue;
      }
      for (const auto& d1 : signed_divisors(target, span)) {
        const BigInt rest = target / d1;
        for (const auto& d2 : signed_divisors(rest, span)) {
          BigInt v1 = nu + d1, v2 = nu + d2, u2 = nu + d1 + d2;
          if (!fits_i64(v1) || !fits_i64(v2) || !fits_i64(u2)) continue;
          if (!ground.contains(v1.get_si()) || !ground.contains(v2.get_si()) || !ground.contains(u2.get_si())) {
            continue;
          }
          if (psi_at({v1, v2, nu}) != rest / d2) continue;
          Tuple m{v1.get_si(), v2.get_si()}, n{u1, u2.get_si()};
          if (off_diagonal(m, n) && table.solves(m, n, a)) out.push_back({m, n});
        }
      }
    }
  });

  std::vector<SolutionPair> found(diagonal.begin(), diagonal.end());
  for (auto& p : partial) found.insert(found.end(), p.begin(), p.end());
  return finish(std::move(found), opt.collect);
}

SolutionTally guided_count_case3(const SystemInstance& inst, const EliminationKit& kit, const CountOptions& opt) {
  inst.check();
  const std::size_t r = inst.system.r();
  if (inst.s != r) fail(Errc::kInvalidInput, "the case-3 enumerator needs s = r");
  const Polynomial& casepoly = kit.case_polynomial();
  if (!kit.r) fail(Errc::kEliminantUnavailable, "no quotient polynomial R: " + kit.r_error);

  std::vector<std::string> t_order, d_order;
  std::map<std::string, Polynomial> shift;
  const auto y = Polynomial::variable(kYVar);
  for (std::size_t i = 1; i <= r; ++i) {
    t_order.push_back(t_var(i));
    d_order.push_back("D_" + std::to_string(i));
    shift[x_var(i)] = Polynomial::variable(d_order.back()) + y;
  }
  const Compiled q_at(casepoly, t_order);
  const auto r_coeffs = compiled_coefficients(kit.r->substitute(shift), kYVar, d_order);

  const auto& elems = inst.ground.elements();
  ValueTable table(inst.system, inst.ground);
  const std::uint64_t tails = checked_power(elems.size(), static_cast<unsigned>(r - 1), opt.budget);
  const std::int64_t span = ground_span(inst.ground);

  std::vector<std::vector<SolutionPair>> partial((tails + 63) / 64);
  parallel_chunks(tails, 64, opt.threads, [&](std::size_t lo, std::size_t hi, std::size_t chunk) {
    auto& out = partial[chunk];
    std::vector<BigInt> m_vec(r);
    std::vector<BigInt> d(r);
    for (std::size_t id = lo; id < hi; ++id) {
      Tuple tail = table.decode(id, static_cast<unsigned>(r - 1));
      for (std::size_t j = 0; j < r; ++j) {
        m_vec[j] = inst.a[j];
        for (auto x : tail) m_vec[j] += table.vals[j][static_cast<std::size_t>(table.index_of(x))];
      }
      const BigInt qm = q_at(m_vec);
      if (qm == 0) continue;  // case 2
      const auto divisors = signed_divisors(qm, span);
      // choose d_1..d_r with d_1 ... d_r | Q(M); d_0 is the cofactor
      auto rec = [&](auto&& self, std::size_t depth, const BigInt& rem) -> void {
        if (depth == r) {
          for (auto m1 : solve_over_ground(r_coeffs, d, rem, elems)) {
            Tuple m(r), n(r);
            m[0] = m1;
            for (std::size_t i = 1; i < r; ++i) m[i] = tail[i - 1];
            bool ok = true;
            for (std::size_t i = 0; i < r && ok; ++i) {
              BigInt ni = d[i] + m1;
              ok = fits_i64(ni) && table.contains(ni.get_si());
              if (ok) n[i] = ni.get_si();
            }
            if (!ok) continue;
            bool shared = false;
            for (auto x : m) shared = shared || std::find(n.begin(), n.end(), x) != n.end();
            if (shared || !table.solves(m, n, inst.a)) continue;
            out.push_back({std::move(m), std::move(n)});
          }
          return;
        }
        for (const auto& di : divisors) {
          if (!mpz_divisible_p(rem.get_mpz_t(), di.get_mpz_t())) continue;
          d[depth] = di;
          BigInt next;
          mpz_divexact(next.get_mpz_t(), rem.get_mpz_t(), di.get_mpz_t());
          self(self, depth + 1, next);
        }
      };
      rec(rec, 0, qm);
    }
  });

  std::vector<SolutionPair> found;
  for (auto& p : partial) found.insert(found.end(), p.begin(), p.end());
  return finish(std::move(found), opt.collect);
}

MaxReps maxnumreps(const SumMultiset& sums, std::uint64_t accumulation_budget) {
  return std::visit([&](const auto& t) { return t.max_reps(accumulation_budget); }, sums.impl_->sums);
}

MaxReps maxnumreps(const SeparatedSystem& sys, const GroundSet& ground, unsigned s, const CountOptions& opt) {
  if (s < 1) fail(Errc::kInvalidInput, "s must be at least 1");
  SumMultiset sums(sys, ground, s, opt.budget);
  return maxnumreps(sums);
}

std::uint64_t diagonal_count(const SeparatedSystem& sys, const GroundSet& ground, unsigned s,
                             const CountOptions& opt) {
  if (s < 1) fail(Errc::kInvalidInput, "s must be at least 1");
  const std::uint64_t total = checked_power(ground.size(), s, opt.budget);
  ValueTable table(sys, ground);
  std::map<std::vector<BigInt>, std::uint64_t> groups;
  std::vector<BigInt> sig;
  std::vector<BigInt> column(s);
  for (std::uint64_t id = 0; id < total; ++id) {
    Tuple t = table.decode(id, s);
    sig.clear();
    for (std::size_t j = 0; j < sys.r(); ++j) {
      for (unsigned i = 0; i < s; ++i) column[i] = table.vals[j][static_cast<std::size_t>(table.index_of(t[i]))];
      std::sort(column.begin(), column.end());
      sig.insert(sig.end(), column.begin(), column.end());
    }
    ++groups[sig];
  }
  std::uint64_t count = 0;
  for (const auto& [k, c] : groups) count += c * c;
  return count;
}

std::vector<std::vector<BigInt>> divisor_tuples(const BigInt& m, unsigned s) {
  if (m == 0) fail(Errc::kZeroTarget, "divisor tuples of 0");
  if (s < 1) fail(Errc::kInvalidInput, "s must be at least 1");
  const auto divisors = positive_divisors(m);
  std::vector<std::vector<BigInt>> positive;
  std::vector<BigInt> cur;
  auto rec = [&](auto&& self, const BigInt& rem, unsigned left) -> void {
    if (left == 1) {
      cur.push_back(rem);
      positive.push_back(cur);
      cur.pop_back();
      return;
    }
    for (const auto& d : divisors) {
      if (d > rem) break;
      if (!mpz_divisible_p(rem.get_mpz_t(), d.get_mpz_t())) continue;
      cur.push_back(d);
      self(self, rem / d, left - 1);
      cur.pop_back();
    }
  };
  rec(rec, abs(m), s);

  std::vector<std::vector<BigInt>> out;
  const bool negative = m < 0;
  for (const auto& p : positive) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (s - 1)); ++mask) {
      std::vector<BigInt> t = p;
      bool flip = negative;
      for (unsigned i = 0; i + 1 < s; ++i) {
        if (mask >> i & 1U) {
          t[i] = -t[i];
          flip = !flip;
        }
      }
      if (flip) t[s - 1] = -t[s - 1];
      out.push_back(std::move(t));
    }
  }
  return out;
}

double L_function(double c, double x) {
  if (!(x > std::exp(1.0))) fail(Errc::kDomainError, "L(c, X) needs X > e");
  const double lx = std::log(x);
  return std::exp(c * lx / std::log(lx));
}

}  // namespace paucity

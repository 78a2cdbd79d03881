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

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "paucity/curve.hpp"
#include "paucity/elimination.hpp"

namespace paucity {

/// One system sum_i (phi_j(n_i) - phi_j(m_i)) = a_j, j = 1..r, over X^s.
struct SystemInstance {
  SeparatedSystem system;
  GroundSet ground;
  unsigned s = 1;
  std::vector<BigInt> a;

  /// Checks s >= 1 and |a| == r.
  void check() const;
};

using Tuple = std::vector<std::int64_t>;

struct SolutionPair {
  Tuple m;
  Tuple n;
  auto operator<=>(const SolutionPair&) const = default;
};

struct SolutionTally {
  std::uint64_t count = 0;
  std::optional<std::vector<SolutionPair>> witnesses;  // sorted
  std::optional<std::array<std::uint64_t, 3>> partition;
  /// Case-2/case-3 boundary disagreements between Q(M) and P(M); partition only.
  std::optional<std::uint64_t> boundary_disagreements;
  std::string note;
};

struct CountOptions {
  std::uint64_t budget = 10'000'000;  // map entries for the s-fold sum table
  unsigned threads = 1;
  bool collect = false;
};

struct MaxReps {
  std::uint64_t count = 0;
  std::optional<std::vector<BigInt>> argmax;  // lexicographically smallest maximizer
};

/// Multiset of s-fold sum vectors (sum_i phi_j(x_i))_j over x in X^s. Values
/// are stored as int64 when they fit with headroom, else as big integers.
class SumMultiset {
 public:
  /// Throws BudgetExceeded when |X|^s exceeds budget.
  SumMultiset(const SeparatedSystem& sys, const GroundSet& ground, unsigned s, std::uint64_t budget,
              bool keep_tuples = false);
  ~SumMultiset();
  SumMultiset(SumMultiset&&) noexcept;
  SumMultiset& operator=(SumMultiset&&) noexcept;

  /// J(a) = sum_v c(v) c(v + a).
  std::uint64_t count(const std::vector<BigInt>& a, unsigned threads = 1) const;
  /// Every ordered solution pair for a, sorted. Needs keep_tuples.
  std::vector<SolutionPair> pairs(const std::vector<BigInt>& a) const;
  /// (sum vector, multiplicity), sorted by sum vector.
  std::vector<std::pair<std::vector<BigInt>, std::uint64_t>> entries() const;
  std::size_t distinct() const;
  std::uint64_t tuples() const;
  bool uses_i64() const;

  friend MaxReps maxnumreps(const SumMultiset& sums, std::uint64_t accumulation_budget);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Exact count by meet-in-the-middle over the sum multiset.
SolutionTally brute_count(const SystemInstance& inst, const CountOptions& opt = {});

/// Three-way split for s = r: case 1 some m_i = n_j; case 2 the case polynomial
/// vanishes at M = a + sum_{j>=2} gamma(m_j); case 3 the rest. Case 1 takes
/// precedence over case 2.
SolutionTally case_partition(const SystemInstance& inst, const EliminationKit& kit, const CountOptions& opt = {});

/// phi(n) - phi(m) = a through n - m = d_1, chi(m + d_1, m) = d_0, d_0 d_1 = a.
/// Throws ZeroShift for a = 0.
SolutionTally guided_count_base1(const UniPoly& phi, const GroundSet& ground, const BigInt& a,
                                 const CountOptions& opt = {});

/// s = 2 with phi_1 = alpha T + c: diagonal branch plus the psi branches.
/// Throws ZeroShift for a = 0; reports count 0 when alpha does not divide a_1.
SolutionTally guided_count_base2(const SeparatedSystem& sys, const GroundSet& ground, const std::vector<BigInt>& a,
                                 const CountOptions& opt = {});

/// Case-3 solutions for s = r by factoring the case polynomial at M into
/// d_0 d_1 ... d_r and solving R(d + m_1; m_1) = d_0 for m_1.
/// Throws EliminantUnavailable when the kit has no usable Q (or R).
SolutionTally guided_count_case3(const SystemInstance& inst, const EliminationKit& kit, const CountOptions& opt = {});

/// max J_s(a) over a with every coordinate nonzero. Throws BudgetExceeded.
MaxReps maxnumreps(const SeparatedSystem& sys, const GroundSet& ground, unsigned s, const CountOptions& opt = {});
MaxReps maxnumreps(const SumMultiset& sums, std::uint64_t accumulation_budget = 100'000'000);

/// Pairs (m, n) whose phi_i-value multisets agree for every i.
std::uint64_t diagonal_count(const SeparatedSystem& sys, const GroundSet& ground, unsigned s,
                             const CountOptions& opt = {});

/// All ordered s-tuples of nonzero integers with product M. Throws ZeroTarget.
std::vector<std::vector<BigInt>> divisor_tuples(const BigInt& m, unsigned s);

/// exp(c log X / log log X). Throws DomainError for X <= e.
double L_function(double c, double x);

}  // namespace paucity

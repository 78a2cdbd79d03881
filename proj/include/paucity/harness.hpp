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

#include "paucity/curve.hpp"

namespace paucity {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kScanSchema = "paucity-scan/1";

enum class ExitCode : int { kOk = 0, kAssertion = 1, kUsage = 2, kBudget = 3 };

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

/// Rows of strings plus ordered metadata. Exact quantities are serialized as
/// integer or fraction strings; only ratio columns hold formatted floats.
struct ScanReport {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool failed = false;  // an asserted bound was violated

  std::string to_csv() const;
  std::string to_json() const;
  std::string render(const std::string& format) const;
  /// Writes to path, or to stdout when path is empty or "-".
  void write(const std::string& path, const std::string& format) const;
  const std::string* meta(const std::string& key) const;
};

/// Fixed-precision rendering used for every float column.
std::string format_double(double v);

enum class SamplingPolicy {
  kRealized,  // a = sum gamma(n) - sum gamma(m) for random tuples, a != 0
  kUniform,   // uniform over the feasible box, a != 0
  kExplicit
};
SamplingPolicy parse_sampling(const std::string& name);
const char* sampling_name(SamplingPolicy p);

struct PaucityScanConfig {
  std::string curve_spec;
  std::vector<std::string> set_specs;  // one ground set per row group
  unsigned s = 0;                      // 0 means r
  std::uint64_t samples = 20;
  SamplingPolicy sampling = SamplingPolicy::kUniform;
  std::vector<std::vector<BigInt>> explicit_targets;
  std::uint64_t seed = 1;
  std::uint64_t budget = 10'000'000;
  unsigned threads = 1;

  std::string canonical() const;
};

/// Per ground set and sampled a != 0: J_s(a), the reference size |X|^{r-1}
/// and their ratio. Metadata carries the fitted log-log slope of max J vs N.
ScanReport paucity_scan(const PaucityScanConfig& config);

/// Least-squares slope of log y against log x over points with y > 0.
std::optional<double> loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct ImprovingScanConfig {
  std::string curve_spec;
  std::vector<std::string> set_specs;
  std::vector<std::string> witnesses{"delta", "curve", "box"};  // or random:k,seed
  std::optional<std::string> p;  // default 2 - 1/(r+1)
  std::optional<std::string> q;  // default p'
  std::optional<double> max_ratio_constant;  // flag rows with ratio > C * rhs
  unsigned threads = 1;

  std::string canonical() const;
};

/// rwt_ratio of each witness against conjecture_rhs. Throws ExponentRange for
/// p outside (1, 2] before doing any work.
ScanReport improving_scan(const ImprovingScanConfig& config);

/// The summand of conjecture_rhs that a standard witness is expected to match:
/// delta -> |X|^{1/q-1}, curve -> |X|^{-1/p}, box -> |X|^{-D(1/p-1/q)}.
double matching_summand(const std::string& witness, std::uint64_t size_x, unsigned d, const Exponent& p,
                        const Exponent& q);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  unsigned threads = 1;
  std::string scratch_dir;  // for determinism files; default is a temp directory
};

/// Acceptance criteria 1..8.
CriterionResult run_criterion(int id, const SuiteOptions& opt = {});
/// Criteria bundled under a suite name: identities, oracle, refinement, scans,
/// operators, all. Returns nullopt for an unknown name.
std::optional<std::vector<int>> suite_criteria(const std::string& name);

/// Frozen regression guards.
namespace frozen {
inline constexpr double kPaucitySlopeCeiling = 1.3;
// Slope of the default-seed trend scan.
inline constexpr double kPaucitySlope = 0.866245932999;
inline constexpr double kPaucitySlopeTolerance = 1e-9;
// Witness scan: ratio <= C * rhs for every extremal witness, and the best
// witness reaches c * its matching summand.
inline constexpr double kWitnessUpperC = 1.0;
inline constexpr double kWitnessLowerC = 0.5;
}  // namespace frozen

}  // namespace paucity

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

#include "paucity/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "paucity/averaging.hpp"
#include "paucity/counting.hpp"
#include "paucity/error.hpp"

namespace paucity {

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_vector(const std::vector<BigInt>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += v[i].get_str();
  }
  return out;
}

std::string join_strings(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

}  // namespace

std::string ScanReport::to_csv() const {
  std::ostringstream os;
  for (const auto& [k, v] : metadata) os << "# " << k << '=' << v << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << csv_field(columns[i]);
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << '\n';
  }
  return os.str();
}

std::string ScanReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = kScanSchema;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : metadata) meta[k] = v;
  j["metadata"] = meta;
  j["columns"] = columns;
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

std::string ScanReport::render(const std::string& format) const {
  if (format == "csv") return to_csv();
  if (format == "json") return to_json();
  fail(Errc::kInvalidInput, "unknown output format: " + format);
}

void ScanReport::write(const std::string& path, const std::string& format) const {
  const std::string text = render(format);
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::kIo, "cannot write " + path);
  out << text;
}

const std::string* ScanReport::meta(const std::string& key) const {
  for (const auto& [k, v] : metadata) {
    if (k == key) return &v;
  }
  return nullptr;
}

SamplingPolicy parse_sampling(const std::string& name) {
  if (name == "realized") return SamplingPolicy::kRealized;
  if (name == "uniform") return SamplingPolicy::kUniform;
  if (name == "explicit") return SamplingPolicy::kExplicit;
  fail(Errc::kInvalidInput, "unknown sampling policy: " + name);
}

const char* sampling_name(SamplingPolicy p) {
  switch (p) {
    case SamplingPolicy::kRealized: return "realized";
    case SamplingPolicy::kUniform: return "uniform";
    case SamplingPolicy::kExplicit: return "explicit";
  }
  return "?";
}

std::string PaucityScanConfig::canonical() const {
  std::ostringstream os;
  os << "paucity-scan|curve=" << curve_spec << "|sets=" << join_strings(set_specs, ";") << "|s=" << s
     << "|samples=" << samples << "|sampling=" << sampling_name(sampling) << "|seed=" << seed << "|budget=" << budget
     << "|targets=";
  for (const auto& a : explicit_targets) os << join_vector(a) << '/';
  return os.str();
}

std::optional<double> loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i] > 0 && y[i] > 0) pts.emplace_back(std::log(x[i]), std::log(y[i]));
  }
  if (pts.size() < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (const auto& [a, b] : pts) {
    mx += a;
    my += b;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxy = 0, sxx = 0;
  for (const auto& [a, b] : pts) {
    sxy += (a - mx) * (b - my);
    sxx += (a - mx) * (a - mx);
  }
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

namespace {

std::vector<std::vector<BigInt>> sample_targets(const SeparatedSystem& sys, const GroundSet& ground, unsigned s,
                                                const PaucityScanConfig& cfg, std::uint64_t stream) {
  if (cfg.sampling == SamplingPolicy::kExplicit) return cfg.explicit_targets;
  std::vector<std::vector<BigInt>> out;
  if (ground.empty() || cfg.samples == 0) return out;
  std::mt19937_64 rng(mix_seed(cfg.seed, stream));
  const auto& elems = ground.elements();
  const std::size_t r = sys.r();
  if (cfg.sampling == SamplingPolicy::kRealized) {
    for (std::uint64_t k = 0; k < cfg.samples; ++k) {
      for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<BigInt> a(r, BigInt(0));
        for (unsigned i = 0; i < s; ++i) {
          BigInt n = from_i64(elems[rng() % elems.size()]);
          BigInt m = from_i64(elems[rng() % elems.size()]);
          for (std::size_t j = 0; j < r; ++j) a[j] += sys.value(j, n) - sys.value(j, m);
        }
        if (std::any_of(a.begin(), a.end(), [](const BigInt& x) { return x != 0; })) {
          out.push_back(std::move(a));
          break;
        }
      }
    }
  } else {
    std::vector<std::uint64_t> width(r);
    for (std::size_t j = 0; j < r; ++j) {
      BigInt b = sys.max_abs_value(j, elems) * s;
      if (!b.fits_ulong_p() || b >= (BigInt(1) << 62)) fail(Errc::kInvalidInput, "feasible box too large to sample");
      width[j] = b.get_ui();
    }
    for (std::uint64_t k = 0; k < cfg.samples; ++k) {
      for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<BigInt> a(r);
        bool nonzero = false;
        for (std::size_t j = 0; j < r; ++j) {
          std::uint64_t span = 2 * width[j] + 1;
          auto v = static_cast<std::int64_t>(rng() % span) - static_cast<std::int64_t>(width[j]);
          a[j] = from_i64(v);
          nonzero = nonzero || v != 0;
        }
        if (nonzero) {
          out.push_back(std::move(a));
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace

ScanReport paucity_scan(const PaucityScanConfig& cfg) {
  const SeparatedSystem sys = parse_curve_spec(cfg.curve_spec);
  const unsigned s = cfg.s == 0 ? static_cast<unsigned>(sys.r()) : cfg.s;
  for (const auto& a : cfg.explicit_targets) {
    if (a.size() != sys.r()) fail(Errc::kInvalidInput, "explicit target has the wrong dimension");
  }
  struct Group {
    std::string spec;
    GroundSet ground;
    std::size_t index;
  };
  std::vector<Group> groups;
  for (std::size_t i = 0; i < cfg.set_specs.size(); ++i) {
    groups.push_back({cfg.set_specs[i], parse_ground_set(cfg.set_specs[i]), i});
  }
  std::stable_sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
    return a.ground.bound() != b.ground.bound() ? a.ground.bound() < b.ground.bound() : a.spec < b.spec;
  });

  ScanReport rep;
  rep.columns = {"N", "size_x", "a", "J", "reference", "ratio"};
  std::vector<double> xs, ys;
  std::vector<std::string> maxima;
  for (const auto& g : groups) {
    auto targets = sample_targets(sys, g.ground, s, cfg, g.index);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    if (targets.empty()) continue;
    const std::string n_str = std::to_string(g.ground.bound());
    const std::string size_str = std::to_string(g.ground.size());
    const BigInt reference = ipow(BigInt(static_cast<unsigned long>(g.ground.size())), s - 1);
    std::optional<SumMultiset> sums;
    try {
      sums.emplace(sys, g.ground, s, cfg.budget);
    } catch (const Error& e) {
      if (e.code() != Errc::kBudgetExceeded) throw;
      for (const auto& a : targets) rep.rows.push_back({n_str, size_str, join_vector(a), "budget", reference.get_str(), "nan"});
      maxima.push_back(n_str + ":budget");
      continue;
    }
    std::uint64_t best = 0;
    for (const auto& a : targets) {
      std::uint64_t j = sums->count(a, cfg.threads);
      best = std::max(best, j);
      double ratio = reference == 0 ? 0.0 : static_cast<double>(j) / reference.get_d();
      rep.rows.push_back({n_str, size_str, join_vector(a), std::to_string(j), reference.get_str(), format_double(ratio)});
    }
    maxima.push_back(n_str + ":" + std::to_string(best));
    xs.push_back(static_cast<double>(g.ground.bound()));
    ys.push_back(static_cast<double>(best));
  }
  auto slope = loglog_slope(xs, ys);
  rep.metadata = {{"schema", kScanSchema},
                  {"kind", "paucity"},
                  {"version", kVersion},
                  {"config_hash", fnv1a_hex(cfg.canonical())},
                  {"seed", std::to_string(cfg.seed)},
                  {"curve", sys.to_json()},
                  {"s", std::to_string(s)},
                  {"sampling", sampling_name(cfg.sampling)},
                  {"max_J", join_strings(maxima, ";")},
                  {"slope", slope ? format_double(*slope) : "nan"}};
  return rep;
}

std::string ImprovingScanConfig::canonical() const {
  std::ostringstream os;
  os << "improving-scan|curve=" << curve_spec << "|sets=" << join_strings(set_specs, ";")
     << "|witnesses=" << join_strings(witnesses, ";") << "|p=" << p.value_or("default")
     << "|q=" << q.value_or("default") << "|C=" << (max_ratio_constant ? format_double(*max_ratio_constant) : "none");
  return os.str();
}

double matching_summand(const std::string& witness, std::uint64_t size_x, unsigned d, const Exponent& p,
                        const Exponent& q) {
  const double lx = std::log(static_cast<double>(size_x));
  const Rational ip = p.reciprocal();
  const Rational iq = q.reciprocal();
  if (witness == "delta") return std::exp(to_double(iq - 1) * lx);
  if (witness == "curve") return std::exp(-to_double(ip) * lx);
  if (witness == "box") return std::exp(-to_double(Rational(d) * (ip - iq)) * lx);
  return std::nan("");
}

ScanReport improving_scan(const ImprovingScanConfig& cfg) {
  const SeparatedSystem sys = parse_curve_spec(cfg.curve_spec);
  const auto r = static_cast<unsigned>(sys.r());
  Exponent p = cfg.p ? parse_exponent(*cfg.p) : Exponent{Rational(2) - Rational(1, r + 1), false};
  p.value.canonicalize();
  if (p.infinite || p.value <= 1 || p.value > 2) {
    fail(Errc::kExponentRange, "p must lie in (1, 2], got " + p.to_string());
  }
  const Exponent q = cfg.q ? parse_exponent(*cfg.q) : p.conjugate();
  if (!q.infinite && q.value < 2) fail(Errc::kExponentRange, "q must be at least 2, got " + q.to_string());
  for (const auto& w : cfg.witnesses) {
    if (w != "delta" && w != "curve" && w != "box" && w.rfind("random:", 0) != 0) {
      fail(Errc::kInvalidInput, "unknown witness kind: " + w);
    }
  }

  struct Group {
    std::string spec;
    GroundSet ground;
  };
  std::vector<Group> groups;
  for (const auto& spec : cfg.set_specs) groups.push_back({spec, parse_ground_set(spec)});
  std::stable_sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
    return a.ground.bound() != b.ground.bound() ? a.ground.bound() < b.ground.bound() : a.spec < b.spec;
  });

  ScanReport rep;
  rep.columns = {"N",   "size_x", "witness",        "size_E",  "size_F",             "pairing",
                 "ratio", "rhs",  "ratio_over_rhs", "summand", "ratio_over_summand", "within"};
  for (const auto& g : groups) {
    if (g.ground.empty()) continue;
    const std::uint64_t size_x = g.ground.size();
    const double rhs = conjecture_rhs(size_x, sys.total_degree(), p, q);
    for (const auto& kind : cfg.witnesses) {
      WitnessSets w;
      BigInt pairing;
      if (kind.rfind("random:", 0) == 0) {
        auto parts = kind.substr(7);
        auto comma = parts.find(',');
        if (comma == std::string::npos) fail(Errc::kInvalidInput, "random witness needs k,seed");
        auto trials = parse_bigint(parts.substr(0, comma)).get_ui();
        auto seed = parse_bigint(parts.substr(comma + 1)).get_ui();
        auto res = random_witness_search(sys, g.ground, trials, seed, p, q, cfg.threads);
        w = res.best;
        pairing = res.pairing;
        if (trials == 0) continue;
      } else {
        w = extremal_witnesses(sys, g.ground, kind);
        pairing = witness_pairing(sys, g.ground, w);
      }
      const double ratio = rwt_ratio_from(pairing, size_x, w.size_e(), w.size_f(), p, q);
      const double summand = matching_summand(kind, size_x, sys.total_degree(), p, q);
      std::string within = "-";
      if (cfg.max_ratio_constant) {
        bool ok = ratio <= *cfg.max_ratio_constant * rhs;
        within = ok ? "yes" : "no";
        if (!ok) rep.failed = true;
      }
      rep.rows.push_back({std::to_string(g.ground.bound()), std::to_string(size_x), kind, w.size_e().get_str(),
                          w.size_f().get_str(), pairing.get_str(), format_double(ratio), format_double(rhs),
                          format_double(ratio / rhs), format_double(summand),
                          std::isnan(summand) ? "nan" : format_double(ratio / summand), within});
    }
  }
  rep.metadata = {{"schema", kScanSchema},
                  {"kind", "improving"},
                  {"version", kVersion},
                  {"config_hash", fnv1a_hex(cfg.canonical())},
                  {"curve", sys.to_json()},
                  {"p", p.to_string()},
                  {"q", q.to_string()}};
  return rep;
}

}  // namespace paucity

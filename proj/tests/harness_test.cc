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

#include <cmath>

#include "doctest.h"
#include "paucity/error.hpp"
#include "paucity/harness.hpp"
#include "paucity/numtheory.hpp"

using namespace paucity;

TEST_CASE("FNV-1a") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("log-log slope") {
  std::vector<double> x{10, 20, 40}, y{3, 12, 48};
  CHECK(*loglog_slope(x, y) == doctest::Approx(2.0));
  CHECK_FALSE(loglog_slope({10}, {5}).has_value());
  CHECK_FALSE(loglog_slope({10, 20}, {0, 0}).has_value());
}

TEST_CASE("report rendering") {
  ScanReport rep;
  rep.metadata = {{"seed", "1"}};
  rep.columns = {"a", "b"};
  rep.rows = {{"1;2", "x,y"}};
  CHECK(rep.to_csv() == "# seed=1\na,b\n1;2,\"x,y\"\n");
  CHECK(rep.to_json().find("\"paucity-scan/1\"") != std::string::npos);
  CHECK(*rep.meta("seed") == "1");
  CHECK(rep.meta("nothing") == nullptr);
  CHECK_THROWS_AS(rep.render("xml"), Error);
}

TEST_CASE("paucity scan rows") {
  PaucityScanConfig cfg;
  cfg.curve_spec = "powers:2";
  cfg.set_specs = {"range:30", "range:15"};
  cfg.samples = 12;
  cfg.sampling = SamplingPolicy::kRealized;
  auto rep = paucity_scan(cfg);
  REQUIRE_FALSE(rep.rows.empty());
  CHECK(rep.rows.front()[0] == "15");  // sorted by N
  for (const auto& row : rep.rows) {
    // J_1(a) for n^2 - m^2 = a is at most the number of divisors of a
    auto j = std::stoull(row[3]);
    CHECK(j <= positive_divisors(parse_bigint(row[2])).size());
  }
  CHECK(*rep.meta("config_hash") == fnv1a_hex(cfg.canonical()));
}

TEST_CASE("paucity scan edge cases") {
  PaucityScanConfig cfg;
  cfg.curve_spec = "moment:2";
  cfg.set_specs = {"range:10"};
  cfg.samples = 0;
  CHECK(paucity_scan(cfg).rows.empty());
  cfg.sampling = SamplingPolicy::kExplicit;
  cfg.explicit_targets = {{BigInt(1), BigInt(3)}};
  cfg.set_specs = {"range:4"};
  auto rep = paucity_scan(cfg);
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0][3] == "12");
  cfg.budget = 3;
  auto capped = paucity_scan(cfg);
  CHECK(capped.rows[0][3] == "budget");
}

TEST_CASE("scans are thread independent") {
  PaucityScanConfig cfg;
  cfg.curve_spec = "moment:2";
  cfg.set_specs = {"random:40,1/2,7", "range:25"};
  cfg.samples = 10;
  auto one = paucity_scan(cfg).to_csv();
  cfg.threads = 4;
  CHECK(paucity_scan(cfg).to_csv() == one);

  ImprovingScanConfig ic;
  ic.curve_spec = "moment:2";
  ic.set_specs = {"random:16,1/2,7"};
  ic.witnesses = {"delta", "random:20,7"};
  auto i1 = improving_scan(ic).to_csv();
  ic.threads = 4;
  CHECK(improving_scan(ic).to_csv() == i1);
}

TEST_CASE("improving scan") {
  ImprovingScanConfig ic;
  ic.curve_spec = "moment:3";
  ic.set_specs = {"range:8", "range:16", "range:32"};
  ic.p = "7/4";
  auto rep = improving_scan(ic);
  CHECK(rep.rows.size() == 9);
  CHECK(*rep.meta("q") == "7/3");
  ic.p = "5/2";
  CHECK_THROWS_AS(improving_scan(ic), Error);
  ic.p = "1";
  CHECK_THROWS_AS(improving_scan(ic), Error);
}

TEST_CASE("matching summands") {
  Exponent p{Rational(3, 2), false}, q{Rational(3), false};
  CHECK(matching_summand("delta", 8, 3, p, q) == doctest::Approx(std::pow(8.0, -2.0 / 3)));
  CHECK(matching_summand("curve", 8, 3, p, q) == doctest::Approx(std::pow(8.0, -2.0 / 3)));
  CHECK(matching_summand("box", 8, 3, p, q) == doctest::Approx(std::pow(8.0, -1.0)));
  CHECK(std::isnan(matching_summand("random:3,1", 8, 3, p, q)));
}

TEST_CASE("suite names") {
  CHECK(suite_criteria("identities") == std::vector<int>{1});
  CHECK(suite_criteria("all")->size() == 8);
  CHECK_FALSE(suite_criteria("bogus").has_value());
}

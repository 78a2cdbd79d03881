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

// Runs acceptance criteria 1-8 and prints one line per criterion.

#include <cstdio>
#include <cstdlib>
#include <exception>

#include "paucity/harness.hpp"

int main(int argc, char** argv) {
  paucity::SuiteOptions opt;
  if (argc > 1) opt.threads = static_cast<unsigned>(std::atoi(argv[1]));
  int failures = 0;
  for (int id = 1; id <= 8; ++id) {
    paucity::CriterionResult r;
    try {
      r = paucity::run_criterion(id, opt);
    } catch (const std::exception& e) {
      r.id = id;
      r.name = "criterion";
      r.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %d %-20s %s  (%.2fs)  %s\n", id, r.name.c_str(), r.passed ? "PASS" : "FAIL", r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    failures += r.passed ? 0 : 1;
  }
  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}

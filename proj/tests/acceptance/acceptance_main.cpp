// Copyright 2026 The oqclab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Pass --quick for a fast smoke run with reduced case counts.

#include <cstdio>
#include <cstring>

#include "oqclab/verify/acceptance.hpp"

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;

  const auto results = oqc::verify::run_all_criteria(quick);
  int fails = 0;
  for (const auto& r : results) {
    std::printf("[%s] criterion %d: %s (%.2fs)\n    %s\n", r.passed ? "PASS" : "FAIL",
                r.id, r.name.c_str(), r.seconds, r.details.c_str());
    if (!r.passed) ++fails;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - fails,
              results.size());
  return fails;
}

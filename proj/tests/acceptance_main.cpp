/*
 *   Copyright 2026 The ybe-growth Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


// Runs every acceptance criterion and prints one verdict line per criterion.

#include <ybe/verify/acceptance.hpp>

#include <cstdio>
#include <iostream>

int main() {
  const auto results = ybe::run_acceptance();
  bool ok = true;
  for (const auto& r : results) {
    std::printf("%s criterion %2d: %s (%.2f s, limit %.0f s)%s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.seconds, r.limit_seconds, r.gating ? "" : " [informational]");
    for (const auto& c : r.checks)
      if (!c.pass) std::printf("    mismatch %s: expected %s, got %s\n", c.label.c_str(), c.expected.c_str(), c.actual.c_str());
    for (const auto& n : r.notes) std::printf("    note: %s\n", n.c_str());
    if (r.gating && !r.passed) ok = false;
  }
  std::cout << (ok ? "all gating criteria passed" : "some gating criteria failed") << "\n";
  return ok ? 0 : 1;
}

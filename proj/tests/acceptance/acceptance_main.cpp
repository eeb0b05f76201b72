// Copyright 2026 The qdqi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance runner: one line per criterion, nonzero exit if any fails.

#include <cstdio>
#include <exception>
#include <string>

#include "qdqi/verify.hpp"

int main() {
  int failed = 0;
  for (int id = 1; id <= qdqi::kCriterionCount; ++id) {
    qdqi::CriterionReport rep;
    try {
      rep = qdqi::run_criterion(id);
    } catch (const std::exception& e) {
      rep.id = id;
      rep.title = "threw";
      rep.detail = e.what();
    }
    std::string values;
    for (const auto& [k, v] : rep.measured) {
      char buf[80];
      std::snprintf(buf, sizeof buf, " %s=%.6g", k.c_str(), v);
      values += buf;
    }
    std::string limits;
    for (const auto& [k, v] : rep.bounds) {
      char buf[80];
      std::snprintf(buf, sizeof buf, " %s=%.6g", k.c_str(), v);
      limits += buf;
    }
    std::printf("%s criterion %2d: %s |%s | limits:%s | %.2fs%s%s\n", rep.passed ? "PASS" : "FAIL", id,
                rep.title.c_str(), values.c_str(), limits.c_str(), rep.seconds, rep.detail.empty() ? "" : " | ",
                rep.detail.c_str());
    if (!rep.passed) ++failed;
  }
  std::printf("%d of %d criteria passed\n", qdqi::kCriterionCount - failed, qdqi::kCriterionCount);
  return failed == 0 ? 0 : 1;
}

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

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qdqi {

struct CriterionReport {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::pair<std::string, double>> measured;
  std::vector<std::pair<std::string, double>> bounds;
  std::string detail;
  double seconds = 0.0;  // wall time; not part of the JSON report
};

struct VerifyOptions {
  /// Tolerance for the amplitude-level comparisons (default 1e-9).
  double tol = 1e-9;
};

inline constexpr int kCriterionCount = 12;

CriterionReport run_criterion(int id, const VerifyOptions& opts = {});

/// Suite name -> criterion ids. Throws std::invalid_argument for an unknown suite.
std::vector<int> suite_criteria(const std::string& suite);
std::vector<std::string> suite_names();

}  // namespace qdqi

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

#include <filesystem>
#include <string>

#include "qdqi/quadsat_model.hpp"

namespace qdqi {

/// Canonical one-line JSON with keys p, n, m, r, seed, B, D, F in that order.
std::string instance_to_json(const QuadSatInstance& inst);

/// Parses and validates an instance. Throws std::invalid_argument on
/// malformed input or when m, r disagree with the matrices.
QuadSatInstance instance_from_json(const std::string& text);

void write_instance(const QuadSatInstance& inst, const std::filesystem::path& path);
QuadSatInstance read_instance(const std::filesystem::path& path);

}  // namespace qdqi

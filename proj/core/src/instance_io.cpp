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

#include "qdqi/instance_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace qdqi {

using ojson = nlohmann::ordered_json;

std::string instance_to_json(const QuadSatInstance& inst) {
  ojson j;
  j["p"] = inst.p();
  j["n"] = inst.n();
  j["m"] = inst.m();
  j["r"] = inst.r();
  j["seed"] = inst.seed() ? ojson(*inst.seed()) : ojson(nullptr);
  j["B"] = inst.B();
  j["D"] = inst.D();
  j["F"] = inst.F();
  return j.dump();
}

QuadSatInstance instance_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
    const auto p = j.at("p").get<std::uint32_t>();
    const auto n = j.at("n").get<std::size_t>();
    const auto m = j.at("m").get<std::size_t>();
    const auto r = j.at("r").get<std::uint32_t>();
    std::optional<std::uint64_t> seed;
    if (j.contains("seed") && !j.at("seed").is_null()) seed = j.at("seed").get<std::uint64_t>();
    QuadSatInstance inst(PrimeModulus(p), n, j.at("B").get<FieldMatrix>(), j.at("D").get<FieldMatrix>(),
                         j.at("F").get<std::vector<Digits>>(), seed);
    if (inst.m() != m) throw std::invalid_argument("field m disagrees with the matrices");
    if (inst.r() != r) throw std::invalid_argument("field r disagrees with the preimage sets");
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed instance: ") + e.what());
  }
}

void write_instance(const QuadSatInstance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << instance_to_json(inst) << '\n';
}

QuadSatInstance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return instance_from_json(ss.str());
}

}  // namespace qdqi

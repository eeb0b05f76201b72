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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "qdqi/instance_io.hpp"

using namespace qdqi;

namespace {

void expect_same(const QuadSatInstance& a, const QuadSatInstance& b) {
  EXPECT_EQ(a.p(), b.p());
  EXPECT_EQ(a.n(), b.n());
  EXPECT_EQ(a.B(), b.B());
  EXPECT_EQ(a.D(), b.D());
  EXPECT_EQ(a.F(), b.F());
  EXPECT_EQ(a.seed(), b.seed());
}

}  // namespace

TEST(instance_json, round_trip) {
  for (const auto& inst : {make_quadratic_opi(PrimeModulus(7), 3, 2, 42), make_linsat_rs(PrimeModulus(5), 2, 3, 1),
                           make_random_quadsat(PrimeModulus(11), 3, 5, 4, 9)}) {
    expect_same(inst, instance_from_json(instance_to_json(inst)));
  }
  const QuadSatInstance unseeded(PrimeModulus(3), 1, {{1}}, {{0}}, {{0}});
  const auto back = instance_from_json(instance_to_json(unseeded));
  EXPECT_FALSE(back.seed().has_value());
}

TEST(instance_json, key_order) {
  const QuadSatInstance tiny(PrimeModulus(3), 1, {{1}}, {{2}}, {{0, 2}}, 5);
  EXPECT_EQ(instance_to_json(tiny), R"({"p":3,"n":1,"m":1,"r":2,"seed":5,"B":[[1]],"D":[[2]],"F":[[0,2]]})");
}

TEST(instance_json, malformed_input) {
  EXPECT_THROW(instance_from_json("not json"), std::invalid_argument);
  EXPECT_THROW(instance_from_json(R"({"p":3,"n":1,"m":1,"r":1,"B":[[1]],"D":[[0]]})"), std::invalid_argument);
  EXPECT_THROW(instance_from_json(R"({"p":3,"n":1,"m":2,"r":1,"B":[[1]],"D":[[0]],"F":[[0]]})"),
               std::invalid_argument);
  EXPECT_THROW(instance_from_json(R"({"p":3,"n":1,"m":1,"r":2,"B":[[1]],"D":[[0]],"F":[[0]]})"),
               std::invalid_argument);
  EXPECT_THROW(instance_from_json(R"({"p":3,"n":1,"m":1,"r":1,"B":[[3]],"D":[[0]],"F":[[0]]})"),
               std::invalid_argument);
  EXPECT_THROW(instance_from_json(R"({"p":4,"n":1,"m":1,"r":1,"B":[[1]],"D":[[0]],"F":[[0]]})"),
               std::invalid_argument);
  EXPECT_THROW(instance_from_json(R"({"p":"3","n":1,"m":1,"r":1,"B":[[1]],"D":[[0]],"F":[[0]]})"),
               std::invalid_argument);
}

TEST(instance_file, round_trip_and_missing) {
  const auto dir = std::filesystem::temp_directory_path() / "qdqi_io_test";
  std::filesystem::create_directories(dir);
  const auto inst = make_quadratic_opi(PrimeModulus(5), 2, 2, 3);
  write_instance(inst, dir / "inst.json");
  expect_same(inst, read_instance(dir / "inst.json"));
  EXPECT_THROW(read_instance(dir / "absent.json"), std::runtime_error);
  std::filesystem::remove_all(dir);
}

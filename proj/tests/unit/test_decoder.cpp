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

#include <random>

#include "qdqi/decoder.hpp"

using namespace qdqi;

namespace {

void expect_round_trips(const SyndromeCode& code) {
  for (std::size_t w = 0; w <= code.max_weight(); ++w) {
    for_each_weight_vector(code.cols(), code.p(), w, [&](const Digits& y) {
      const auto res = decode_brute(code, code.syndrome(y));
      EXPECT_EQ(res.status, DecodeStatus::kFound) << digits_to_string(y);
      EXPECT_EQ(res.y, y);
      return true;
    });
  }
}

}  // namespace

TEST(weight_vectors, order_and_count) {
  std::vector<Digits> seen;
  for_each_weight_vector(3, 3, 2, [&](const Digits& y) {
    seen.push_back(y);
    return true;
  });
  ASSERT_EQ(seen.size(), 12u);
  EXPECT_EQ(seen[0], (Digits{1, 1, 0}));
  EXPECT_EQ(seen[1], (Digits{1, 2, 0}));
  EXPECT_EQ(seen[3], (Digits{2, 2, 0}));
  EXPECT_EQ(seen[4], (Digits{1, 0, 1}));
  EXPECT_EQ(seen.back(), (Digits{0, 2, 2}));

  int zero = 0;
  for_each_weight_vector(4, 5, 0, [&](const Digits& y) {
    EXPECT_EQ(hamming_weight(y), 0u);
    ++zero;
    return true;
  });
  EXPECT_EQ(zero, 1);
  EXPECT_TRUE(for_each_weight_vector(2, 3, 3, [](const Digits&) { return true; }));
  EXPECT_FALSE(for_each_weight_vector(2, 3, 1, [](const Digits&) { return false; }));
}

TEST(syndrome, linear_in_y) {
  const SyndromeCode code(PrimeModulus(5), {{1, 2, 3}, {4, 0, 1}}, 1);
  EXPECT_EQ(code.syndrome(Digits{0, 0, 0}), (Digits{0, 0}));
  EXPECT_EQ(code.syndrome(Digits{0, 2, 0}), (Digits{4, 0}));
  EXPECT_EQ(code.syndrome(Digits{2, 0, 0}), (Digits{2, 3}));
  EXPECT_THROW(code.syndrome(Digits{1, 1}), std::invalid_argument);
}

TEST(syndrome_code, validation) {
  EXPECT_THROW(SyndromeCode(PrimeModulus(3), {{1, 2}, {1}}, 1), std::invalid_argument);
  EXPECT_THROW(SyndromeCode(PrimeModulus(3), {{1, 3}}, 1), std::invalid_argument);
  EXPECT_THROW(SyndromeCode(PrimeModulus(3), {{1, 2}}, 3), std::invalid_argument);
}

TEST(decode, opi_round_trips) {
  for (auto [p, n] : {std::pair<std::uint32_t, std::size_t>{5, 2}, {7, 4}, {17, 2}, {17, 3}}) {
    const auto inst = make_quadratic_opi(PrimeModulus(p), n, 2, 42);
    expect_round_trips(quadratic_syndrome_code(inst, default_opi_ell(n)));
  }
  const auto lin = make_linsat_rs(PrimeModulus(7), 3, 3, 1);
  expect_round_trips(linear_syndrome_code(lin, 1));
}

TEST(decode, ambiguous_and_not_found) {
  const SyndromeCode shared(PrimeModulus(3), {{1, 1}}, 1);
  const auto amb = decode_brute(shared, Digits{1});
  EXPECT_EQ(amb.status, DecodeStatus::kAmbiguous);
  EXPECT_TRUE(amb.y.empty());

  const SyndromeCode ident(PrimeModulus(3), {{1, 0}, {0, 1}}, 1);
  const auto miss = decode_brute(ident, Digits{1, 1});
  EXPECT_EQ(miss.status, DecodeStatus::kNotFound);
  EXPECT_EQ(miss.candidates, 5u);
  EXPECT_THROW(decode_brute(ident, Digits{1}), std::invalid_argument);
}

TEST(dual_distance, examples) {
  for (auto [p, n] : {std::pair<std::uint32_t, std::size_t>{5, 2}, {7, 3}, {11, 4}}) {
    const auto inst = make_quadratic_opi(PrimeModulus(p), n, 2, 42);
    EXPECT_EQ(dual_min_distance(quadratic_syndrome_code(inst, 0)), n + 1);
  }
  EXPECT_EQ(dual_min_distance(SyndromeCode(PrimeModulus(5), {{1, 0, 2}, {3, 0, 1}}, 0)), 1u);
  EXPECT_EQ(dual_min_distance(SyndromeCode(PrimeModulus(5), {{1, 2}, {3, 2}}, 0)), 3u);
  const auto big = make_quadratic_opi(PrimeModulus(17), 8, 2, 42);
  EXPECT_THROW(dual_min_distance(quadratic_syndrome_code(big, 0), 1000), std::length_error);
}

TEST(unique_decoding, matches_distance) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    FieldMatrix H(2, Digits(4));
    for (auto& row : H) {
      for (auto& v : row) v = static_cast<std::uint32_t>(rng() % 3);
    }
    const SyndromeCode code(PrimeModulus(3), H, 1);
    EXPECT_EQ(uniquely_decodable(code), dual_min_distance(code) >= 3);
  }
}

TEST(decoder_error, carries_syndrome) {
  const DecoderError e("decoding failed", Digits{1, 2});
  EXPECT_EQ(e.syndrome(), (Digits{1, 2}));
  EXPECT_EQ(to_string(DecodeStatus::kAmbiguous), "ambiguous");
  EXPECT_EQ(digits_to_string(Digits{3, 0, 1}), "(3,0,1)");
}

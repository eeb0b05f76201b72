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

#include <cmath>
#include <vector>

#include "qdqi/gauss_sums.hpp"

using namespace qdqi;

namespace {
constexpr double kTol = 1e-9;

void expect_near(Complex a, Complex b, double tol = kTol) { EXPECT_LE(std::abs(a - b), tol) << a << " vs " << b; }
}  // namespace

TEST(quad_gauss, examples) {
  const PrimeModulus p3(3), p5(5), p7(7);
  expect_near(quad_gauss_closed(FieldElement(0, p5)), 5.0);
  expect_near(quad_gauss_closed(FieldElement(1, p5)), std::sqrt(5.0));
  expect_near(quad_gauss_closed(FieldElement(2, p5)), -std::sqrt(5.0));
  expect_near(quad_gauss_brute(FieldElement(2, p5)), -std::sqrt(5.0));
  expect_near(quad_gauss_brute(FieldElement(0, p3)), 3.0);
  expect_near(quad_gauss_brute(FieldElement(1, p3)), Complex(0, std::sqrt(3.0)));
  expect_near(quad_gauss_brute(FieldElement(1, p7)), Complex(0, std::sqrt(7.0)));
}

TEST(quad_gauss, closed_matches_brute_and_phase_relation) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const PrimeModulus mod(p);
    const Complex g1 = quad_gauss_brute(FieldElement(1, mod));
    for (std::uint32_t a = 0; a < p; ++a) {
      const FieldElement fa(a, mod);
      expect_near(quad_gauss_closed(fa), quad_gauss_brute(fa));
      if (a == 0) continue;
      expect_near(quad_gauss_brute(fa), static_cast<double>(chi(fa)) * g1);
      EXPECT_NEAR(std::abs(quad_gauss_brute(fa)), std::sqrt(static_cast<double>(p)), kTol);
    }
  }
}

TEST(general_quad_sum, examples) {
  const PrimeModulus p3(3), p5(5);
  const auto e = [](std::uint32_t v, const PrimeModulus& m) { return FieldElement(v, m); };
  expect_near(general_quad_sum_closed(e(0, p5), e(0, p5), e(0, p5)), 5.0);
  expect_near(general_quad_sum_closed(e(0, p5), e(1, p5), e(0, p5)), 0.0);
  expect_near(general_quad_sum_closed(e(1, p3), e(2, p3), e(0, p3)),
              general_quad_sum_brute(e(1, p3), e(2, p3), e(0, p3)));
}

TEST(general_quad_sum, exhaustive) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const PrimeModulus mod(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        for (std::uint32_t c = 0; c < p; ++c) {
          const FieldElement fa(a, mod), fb(b, mod), fc(c, mod);
          expect_near(general_quad_sum_closed(fa, fb, fc), general_quad_sum_brute(fa, fb, fc));
        }
      }
    }
  }
}

TEST(multidim_quad_sum, examples_and_enumeration) {
  const PrimeModulus p3(3), p5(5);
  std::vector<FieldElement> d1{FieldElement(1, p5)};
  expect_near(multidim_quad_sum(d1), std::sqrt(5.0));
  std::vector<FieldElement> d2{FieldElement(1, p3), FieldElement(1, p3)};
  expect_near(multidim_quad_sum(d2), -3.0);
  std::vector<FieldElement> d3{FieldElement(1, p5), FieldElement(2, p5)};
  expect_near(multidim_quad_sum(d3), -5.0);

  for (std::uint32_t p : {3u, 5u}) {
    const PrimeModulus mod(p);
    for (std::uint32_t a = 1; a < p; ++a) {
      for (std::uint32_t b = 1; b < p; ++b) {
        Complex brute = 0.0;
        for (std::uint32_t x = 0; x < p; ++x) {
          for (std::uint32_t y = 0; y < p; ++y) {
            brute += root_of_unity(a * x * x + b * y * y, p);
          }
        }
        std::vector<FieldElement> d{FieldElement(a, mod), FieldElement(b, mod)};
        expect_near(multidim_quad_sum(d), brute);
      }
    }
  }
}

TEST(multidim_quad_sum, rejects_singular) {
  const PrimeModulus p5(5);
  std::vector<FieldElement> d{FieldElement(1, p5), FieldElement(0, p5)};
  EXPECT_THROW(multidim_quad_sum(d), std::invalid_argument);
  EXPECT_THROW(multidim_quad_sum(std::vector<FieldElement>{}), std::invalid_argument);
}

TEST(root_of_unity, reduces_exponent) {
  expect_near(root_of_unity(-1, 5), root_of_unity(4, 5), 0.0);
  expect_near(root_of_unity(12, 5), root_of_unity(2, 5), 0.0);
}

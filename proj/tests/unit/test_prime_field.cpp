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

#include <set>

#include "qdqi/prime_field.hpp"

using namespace qdqi;

TEST(prime_modulus, rejects_non_primes) {
  EXPECT_THROW(PrimeModulus(2), std::invalid_argument);
  EXPECT_THROW(PrimeModulus(9), std::invalid_argument);
  EXPECT_THROW(PrimeModulus(1), std::invalid_argument);
  EXPECT_EQ(PrimeModulus(13).residue_class(), 1u);
  EXPECT_EQ(PrimeModulus(7).residue_class(), 3u);
}

TEST(field_element, arithmetic) {
  const PrimeModulus p5(5), p7(7);
  EXPECT_EQ((FieldElement(2, p5) + FieldElement(4, p5)).value(), 1u);
  EXPECT_EQ((FieldElement(0, p5) + FieldElement(3, p5)).value(), 3u);
  EXPECT_EQ((FieldElement(3, p7) * FieldElement(4, p7)).value(), 5u);
  EXPECT_EQ((FieldElement(1, p7) - FieldElement(4, p7)).value(), 4u);
  EXPECT_EQ((-FieldElement(2, p7)).value(), 5u);
  EXPECT_EQ(FieldElement::from_signed(-8, p7).value(), 6u);
  EXPECT_THROW(FieldElement(2, p5) + FieldElement(2, p7), std::invalid_argument);
  EXPECT_THROW(FieldElement(5, p5), std::invalid_argument);
}

TEST(field_element, inverse) {
  const PrimeModulus p5(5), p7(7);
  EXPECT_EQ(inv(FieldElement(1, p5)).value(), 1u);
  EXPECT_EQ(inv(FieldElement(2, p5)).value(), 3u);
  EXPECT_EQ(inv(FieldElement(4, p7)).value(), 2u);
  EXPECT_THROW(inv(FieldElement(0, p7)), std::domain_error);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 101u}) {
    for (std::uint32_t a = 1; a < p; ++a) {
      const FieldElement x(a, PrimeModulus(p));
      EXPECT_EQ((x * inv(x)).value(), 1u);
    }
  }
}

TEST(chi, examples_and_square_enumeration) {
  const PrimeModulus p5(5);
  EXPECT_EQ(chi(FieldElement(0, p5)), 0);
  EXPECT_EQ(chi(FieldElement(1, p5)), 1);
  EXPECT_EQ(chi(FieldElement(2, p5)), -1);
  for (std::uint32_t p = 3; p <= 101; p += 2) {
    if (!is_prime(p)) continue;
    const PrimeModulus mod(p);
    std::set<std::uint32_t> squares;
    for (std::uint32_t x = 1; x < p; ++x) squares.insert(mod_mul(x, x, p));
    for (std::uint32_t a = 1; a < p; ++a) {
      EXPECT_EQ(chi(FieldElement(a, mod)), squares.count(a) ? 1 : -1);
      EXPECT_EQ(chi(FieldElement(a, mod)), chi(inv(FieldElement(a, mod))));
    }
  }
}

TEST(chi, multiplicative) {
  for (std::uint32_t p = 3; p <= 101; p += 2) {
    if (!is_prime(p)) continue;
    const PrimeModulus mod(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        ASSERT_EQ(chi(FieldElement(a, mod)) * chi(FieldElement(b, mod)), chi(FieldElement(mod_mul(a, b, p), mod)));
      }
    }
  }
}

TEST(i_p, residue_classes) {
  EXPECT_EQ(i_p(PrimeModulus(5)), std::complex<double>(1, 0));
  EXPECT_EQ(i_p(PrimeModulus(3)), std::complex<double>(0, 1));
  EXPECT_EQ(i_p(PrimeModulus(13)), std::complex<double>(1, 0));
  EXPECT_EQ(i_p_pow(PrimeModulus(7), 2), std::complex<double>(-1, 0));
  EXPECT_EQ(i_p_pow(PrimeModulus(7), -1), std::complex<double>(0, -1));
}

TEST(primitive_root, smallest_generator) {
  EXPECT_EQ(primitive_root(PrimeModulus(3)).value(), 2u);
  EXPECT_EQ(primitive_root(PrimeModulus(5)).value(), 2u);
  EXPECT_EQ(primitive_root(PrimeModulus(7)).value(), 3u);
  EXPECT_EQ(primitive_root(PrimeModulus(23)).value(), 5u);
  EXPECT_EQ(smallest_nonresidue(PrimeModulus(7)), 3u);
  EXPECT_EQ(smallest_nonresidue(PrimeModulus(17)), 3u);
}

TEST(sqrt_invertible, examples) {
  const PrimeModulus p7(7);
  EXPECT_EQ(sqrt_invertible(FieldElement(0, p7)).value(), 0u);
  EXPECT_EQ(sqrt_invertible(FieldElement(4, p7)).value(), 2u);
  EXPECT_EQ(sqrt_invertible(FieldElement(3, p7)).value(), 5u);
}

TEST(sqrt_invertible, bijection_and_inverse) {
  for (std::uint32_t p = 3; p <= 101; p += 2) {
    if (!is_prime(p)) continue;
    const PrimeModulus mod(p);
    const InvertibleSqrt map(mod);
    std::set<std::uint32_t> image;
    for (std::uint32_t x = 0; x < p; ++x) {
      const std::uint32_t s = map.forward(x);
      image.insert(s);
      EXPECT_EQ(map.inverse(s), x);
      if (x == 0) continue;
      const std::uint32_t s2 = mod_mul(s, s, p);
      const std::uint32_t rebuilt = map.branch(s) == 1 ? s2 : mod_mul(map.twist(), s2, p);
      EXPECT_EQ(rebuilt, x);
      if (p % 4 == 3) {
        // the branch is the character of s, so x = chi(s) s^2
        EXPECT_EQ(map.branch(s), chi(FieldElement(s, mod)));
        EXPECT_EQ(FieldElement::from_signed(chi(FieldElement(s, mod)) * static_cast<std::int64_t>(s2), mod).value(), x);
      }
    }
    EXPECT_EQ(image.size(), p);
  }
}

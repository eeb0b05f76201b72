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

#include <numbers>

#include "qdqi/primitives.hpp"

using namespace qdqi;

namespace {

SparseState shifted_phase(const PrimeModulus& mod, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t p = mod.value();
  SparseState t(RegisterLayout(mod, {{"x", 1}}));
  for (std::uint32_t x = 0; x < p; ++x) {
    const std::uint32_t u = mod_add(x, b, p);
    t.add({x}, root_of_unity(mod_mul(a, mod_mul(u, u, p), p), p));
  }
  return t;
}

}  // namespace

TEST(quadratic_phase, target_and_probability) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const PrimeModulus mod(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      const auto r = sim_quadratic_phase(FieldElement(a, mod));
      EXPECT_LE(distance_up_to_phase_scale(shifted_phase(mod, a, 0), r.state), 1e-9) << p << ' ' << a;
      EXPECT_NEAR(r.state.norm_sq(), 1.0, 1e-12);
      ASSERT_EQ(r.stage_probabilities.size(), 2u);
      EXPECT_NEAR(r.stage_probabilities[0], 0.5, 1e-12);
      EXPECT_NEAR(r.stage_probabilities[1], 0.5, 1e-12);
      EXPECT_NEAR(r.success_probability, 0.25, 1e-12);
    }
  }
}

TEST(shifted_phase, target_and_uncompute_probability) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const PrimeModulus mod(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        const auto r = sim_shifted_quadratic_phase(FieldElement(a, mod), FieldElement(b, mod));
        EXPECT_LE(distance_up_to_phase_scale(shifted_phase(mod, a, b), r.state), 1e-9);
        EXPECT_NEAR(r.stage_probabilities.back(), 1.0 / p, 1e-12);
        EXPECT_NEAR(r.success_probability, 0.25 / p, 1e-12);
      }
    }
  }
  EXPECT_THROW(sim_shifted_quadratic_phase(FieldElement(1, PrimeModulus(3)), FieldElement(1, PrimeModulus(5))),
               std::invalid_argument);
}

TEST(quadratic_form_phase, product_of_single_digit_phases) {
  const PrimeModulus mod(5);
  const std::vector<FieldElement> diag{FieldElement(1, mod), FieldElement(0, mod), FieldElement(3, mod)};
  const auto r = sim_quadratic_form_phase(diag);
  SparseState target(RegisterLayout(mod, {{"x", 3}}));
  Digits x(3, 0);
  do {
    target.add(x, root_of_unity(std::int64_t{x[0]} * x[0] + 3 * std::int64_t{x[2]} * x[2], 5));
  } while (next_digits(x, 5));
  EXPECT_LE(distance_up_to_phase_scale(target, r.state), 1e-9);
  EXPECT_NEAR(r.success_probability, 1.0 / 64.0, 1e-12);
  EXPECT_EQ(r.stage_probabilities.size(), 6u);
  EXPECT_THROW(sim_quadratic_form_phase(std::vector<FieldElement>{}), std::invalid_argument);
}

TEST(quantum_condition, matrix_selects_branch_per_column) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const PrimeModulus mod(p);
    const auto U0 = qft_matrix(p);
    const auto U1 = f_alpha_matrix(FieldElement(1, mod));
    const auto even = [](std::uint32_t x) { return x % 2 == 0; };
    const QuantumCondition cond(even, U0, U1, mod);
    for (std::uint32_t x = 0; x < p; ++x) {
      const auto& U = even(x) ? U1 : U0;
      for (std::uint32_t z = 0; z < p; ++z) {
        EXPECT_LE(std::abs(cond.matrix()[z][x] - U[z][x] / std::numbers::sqrt2), 1e-12);
      }
    }
    SparseState in(RegisterLayout(mod, {{"x", 1}}));
    in.add({0}, 0.6);
    in.add({1}, Complex(0, 0.8));
    const auto out = cond.apply(in);
    for (std::uint32_t z = 0; z < p; ++z) {
      const Complex want = (0.6 * U1[z][0] + Complex(0, 0.8) * U0[z][1]) / std::numbers::sqrt2;
      EXPECT_LE(std::abs(out.amplitude({z}) - want), 1e-12);
    }
    EXPECT_THROW(cond.apply(SparseState(RegisterLayout(mod, {{"x", 2}}))), std::invalid_argument);
  }
}

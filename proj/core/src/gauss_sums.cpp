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

#include "qdqi/gauss_sums.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdqi {

Complex root_of_unity(std::int64_t k, std::uint32_t p) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod_reduce(k, p)) / static_cast<double>(p);
  return std::polar(1.0, angle);
}

Complex quad_gauss_closed(const FieldElement& a) {
  const auto& p = a.modulus();
  if (a.is_zero()) return {static_cast<double>(p.value()), 0.0};
  return i_p(p) * static_cast<double>(chi(a)) * std::sqrt(static_cast<double>(p.value()));
}

Complex quad_gauss_brute(const FieldElement& a) {
  const std::uint32_t p = a.modulus().value();
  Complex sum = 0.0;
  for (std::uint32_t x = 0; x < p; ++x) {
    sum += root_of_unity(mod_mul(a.value(), mod_mul(x, x, p), p), p);
  }
  return sum;
}

Complex general_quad_sum_closed(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  const auto& modulus = a.modulus();
  if (!(b.modulus() == modulus) || !(c.modulus() == modulus)) throw std::invalid_argument("modulus mismatch");
  const std::uint32_t p = modulus.value();
  if (a.is_zero()) {
    if (!b.is_zero()) return 0.0;
    return static_cast<double>(p) * root_of_unity(c.value(), p);
  }
  // c - b^2 / (4a)
  const FieldElement four_a = FieldElement(4 % p, modulus) * a;
  const FieldElement exponent = c - b * b * inv(four_a);
  const Complex g1 = i_p(modulus) * std::sqrt(static_cast<double>(p));
  return root_of_unity(exponent.value(), p) * static_cast<double>(chi(a)) * g1;
}

Complex general_quad_sum_brute(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  const auto& modulus = a.modulus();
  if (!(b.modulus() == modulus) || !(c.modulus() == modulus)) throw std::invalid_argument("modulus mismatch");
  const std::uint32_t p = modulus.value();
  Complex sum = 0.0;
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint32_t e = mod_add(mod_add(mod_mul(a.value(), mod_mul(x, x, p), p), mod_mul(b.value(), x, p), p),
                              c.value(), p);
    sum += root_of_unity(e, p);
  }
  return sum;
}

Complex multidim_quad_sum(std::span<const FieldElement> diagonal) {
  if (diagonal.empty()) throw std::invalid_argument("empty quadratic form");
  const auto& modulus = diagonal.front().modulus();
  FieldElement det(1, modulus);
  for (const auto& d : diagonal) {
    if (d.is_zero()) throw std::invalid_argument("singular matrix");
    det = det * d;
  }
  const auto n = static_cast<std::int64_t>(diagonal.size());
  const double magnitude = std::pow(static_cast<double>(modulus.value()), static_cast<double>(n) / 2.0);
  return i_p_pow(modulus, n) * magnitude * static_cast<double>(chi(det));
}

}  // namespace qdqi

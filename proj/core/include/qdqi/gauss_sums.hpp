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

#include <complex>
#include <cstdint>
#include <span>

#include "qdqi/prime_field.hpp"

namespace qdqi {

using Complex = std::complex<double>;

/// omega_p^k = exp(2 pi i k / p), with k reduced into [0, p) first.
Complex root_of_unity(std::int64_t k, std::uint32_t p);

/// g(a; p): p for a = 0, i_p chi(a) sqrt(p) otherwise.
Complex quad_gauss_closed(const FieldElement& a);

/// g(a; p) as the literal sum over x = 0, 1, ..., p-1 of omega_p^{a x^2}.
Complex quad_gauss_brute(const FieldElement& a);

/// sum_x omega_p^{a x^2 + b x + c} by completing the square.
Complex general_quad_sum_closed(const FieldElement& a, const FieldElement& b, const FieldElement& c);

/// Term-by-term evaluation of the same sum.
Complex general_quad_sum_brute(const FieldElement& a, const FieldElement& b, const FieldElement& c);

/// sum over x in F_p^n of omega_p^{x^T diag(d) x} = i_p^n p^{n/2} chi(prod d).
///
/// Only diagonal forms are supported. Throws std::invalid_argument
/// ("singular matrix") when an entry is zero, and on an empty diagonal.
Complex multidim_quad_sum(std::span<const FieldElement> diagonal);

}  // namespace qdqi

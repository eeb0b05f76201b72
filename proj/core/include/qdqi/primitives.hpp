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

#include <functional>
#include <span>
#include <vector>

#include "qdqi/statevector.hpp"

namespace qdqi {

struct PrimitiveResult {
  SparseState state;                       // normalized, post-selected output
  double success_probability = 0.0;        // product of all stages
  std::vector<double> stage_probabilities;  // one per post-selection
};

/// |a> -> sum_x w^{a x^2} |x> via QFT, the invertible square root, a
/// branch flag and a Hadamard on the control qubit.
PrimitiveResult sim_quadratic_phase(const FieldElement& a);

/// |a>|b> -> sum_x w^{a (x+b)^2} |x>; the last stage uncomputes |b> with a
/// QFT and a post-selection on 0.
PrimitiveResult sim_shifted_quadratic_phase(const FieldElement& a, const FieldElement& b);

/// |D> -> sum_x w^{x^T diag(D) x} |x>, one quadratic-phase run per digit.
PrimitiveResult sim_quadratic_form_phase(std::span<const FieldElement> diag);

/// Primitive over one digit: compute P(x) into an ancilla, apply U0 or U1
/// conditioned on it, Hadamard the ancilla and keep 0.
class QuantumCondition {
 public:
  QuantumCondition(std::function<bool(std::uint32_t)> predicate, DigitMatrix U0, DigitMatrix U1, PrimeModulus p);

  /// Post-selected (unnormalized) action on a single-digit register.
  SparseState apply(const SparseState& input) const;
  /// Column x is apply(|x>).
  const DigitMatrix& matrix() const { return matrix_; }

 private:
  SparseState simulate(const SparseState& input) const;

  std::function<bool(std::uint32_t)> predicate_;
  DigitMatrix U0_, U1_;
  PrimeModulus p_;
  DigitMatrix matrix_;
};

}  // namespace qdqi

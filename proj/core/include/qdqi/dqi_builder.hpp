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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qdqi/decoder.hpp"
#include "qdqi/quadsat_model.hpp"
#include "qdqi/statevector.hpp"

namespace qdqi {

/// Coefficient of t^k in (1 + g_sat t)^s (1 + g_unsat t)^(m-s) for k = 0..kmax.
std::vector<double> elementary_symmetric_two_value(std::size_t s, std::size_t m, double g_sat, double g_unsat,
                                                   std::size_t kmax);

/// e_k(values) for k = 0..kmax by the usual product recurrence.
std::vector<double> elementary_symmetric(std::span<const double> values, std::size_t kmax);

/// P(s) = sum_k w_k e_k(s) / sqrt(p^(n-k) C(m,k)) for s = 0..m: the DQI
/// amplitude of any x with s satisfied constraints.
std::vector<double> dqi_polynomial_values(const QuadSatInstance& inst, std::span<const double> w);

/// Optimal weights: the top eigenvector of A^{(m, ell, d)}.
std::vector<double> optimal_weights(const QuadSatInstance& inst, std::size_t ell);

/// Amplitudes enumerated over F_p^n on register "x". Requires
/// w.size() <= m; throws std::length_error past the enumeration budget.
SparseState build_direct(const QuadSatInstance& inst, std::span<const double> w,
                         std::uint64_t budget = enumeration_budget());

/// Sum over low-weight y of prod g~_i(y_i) prod_j F_{(B^T y)_j}|(D^T y)_j>,
/// mapped back to the position basis with the inverse QFT.
SparseState build_qft_form(const QuadSatInstance& inst, std::span<const double> w,
                           std::uint64_t budget = enumeration_budget());

struct DecoderLogEntry {
  Digits syndrome;
  Digits decoded;
  std::size_t weight = 0;
  std::uint64_t candidates = 0;
};

struct PipelineStep {
  std::string name;
  SparseState state;
};

struct PipelineTrace {
  std::vector<PipelineStep> steps;  // steps 1..8
  bool decoder_success = false;
  std::vector<DecoderLogEntry> decoder_log;
  SparseState final_state;  // register "x"
};

/// Digits needed for a base-p register holding 0..ell.
std::size_t weight_register_width(std::size_t ell, std::uint32_t p);

/// The state-preparation circuit on registers (weight, error[m], syndrome[n]). Requires
/// B = 0. Throws DecoderError if a syndrome cannot be uncomputed.
PipelineTrace run_pipeline(const QuadSatInstance& inst, std::span<const double> w);

}  // namespace qdqi

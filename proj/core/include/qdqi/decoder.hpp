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
#include <functional>
#include <stdexcept>
#include <string>

#include "qdqi/prime_field.hpp"
#include "qdqi/quadsat_model.hpp"

namespace qdqi {

/// Parity-check view of the syndrome map y -> H y with H an n x m matrix.
class SyndromeCode {
 public:
  SyndromeCode(PrimeModulus p, FieldMatrix H, std::size_t max_weight);

  const PrimeModulus& modulus() const { return p_; }
  std::uint32_t p() const { return p_.value(); }
  const FieldMatrix& H() const { return H_; }
  std::size_t rows() const { return H_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t max_weight() const { return max_weight_; }

  Digits syndrome(std::span<const std::uint32_t> y) const;

 private:
  PrimeModulus p_;
  FieldMatrix H_;
  std::size_t cols_;
  std::size_t max_weight_;
};

FieldMatrix transpose(const FieldMatrix& M, std::size_t cols);

/// H = D^T: the syndrome map of the quadratic parts.
SyndromeCode quadratic_syndrome_code(const QuadSatInstance& inst, std::size_t max_weight);
/// H = B^T: the syndrome map of the linear parts.
SyndromeCode linear_syndrome_code(const QuadSatInstance& inst, std::size_t max_weight);

std::size_t hamming_weight(std::span<const std::uint32_t> y);

/// Visits every y in F_p^m of Hamming weight exactly w: supports in
/// lexicographic order, then nonzero values with the last position fastest.
/// Stops early when visit returns false; returns false in that case.
bool for_each_weight_vector(std::size_t m, std::uint32_t p, std::size_t w,
                            const std::function<bool(const Digits&)>& visit);

enum class DecodeStatus { kFound, kNotFound, kAmbiguous };

struct DecodeResult {
  DecodeStatus status = DecodeStatus::kNotFound;
  Digits y;                     // the decoded error when found
  std::uint64_t candidates = 0;  // error vectors enumerated
};

/// Exhaustive search over weights 0..max_weight. The whole radius is
/// scanned so that a second preimage is reported as ambiguous.
DecodeResult decode_brute(const SyndromeCode& code, std::span<const std::uint32_t> syndrome);

/// Minimum weight of a nonzero kernel vector of H, or cols() + 1 when H is
/// injective. Throws std::length_error once more than budget candidates
/// would be visited.
std::size_t dual_min_distance(const SyndromeCode& code, std::uint64_t budget = enumeration_budget());

/// True when all error vectors of weight <= max_weight have distinct syndromes.
bool uniquely_decodable(const SyndromeCode& code, std::uint64_t budget = enumeration_budget());

class DecoderError : public std::runtime_error {
 public:
  DecoderError(const std::string& what, Digits syndrome)
      : std::runtime_error(what), syndrome_(std::move(syndrome)) {}
  const Digits& syndrome() const { return syndrome_; }

 private:
  Digits syndrome_;
};

std::string to_string(DecodeStatus s);
std::string digits_to_string(std::span<const std::uint32_t> d);

}  // namespace qdqi

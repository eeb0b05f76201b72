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

#include "qdqi/decoder.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qdqi {

SyndromeCode::SyndromeCode(PrimeModulus p, FieldMatrix H, std::size_t max_weight)
    : p_(p), H_(std::move(H)), cols_(H_.empty() ? 0 : H_.front().size()), max_weight_(max_weight) {
  for (const auto& row : H_) {
    if (row.size() != cols_) throw std::invalid_argument("ragged parity-check matrix");
    for (auto v : row) {
      if (v >= p_.value()) throw std::invalid_argument("parity-check entry outside [0, p)");
    }
  }
  if (max_weight_ > cols_) throw std::invalid_argument("decoding radius exceeds code length");
}

Digits SyndromeCode::syndrome(std::span<const std::uint32_t> y) const {
  if (y.size() != cols_) throw std::invalid_argument("error vector length differs from code length");
  const std::uint32_t p = p_.value();
  Digits s(H_.size(), 0);
  for (std::size_t j = 0; j < H_.size(); ++j) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < cols_; ++i) acc += std::uint64_t{H_[j][i]} * y[i];
    s[j] = static_cast<std::uint32_t>(acc % p);
  }
  return s;
}

FieldMatrix transpose(const FieldMatrix& M, std::size_t cols) {
  FieldMatrix T(cols, Digits(M.size(), 0));
  for (std::size_t i = 0; i < M.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) T[j][i] = M[i][j];
  }
  return T;
}

SyndromeCode quadratic_syndrome_code(const QuadSatInstance& inst, std::size_t max_weight) {
  return SyndromeCode(inst.modulus(), transpose(inst.D(), inst.n()), max_weight);
}

SyndromeCode linear_syndrome_code(const QuadSatInstance& inst, std::size_t max_weight) {
  return SyndromeCode(inst.modulus(), transpose(inst.B(), inst.n()), max_weight);
}

std::size_t hamming_weight(std::span<const std::uint32_t> y) {
  return static_cast<std::size_t>(std::count_if(y.begin(), y.end(), [](auto v) { return v != 0; }));
}

bool for_each_weight_vector(std::size_t m, std::uint32_t p, std::size_t w,
                            const std::function<bool(const Digits&)>& visit) {
  if (w > m) return true;
  std::vector<std::size_t> support(w);
  std::iota(support.begin(), support.end(), std::size_t{0});
  Digits y(m, 0);
  while (true) {
    Digits values(w, 1);
    while (true) {
      std::fill(y.begin(), y.end(), 0);
      for (std::size_t k = 0; k < w; ++k) y[support[k]] = values[k];
      if (!visit(y)) return false;
      std::size_t k = w;
      while (k > 0 && values[k - 1] == p - 1) values[--k] = 1;
      if (k == 0) break;
      ++values[k - 1];
    }
    // next combination
    std::size_t i = w;
    while (i > 0 && support[i - 1] == m - w + (i - 1)) --i;
    if (i == 0) return true;
    ++support[i - 1];
    for (std::size_t j = i; j < w; ++j) support[j] = support[j - 1] + 1;
  }
}

DecodeResult decode_brute(const SyndromeCode& code, std::span<const std::uint32_t> syndrome) {
  if (syndrome.size() != code.rows()) throw std::invalid_argument("syndrome length differs from H");
  DecodeResult result;
  for (std::size_t w = 0; w <= code.max_weight() && result.status != DecodeStatus::kAmbiguous; ++w) {
    for_each_weight_vector(code.cols(), code.p(), w, [&](const Digits& y) {
      ++result.candidates;
      const Digits s = code.syndrome(y);
      if (!std::equal(s.begin(), s.end(), syndrome.begin())) return true;
      if (result.status == DecodeStatus::kFound) {
        result.status = DecodeStatus::kAmbiguous;
        return false;
      }
      result.status = DecodeStatus::kFound;
      result.y = y;
      return true;
    });
  }
  if (result.status != DecodeStatus::kFound) result.y.clear();
  return result;
}

std::size_t dual_min_distance(const SyndromeCode& code, std::uint64_t budget) {
  std::uint64_t visited = 0;
  for (std::size_t w = 1; w <= code.cols(); ++w) {
    bool hit = false;
    for_each_weight_vector(code.cols(), code.p(), w, [&](const Digits& y) {
      // kernel vectors are closed under scaling, so fix the leading value to 1
      const auto lead = std::find_if(y.begin(), y.end(), [](auto v) { return v != 0; });
      if (*lead != 1) return true;
      if (++visited > budget) throw std::length_error("enumeration budget exceeded");
      const Digits s = code.syndrome(y);
      if (std::all_of(s.begin(), s.end(), [](auto v) { return v == 0; })) {
        hit = true;
        return false;
      }
      return true;
    });
    if (hit) return w;
  }
  return code.cols() + 1;
}

bool uniquely_decodable(const SyndromeCode& code, std::uint64_t budget) {
  std::map<Digits, Digits> seen;
  std::uint64_t visited = 0;
  bool unique = true;
  for (std::size_t w = 0; w <= code.max_weight() && unique; ++w) {
    for_each_weight_vector(code.cols(), code.p(), w, [&](const Digits& y) {
      if (++visited > budget) throw std::length_error("enumeration budget exceeded");
      unique = seen.emplace(code.syndrome(y), y).second;
      return unique;
    });
  }
  return unique;
}

std::string to_string(DecodeStatus s) {
  switch (s) {
    case DecodeStatus::kFound:
      return "found";
    case DecodeStatus::kNotFound:
      return "not_found";
    case DecodeStatus::kAmbiguous:
      return "ambiguous";
  }
  return "unknown";
}

std::string digits_to_string(std::span<const std::uint32_t> d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d[i]);
  }
  return out + ")";
}

}  // namespace qdqi

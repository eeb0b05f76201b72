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
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qdqi/gauss_sums.hpp"
#include "qdqi/prime_field.hpp"
#include "qdqi/quadsat_model.hpp"

namespace qdqi {

inline constexpr double kPruneThreshold = 1e-14;

struct Register {
  std::string name;
  std::size_t digits;
};

/// Named registers laid out left to right; all digits are F_p-valued.
class RegisterLayout {
 public:
  RegisterLayout(PrimeModulus p, std::vector<Register> registers);

  const PrimeModulus& modulus() const { return p_; }
  std::uint32_t p() const { return p_.value(); }
  const std::vector<Register>& registers() const { return registers_; }
  std::size_t total_digits() const { return total_; }

  bool has(const std::string& name) const;
  /// Index of the first digit of a register. Throws std::out_of_range.
  std::size_t offset(const std::string& name) const;
  std::size_t width(const std::string& name) const;

  bool operator==(const RegisterLayout& o) const;

 private:
  const Register& find(const std::string& name) const;

  PrimeModulus p_;
  std::vector<Register> registers_;
  std::size_t total_ = 0;
};

using DigitMatrix = std::vector<std::vector<Complex>>;  // [row][col]

/// Sparse amplitude map keyed by full digit tuples, iterated in
/// lexicographic order.
class SparseState {
 public:
  using Map = std::map<Digits, Complex>;

  explicit SparseState(RegisterLayout layout);
  static SparseState basis(RegisterLayout layout, Digits digits);

  const RegisterLayout& layout() const { return layout_; }
  const Map& amplitudes() const { return amps_; }
  std::size_t size() const { return amps_.size(); }

  Complex amplitude(const Digits& digits) const;
  /// Accumulates into an entry. Validates length and range.
  void add(const Digits& digits, Complex value);
  /// Drops entries with magnitude below the prune threshold.
  void prune();

  double norm_sq() const;
  SparseState scaled(Complex c) const;
  SparseState normalized() const;

 private:
  RegisterLayout layout_;
  Map amps_;
};

Complex inner_product(const SparseState& a, const SparseState& b);  // <a|b>
SparseState operator+(const SparseState& a, const SparseState& b);

DigitMatrix identity_matrix(std::uint32_t p);
DigitMatrix qft_matrix(std::uint32_t p, bool inverse = false);
/// Qubit Hadamard on {|0>, |1>}, identity on the remaining digit values.
DigitMatrix embedded_hadamard(std::uint32_t p);
DigitMatrix matmul(const DigitMatrix& a, const DigitMatrix& b);

/// Column 0 is p|alpha>; column x != 0 holds sum_t w^{(z-alpha)t - x t^2}
/// = chi(-x) g(1;p) w^{x^{-1}(z-alpha)^2/4}.
DigitMatrix f_alpha_matrix(const FieldElement& alpha);

SparseState apply_single_digit_operator(const SparseState& state, std::size_t digit, const DigitMatrix& m);

/// Applies matrices[select(tuple)] to one digit; select sees the whole tuple
/// and must not depend on the target digit.
SparseState apply_conditional_digit_operator(const SparseState& state, std::size_t digit,
                                             const std::vector<DigitMatrix>& matrices,
                                             const std::function<std::size_t(const Digits&)>& select);

SparseState qft(const SparseState& state, const std::string& reg);
SparseState iqft(const SparseState& state, const std::string& reg);

/// Relabels basis tuples. Throws std::logic_error if two stored tuples
/// collide (the map is not reversible on the support).
SparseState apply_basis_map(const SparseState& state, const std::function<Digits(const Digits&)>& f);

struct Postselected {
  SparseState state;  // renormalized
  double probability;
};

/// Projects onto tuples accepted by keep. Throws std::domain_error on a
/// zero-norm input or an empty projection.
Postselected postselect(const SparseState& state, const std::function<bool(const Digits&)>& keep);

/// The state of one register, dropping the others. Throws std::logic_error
/// if the other registers are not in a single shared basis state.
SparseState extract_register(const SparseState& state, const std::string& reg);

SparseState tensor(const SparseState& a, const SparseState& b);

/// min_c ||s1 - c s2|| / ||s1||. Throws std::domain_error on zero norm and
/// std::invalid_argument on a layout mismatch.
double distance_up_to_phase_scale(const SparseState& s1, const SparseState& s2);

/// Born-rule probabilities aggregated into bins by classifier value.
std::vector<double> measure_distribution(const SparseState& state, std::size_t bins,
                                         const std::function<std::size_t(const Digits&)>& classifier);

/// Sum_s s Pr[s] for a state on a single n-digit register.
double expectation_satisfied(const SparseState& state, const QuadSatInstance& inst);

/// Rows "d1;d2;...;dk,re,im" in lexicographic order, 17 significant digits.
void write_csv(const SparseState& state, std::ostream& out);

}  // namespace qdqi

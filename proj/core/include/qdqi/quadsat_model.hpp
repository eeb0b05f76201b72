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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qdqi/gauss_sums.hpp"
#include "qdqi/prime_field.hpp"

namespace qdqi {

using Rational = boost::multiprecision::cpp_rational;
using Digits = std::vector<std::uint32_t>;
using FieldMatrix = std::vector<Digits>;

/// Default cap on the number of basis states any enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Reads QDQI_BUDGET from the environment, falling back to the default.
std::uint64_t enumeration_budget();

/// p^n, or throws std::length_error("enumeration budget exceeded") if it
/// exceeds the budget.
std::uint64_t checked_space_size(std::uint32_t p, std::size_t n, std::uint64_t budget);

/// Advances a digit tuple in lexicographic order (last digit fastest).
/// Returns false after wrapping around from (p-1, ..., p-1).
bool next_digits(Digits& digits, std::uint32_t p);

/// A max-QUADSAT problem with diagonal quadratic parts.
///
/// Constraint i is satisfied by x when b_i . x + sum_j D_ij x_j^2 lies in F_i.
/// Every F_i has the same size r with 1 <= r <= p-1.
class QuadSatInstance {
 public:
  QuadSatInstance(PrimeModulus p, std::size_t n, FieldMatrix B, FieldMatrix D, std::vector<Digits> F,
                  std::optional<std::uint64_t> seed = std::nullopt);

  const PrimeModulus& modulus() const { return p_; }
  std::uint32_t p() const { return p_.value(); }
  std::size_t n() const { return n_; }
  std::size_t m() const { return B_.size(); }
  std::uint32_t r() const { return r_; }
  std::optional<std::uint64_t> seed() const { return seed_; }

  const FieldMatrix& B() const { return B_; }
  const FieldMatrix& D() const { return D_; }
  /// Sorted preimage sets.
  const std::vector<Digits>& F() const { return F_; }

  bool in_preimage(std::size_t i, std::uint32_t v) const { return member_[i * p_.value() + v] != 0; }
  bool linear_part_zero() const;
  bool quadratic_part_zero() const;

  /// b_i . x + x^T C_i x for the diagonal C_i.
  std::uint32_t constraint_argument(std::size_t i, std::span<const std::uint32_t> x) const;

 private:
  PrimeModulus p_;
  std::size_t n_;
  FieldMatrix B_;
  FieldMatrix D_;
  std::vector<Digits> F_;
  std::vector<std::uint8_t> member_;
  std::uint32_t r_ = 0;
  std::optional<std::uint64_t> seed_;
};

/// sum_i f_i(...) in [-m, m]. Throws std::invalid_argument on a dimension mismatch.
int objective_eval(const QuadSatInstance& inst, std::span<const std::uint32_t> x);

/// Number of satisfied constraints s, with objective = 2s - m.
std::size_t satisfied_count(const QuadSatInstance& inst, std::span<const std::uint32_t> x);

/// The shifted-rescaled constraints g_i = (f_i - mean) / phi and their
/// Fourier transforms g~_i(y) = p^{-1/2} sum_x omega^{xy} g_i(x).
struct ConstraintSpectrum {
  double f_mean = 0.0;
  double phi = 0.0;
  double g_sat = 0.0;
  double g_unsat = 0.0;
  std::vector<std::vector<Complex>> g_tilde;  // m x p
};

ConstraintSpectrum constraint_values(const QuadSatInstance& inst);

/// Exact counts of assignments x in F_p^n by number of satisfied constraints.
struct SatDistribution {
  std::vector<std::uint64_t> counts;  // index s = 0..m
  std::uint64_t total = 0;            // p^n
};

SatDistribution sat_distribution(const QuadSatInstance& inst, std::uint64_t budget = enumeration_budget());

/// C(m, s) (r/p)^s (1 - r/p)^{m-s} for s = 0..m, exactly.
std::vector<Rational> binomial_reference(std::size_t m, std::uint32_t r, std::uint32_t p);

/// sum_s s^k counts[s] / total.
Rational moment(const SatDistribution& dist, unsigned k);
/// sum_s s^k probs[s].
Rational moment(std::span<const Rational> probs, unsigned k);

/// Closed form of Pr(sum_i lambda_i x_i^2 = a) for uniform x over the
/// nonzero lambdas (rank = lambdas.size()). Throws on a zero lambda.
double uniformity_closed_form(std::span<const FieldElement> lambdas, const FieldElement& a);

/// Enumerated counts of x in F_p^n by the value of sum_j diag_j x_j^2.
std::vector<std::uint64_t> quadratic_form_counts(std::uint32_t p, std::span<const std::uint32_t> diag,
                                                 std::uint64_t budget = enumeration_budget());

/// Rank over F_p by Gaussian elimination.
std::size_t matrix_rank(const FieldMatrix& rows, std::uint32_t p);

/// Quadratic-OPI as max-QUADSAT: m = p-1, B = 0, D_ij = gamma^{ij} with
/// gamma the smallest primitive root. F_i is the subset attached to the
/// evaluation point gamma^i. Throws when n >= p-1.
QuadSatInstance make_quadratic_opi(PrimeModulus p, std::size_t n, std::vector<Digits> subsets);
QuadSatInstance make_quadratic_opi(PrimeModulus p, std::size_t n, std::uint32_t r, std::uint64_t seed);

/// The same Reed-Solomon structure used linearly: B_ij = gamma^{ij}, D = 0.
QuadSatInstance make_linsat_rs(PrimeModulus p, std::size_t n, std::uint32_t r, std::uint64_t seed);

/// Uniformly random B, D and preimage sets.
QuadSatInstance make_random_quadsat(PrimeModulus p, std::size_t n, std::size_t m, std::uint32_t r,
                                    std::uint64_t seed);

/// Seeded uniform size-r subsets of F_p, sampled without replacement.
std::vector<Digits> random_subsets(std::uint32_t p, std::size_t count, std::uint32_t r, std::uint64_t seed);

/// OPI objective: number of y in {1..p-1} with Q(y) in subsets_by_point[y-1].
std::size_t opi_objective(std::span<const std::uint32_t> coeffs, const std::vector<Digits>& subsets_by_point,
                          std::uint32_t p);

/// Reindexes the F_i of a quadratic-OPI instance by evaluation point y = gamma^i.
std::vector<Digits> opi_subsets_by_point(const QuadSatInstance& inst);

/// floor(n/2) by default (unique-decoding radius of the distance-(n+1)
/// code); floor((n+1)/2) when round_up is set.
std::size_t default_opi_ell(std::size_t n, bool round_up = false);

}  // namespace qdqi

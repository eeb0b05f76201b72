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

#include "qdqi/quadsat_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace qdqi {

namespace {

// Unbiased draw in [0, bound) from the raw 64-bit engine output.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % bound);
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

FieldMatrix zero_matrix(std::size_t rows, std::size_t cols) { return FieldMatrix(rows, Digits(cols, 0)); }

FieldMatrix rs_matrix(PrimeModulus p, std::size_t n) {
  const std::uint32_t q = p.value();
  const std::uint32_t gamma = primitive_root(p).value();
  FieldMatrix M = zero_matrix(q - 1, n);
  for (std::size_t i = 0; i + 1 < q; ++i) {
    for (std::size_t j = 0; j < n; ++j) M[i][j] = mod_pow(gamma, static_cast<std::uint64_t>(i) * j, q);
  }
  return M;
}

void require_opi_dims(PrimeModulus p, std::size_t n) {
  if (n == 0 || n >= p.value() - 1) {
    throw std::invalid_argument("quadratic-OPI requires 1 <= n < p-1 (n = " + std::to_string(n) +
                                ", p = " + std::to_string(p.value()) + ")");
  }
}

}  // namespace

std::uint64_t enumeration_budget() {
  if (const char* env = std::getenv("QDQI_BUDGET")) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("QDQI_BUDGET is not a positive integer: ") + env);
  }
  return kDefaultEnumerationBudget;
}

std::uint64_t checked_space_size(std::uint32_t p, std::size_t n, std::uint64_t budget) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (size > budget / p) throw std::length_error("enumeration budget exceeded");
    size *= p;
  }
  if (size > budget) throw std::length_error("enumeration budget exceeded");
  return size;
}

bool next_digits(Digits& digits, std::uint32_t p) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < p) return true;
    digits[i] = 0;
  }
  return false;
}

QuadSatInstance::QuadSatInstance(PrimeModulus p, std::size_t n, FieldMatrix B, FieldMatrix D,
                                 std::vector<Digits> F, std::optional<std::uint64_t> seed)
    : p_(p), n_(n), B_(std::move(B)), D_(std::move(D)), F_(std::move(F)), seed_(seed) {
  const std::uint32_t q = p_.value();
  if (n_ == 0) throw std::invalid_argument("instance needs n >= 1");
  if (B_.empty()) throw std::invalid_argument("instance needs m >= 1");
  if (D_.size() != B_.size() || F_.size() != B_.size()) {
    throw std::invalid_argument("B, D and F must all have m rows");
  }
  for (const auto* M : {&B_, &D_}) {
    for (const auto& row : *M) {
      if (row.size() != n_) throw std::invalid_argument("matrix row length differs from n");
      for (auto v : row) {
        if (v >= q) throw std::invalid_argument("matrix entry outside [0, p)");
      }
    }
  }
  member_.assign(F_.size() * q, 0);
  for (std::size_t i = 0; i < F_.size(); ++i) {
    auto& set = F_[i];
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
      throw std::invalid_argument("preimage set has repeated elements");
    }
    for (auto v : set) {
      if (v >= q) throw std::invalid_argument("preimage element outside [0, p)");
      member_[i * q + v] = 1;
    }
    if (i == 0) r_ = static_cast<std::uint32_t>(set.size());
    if (set.size() != r_) throw std::invalid_argument("preimage sets must share one size r");
  }
  if (r_ == 0 || r_ >= q) throw std::invalid_argument("preimage size r must lie in 1..p-1");
}

bool QuadSatInstance::linear_part_zero() const {
  return std::all_of(B_.begin(), B_.end(),
                     [](const Digits& row) { return std::all_of(row.begin(), row.end(), [](auto v) { return v == 0; }); });
}

bool QuadSatInstance::quadratic_part_zero() const {
  return std::all_of(D_.begin(), D_.end(),
                     [](const Digits& row) { return std::all_of(row.begin(), row.end(), [](auto v) { return v == 0; }); });
}

std::uint32_t QuadSatInstance::constraint_argument(std::size_t i, std::span<const std::uint32_t> x) const {
  const std::uint32_t q = p_.value();
  std::uint64_t acc = 0;
  for (std::size_t j = 0; j < n_; ++j) {
    const std::uint64_t xj = x[j];
    acc += std::uint64_t{B_[i][j]} * xj % q;
    acc += std::uint64_t{D_[i][j]} * (xj * xj % q) % q;
  }
  return static_cast<std::uint32_t>(acc % q);
}

std::size_t satisfied_count(const QuadSatInstance& inst, std::span<const std::uint32_t> x) {
  if (x.size() != inst.n()) throw std::invalid_argument("assignment length differs from n");
  std::size_t s = 0;
  for (std::size_t i = 0; i < inst.m(); ++i) {
    if (inst.in_preimage(i, inst.constraint_argument(i, x))) ++s;
  }
  return s;
}

int objective_eval(const QuadSatInstance& inst, std::span<const std::uint32_t> x) {
  return 2 * static_cast<int>(satisfied_count(inst, x)) - static_cast<int>(inst.m());
}

ConstraintSpectrum constraint_values(const QuadSatInstance& inst) {
  const std::uint32_t p = inst.p();
  const double r = inst.r();
  const double pd = p;
  ConstraintSpectrum cspec;
  cspec.f_mean = 2.0 * r / pd - 1.0;
  cspec.phi = 2.0 * std::sqrt(r * (1.0 - r / pd));
  cspec.g_sat = (1.0 - cspec.f_mean) / cspec.phi;
  cspec.g_unsat = (-1.0 - cspec.f_mean) / cspec.phi;
  const double norm = 1.0 / std::sqrt(pd);
  cspec.g_tilde.assign(inst.m(), std::vector<Complex>(p));
  for (std::size_t i = 0; i < inst.m(); ++i) {
    for (std::uint32_t y = 0; y < p; ++y) {
      Complex sum = 0.0;
      for (std::uint32_t x = 0; x < p; ++x) {
        const double g = inst.in_preimage(i, x) ? cspec.g_sat : cspec.g_unsat;
        sum += root_of_unity(mod_mul(x, y, p), p) * g;
      }
      cspec.g_tilde[i][y] = norm * sum;
    }
  }
  return cspec;
}

SatDistribution sat_distribution(const QuadSatInstance& inst, std::uint64_t budget) {
  SatDistribution dist;
  dist.total = checked_space_size(inst.p(), inst.n(), budget);
  dist.counts.assign(inst.m() + 1, 0);
  Digits x(inst.n(), 0);
  do {
    ++dist.counts[satisfied_count(inst, x)];
  } while (next_digits(x, inst.p()));
  return dist;
}

std::vector<Rational> binomial_reference(std::size_t m, std::uint32_t r, std::uint32_t p) {
  using boost::multiprecision::cpp_int;
  const cpp_int denom = boost::multiprecision::pow(cpp_int(p), static_cast<unsigned>(m));
  std::vector<Rational> probs(m + 1);
  cpp_int choose = 1;
  for (std::size_t s = 0; s <= m; ++s) {
    if (s > 0) choose = choose * (m - s + 1) / s;
    const cpp_int num = choose * boost::multiprecision::pow(cpp_int(r), static_cast<unsigned>(s)) *
                        boost::multiprecision::pow(cpp_int(p - r), static_cast<unsigned>(m - s));
    probs[s] = Rational(num, denom);
  }
  return probs;
}

Rational moment(const SatDistribution& dist, unsigned k) {
  boost::multiprecision::cpp_int acc = 0;
  for (std::size_t s = 0; s < dist.counts.size(); ++s) {
    acc += boost::multiprecision::pow(boost::multiprecision::cpp_int(s), k) * dist.counts[s];
  }
  return Rational(acc, boost::multiprecision::cpp_int(dist.total));
}

Rational moment(std::span<const Rational> probs, unsigned k) {
  Rational acc = 0;
  for (std::size_t s = 0; s < probs.size(); ++s) {
    acc += Rational(boost::multiprecision::pow(boost::multiprecision::cpp_int(s), k)) * probs[s];
  }
  return acc;
}

double uniformity_closed_form(std::span<const FieldElement> lambdas, const FieldElement& a) {
  const PrimeModulus& modulus = a.modulus();
  const std::uint32_t p = modulus.value();
  FieldElement det(1, modulus);
  for (const auto& l : lambdas) {
    if (!(l.modulus() == modulus)) throw std::invalid_argument("modulus mismatch");
    if (l.is_zero()) throw std::invalid_argument("zero lambda");
    det = det * l;
  }
  const auto rank = static_cast<std::int64_t>(lambdas.size());
  const double pd = p;
  const double scale = static_cast<double>(chi(det)) / std::pow(pd, static_cast<double>(rank) / 2.0 + 1.0);
  Complex correction;
  if (rank % 2 == 0) {
    correction = i_p_pow(modulus, rank) * (a.is_zero() ? pd - 1.0 : -1.0);
  } else {
    correction = i_p_pow(modulus, rank + 1) * static_cast<double>(chi(-a)) * std::sqrt(pd);
  }
  return 1.0 / pd + scale * correction.real();
}

std::vector<std::uint64_t> quadratic_form_counts(std::uint32_t p, std::span<const std::uint32_t> diag,
                                                 std::uint64_t budget) {
  checked_space_size(p, diag.size(), budget);
  std::vector<std::uint64_t> counts(p, 0);
  Digits x(diag.size(), 0);
  do {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < diag.size(); ++j) acc += std::uint64_t{diag[j]} * mod_mul(x[j], x[j], p);
    ++counts[acc % p];
  } while (next_digits(x, p));
  return counts;
}

std::size_t matrix_rank(const FieldMatrix& rows, std::uint32_t p) {
  FieldMatrix M = rows;
  if (M.empty()) return 0;
  const std::size_t cols = M.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < M.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < M.size() && M[pivot][c] == 0) ++pivot;
    if (pivot == M.size()) continue;
    std::swap(M[pivot], M[rank]);
    const std::uint32_t inv_pivot = mod_inv(M[rank][c], p);
    for (auto& v : M[rank]) v = mod_mul(v, inv_pivot, p);
    for (std::size_t i = 0; i < M.size(); ++i) {
      if (i == rank || M[i][c] == 0) continue;
      const std::uint32_t f = M[i][c];
      for (std::size_t k = 0; k < cols; ++k) M[i][k] = mod_sub(M[i][k], mod_mul(f, M[rank][k], p), p);
    }
    ++rank;
  }
  return rank;
}

std::vector<Digits> random_subsets(std::uint32_t p, std::size_t count, std::uint32_t r, std::uint64_t seed) {
  if (r == 0 || r >= p) throw std::invalid_argument("preimage size r must lie in 1..p-1");
  std::mt19937_64 rng(seed);
  std::vector<Digits> subsets;
  subsets.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Digits pool(p);
    std::iota(pool.begin(), pool.end(), 0u);
    // partial Fisher-Yates: the first r slots become the sample
    for (std::uint32_t k = 0; k < r; ++k) {
      const auto j = k + static_cast<std::uint32_t>(bounded_draw(rng, p - k));
      std::swap(pool[k], pool[j]);
    }
    Digits subset(pool.begin(), pool.begin() + r);
    std::sort(subset.begin(), subset.end());
    subsets.push_back(std::move(subset));
  }
  return subsets;
}

QuadSatInstance make_quadratic_opi(PrimeModulus p, std::size_t n, std::vector<Digits> subsets) {
  require_opi_dims(p, n);
  const std::size_t m = p.value() - 1;
  if (subsets.size() != m) throw std::invalid_argument("quadratic-OPI needs exactly p-1 subsets");
  return QuadSatInstance(p, n, zero_matrix(m, n), rs_matrix(p, n), std::move(subsets));
}

QuadSatInstance make_quadratic_opi(PrimeModulus p, std::size_t n, std::uint32_t r, std::uint64_t seed) {
  require_opi_dims(p, n);
  const std::size_t m = p.value() - 1;
  return QuadSatInstance(p, n, zero_matrix(m, n), rs_matrix(p, n), random_subsets(p.value(), m, r, seed), seed);
}

QuadSatInstance make_linsat_rs(PrimeModulus p, std::size_t n, std::uint32_t r, std::uint64_t seed) {
  require_opi_dims(p, n);
  const std::size_t m = p.value() - 1;
  return QuadSatInstance(p, n, rs_matrix(p, n), zero_matrix(m, n), random_subsets(p.value(), m, r, seed), seed);
}

QuadSatInstance make_random_quadsat(PrimeModulus p, std::size_t n, std::size_t m, std::uint32_t r,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FieldMatrix B = zero_matrix(m, n);
  FieldMatrix D = zero_matrix(m, n);
  for (auto* M : {&B, &D}) {
    for (auto& row : *M) {
      for (auto& v : row) v = static_cast<std::uint32_t>(bounded_draw(rng, p.value()));
    }
  }
  // distinct stream for the preimage sets so B/D do not shift them
  return QuadSatInstance(p, n, std::move(B), std::move(D), random_subsets(p.value(), m, r, seed ^ 0x9e3779b97f4a7c15ULL),
                         seed);
}

std::size_t opi_objective(std::span<const std::uint32_t> coeffs, const std::vector<Digits>& subsets_by_point,
                          std::uint32_t p) {
  if (subsets_by_point.size() != p - 1) throw std::invalid_argument("need one subset per point y = 1..p-1");
  std::size_t hits = 0;
  for (std::uint32_t y = 1; y < p; ++y) {
    std::uint32_t value = 0;
    for (std::size_t j = coeffs.size(); j-- > 0;) value = mod_add(mod_mul(value, y, p), coeffs[j] % p, p);
    const auto& set = subsets_by_point[y - 1];
    if (std::binary_search(set.begin(), set.end(), value)) ++hits;
  }
  return hits;
}

std::vector<Digits> opi_subsets_by_point(const QuadSatInstance& inst) {
  const std::uint32_t p = inst.p();
  if (inst.m() != p - 1) throw std::invalid_argument("not a quadratic-OPI instance");
  const std::uint32_t gamma = primitive_root(inst.modulus()).value();
  std::vector<Digits> by_point(p - 1);
  for (std::size_t i = 0; i + 1 < p; ++i) by_point[mod_pow(gamma, i, p) - 1] = inst.F()[i];
  return by_point;
}

std::size_t default_opi_ell(std::size_t n, bool round_up) { return round_up ? (n + 1) / 2 : n / 2; }

}  // namespace qdqi

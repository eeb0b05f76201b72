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
#include <vector>

namespace qdqi {

/// Symmetric tridiagonal matrix; offdiag[k] couples rows k and k+1.
struct TridiagonalMatrix {
  std::vector<double> diag;
  std::vector<double> offdiag;

  std::size_t size() const { return diag.size(); }
  std::vector<double> apply(std::span<const double> v) const;
};

/// (p - 2r) / sqrt(r (p - r)). Throws std::invalid_argument unless 1 <= r <= p-1.
double d_param(std::uint32_t r, std::uint32_t p);

/// A^{(m, ell, d)}: diag k d, offdiag a_k = sqrt(k (m - k + 1)) for k = 1..ell.
TridiagonalMatrix build_A(std::size_t m, std::size_t ell, std::uint32_t r, std::uint32_t p);
/// The same matrix parametrized by q = r/p in (0, 1).
TridiagonalMatrix build_A_fraction(std::size_t m, std::size_t ell, double q);

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;  // unit norm, vector[0] >= 0
};

/// Number of eigenvalues strictly below x (Sturm sequence count).
std::size_t eigenvalues_below(const TridiagonalMatrix& A, double x);

/// Largest eigenvalue by bisection, eigenvector by inverse iteration.
/// Throws std::runtime_error if the residual stays above 1e-10.
EigenPair max_eigpair(const TridiagonalMatrix& A);

double quadratic_form(const TridiagonalMatrix& A, std::span<const double> w);

/// mr/p + sqrt(r(p-r))/p w^T A w with ell = w.size() - 1. Throws
/// std::invalid_argument when |w| differs from 1 by more than 1e-9.
double expected_satisfied(std::span<const double> w, std::size_t m, std::uint32_t r, std::uint32_t p);
double expected_satisfied_fraction(std::span<const double> w, std::size_t m, double q);

/// (sqrt(l/m (1 - r/p)) + sqrt(r/p (1 - l/m)))^2, or 1 once l/m >= 1 - r/p.
double semicircle_closed_form(double ell_over_m, double r_over_p);

/// Orthonormal Krawtchouk values K_k(s) under the binomial(m, q) weight.
struct KrawtchoukBasis {
  std::size_t m = 0;
  double q = 0.0;
  std::vector<double> weight;             // binomial probabilities, s = 0..m
  std::vector<std::vector<double>> table;  // [k][s], k = 0..ell

  std::size_t ell() const { return table.size() - 1; }
  double inner(std::span<const double> f, std::span<const double> g) const;
};

KrawtchoukBasis krawtchouk_table(std::size_t m, double q, std::size_t ell);
KrawtchoukBasis krawtchouk_table(std::size_t m, std::uint32_t r, std::uint32_t p, std::size_t ell);

/// Coefficients of the three-term recurrence
/// s K_k = a0[k] K_k - aplus[k] K_{k+1} - aminus[k] K_{k-1}.
struct KrawtchoukRecurrence {
  std::vector<double> a0, aplus, aminus;
};
KrawtchoukRecurrence krawtchouk_recurrence(std::size_t m, double q, std::size_t ell);

/// w_k = <K_k, P>_binom. Throws std::domain_error if sum_k w_k K_k misses
/// P by more than tol anywhere on s = 0..m.
std::vector<double> krawtchouk_project(std::span<const double> P, const KrawtchoukBasis& basis, double tol = 1e-9);

}  // namespace qdqi

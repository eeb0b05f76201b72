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

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "qdqi/spectral.hpp"

using namespace qdqi;

namespace {

Eigen::MatrixXd dense(const TridiagonalMatrix& A) {
  const auto n = static_cast<Eigen::Index>(A.size());
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    M(i, i) = A.diag[i];
    if (i + 1 < n) M(i, i + 1) = M(i + 1, i) = A.offdiag[i];
  }
  return M;
}

}  // namespace

TEST(build_A, structure) {
  EXPECT_DOUBLE_EQ(d_param(2, 5), 1.0 / std::sqrt(6.0));
  EXPECT_DOUBLE_EQ(d_param(3, 7), 1.0 / std::sqrt(12.0));
  EXPECT_THROW(d_param(0, 5), std::invalid_argument);
  const auto A = build_A(10, 3, 2, 5);
  ASSERT_EQ(A.size(), 4u);
  EXPECT_DOUBLE_EQ(A.diag[0], 0.0);
  EXPECT_DOUBLE_EQ(A.diag[3], 3.0 / std::sqrt(6.0));
  EXPECT_DOUBLE_EQ(A.offdiag[0], std::sqrt(10.0));
  EXPECT_DOUBLE_EQ(A.offdiag[2], std::sqrt(3.0 * 8.0));
  EXPECT_THROW(build_A(3, 4, 2, 5), std::invalid_argument);
}

TEST(max_eigpair, small_cases) {
  const auto zero = max_eigpair(build_A(7, 0, 2, 5));
  EXPECT_EQ(zero.value, 0.0);
  EXPECT_EQ(zero.vector, std::vector<double>{1.0});

  const auto half = max_eigpair(build_A_fraction(9, 1, 0.5));
  EXPECT_NEAR(half.value, 3.0, 1e-12);
  EXPECT_NEAR(half.vector[0], std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(half.vector[1], std::sqrt(0.5), 1e-12);
}

TEST(max_eigpair, matches_dense_solver) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 60;
    TridiagonalMatrix A;
    for (std::size_t i = 0; i < n; ++i) A.diag.push_back(u(rng));
    for (std::size_t i = 0; i + 1 < n; ++i) A.offdiag.push_back(u(rng));
    const auto mine = max_eigpair(A);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense(A));
    const double ref = es.eigenvalues().maxCoeff();
    EXPECT_NEAR(mine.value, ref, 1e-9 * std::max(1.0, std::abs(ref)));
    const auto Av = A.apply(mine.vector);
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) res += std::pow(Av[i] - mine.value * mine.vector[i], 2);
    EXPECT_LE(std::sqrt(res), 1e-10);
  }
  for (std::size_t m : {5u, 50u, 400u}) {
    for (std::size_t ell : {1u, 2u, 5u}) {
      const auto A = build_A(m, ell, 2, 5);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense(A));
      const auto mine = max_eigpair(A);
      EXPECT_NEAR(mine.value, es.eigenvalues().maxCoeff(), 1e-9 * es.eigenvalues().maxCoeff());
      Eigen::VectorXd ref = es.eigenvectors().col(es.eigenvectors().cols() - 1);
      double dot = 0.0;
      for (std::size_t i = 0; i <= ell; ++i) dot += ref[static_cast<Eigen::Index>(i)] * mine.vector[i];
      EXPECT_NEAR(std::abs(dot), 1.0, 1e-9);
      EXPECT_GT(mine.vector[0], 0.0);
    }
  }
}

TEST(eigenvalues_below, off_diagonal_signs_do_not_matter) {
  auto A = build_A(30, 6, 3, 7);
  auto B = A;
  for (std::size_t i = 0; i < B.offdiag.size(); i += 2) B.offdiag[i] = -B.offdiag[i];
  for (double x = -12.0; x <= 12.0; x += 0.37) EXPECT_EQ(eigenvalues_below(A, x), eigenvalues_below(B, x));
  EXPECT_NEAR(max_eigpair(A).value, max_eigpair(B).value, 1e-12);
  EXPECT_EQ(eigenvalues_below(A, 1e6), 7u);
  EXPECT_EQ(eigenvalues_below(A, -1e6), 0u);
}

TEST(krawtchouk, orthonormal_small) {
  const auto K = krawtchouk_table(4, 2u, 5u, 4);
  for (std::size_t j = 0; j <= 4; ++j) {
    for (std::size_t k = 0; k <= 4; ++k) EXPECT_NEAR(K.inner(K.table[j], K.table[k]), j == k ? 1.0 : 0.0, 1e-12);
  }
}

TEST(krawtchouk, three_term_recurrence) {
  for (double q : {0.4, 2.0 / 7.0, 0.5}) {
    for (std::size_t m = 1; m <= 60; ++m) {
      const std::size_t ell = std::min<std::size_t>(m, 8);
      const auto K = krawtchouk_table(m, q, ell);
      const auto rec = krawtchouk_recurrence(m, q, ell);
      for (std::size_t k = 0; k < ell; ++k) {
        for (std::size_t s = 0; s <= m; ++s) {
          const double lhs = static_cast<double>(s) * K.table[k][s];
          const double rhs = rec.a0[k] * K.table[k][s] - rec.aplus[k] * K.table[k + 1][s] -
                             (k > 0 ? rec.aminus[k] * K.table[k - 1][s] : 0.0);
          EXPECT_NEAR(lhs, rhs, 1e-8 * std::max(1.0, std::abs(lhs)));
        }
      }
      for (std::size_t j = 0; j <= ell; ++j) EXPECT_NEAR(K.inner(K.table[j], K.table[j]), 1.0, 1e-9);
    }
  }
}

TEST(krawtchouk, projection) {
  const auto K = krawtchouk_table(6, 0.4, 3);
  const auto w = krawtchouk_project(K.table[2], K);
  for (std::size_t k = 0; k <= 3; ++k) EXPECT_NEAR(w[k], k == 2 ? 1.0 : 0.0, 1e-12);

  std::vector<double> linear(7);
  for (std::size_t s = 0; s <= 6; ++s) linear[s] = static_cast<double>(s);
  EXPECT_THROW(krawtchouk_project(linear, krawtchouk_table(6, 0.4, 0)), std::domain_error);
  const auto c = krawtchouk_project(linear, K);
  EXPECT_NEAR(c[0], 6 * 0.4, 1e-12);
  EXPECT_NEAR(c[2], 0.0, 1e-12);
}

TEST(expected_satisfied, examples) {
  const std::vector<double> unit{1.0};
  EXPECT_NEAR(expected_satisfied(unit, 10, 2, 5), 4.0, 1e-12);
  EXPECT_NEAR(expected_satisfied_fraction(unit, 10, 0.3), 3.0, 1e-12);
  EXPECT_THROW(expected_satisfied(std::vector<double>{1.0, 1.0}, 10, 2, 5), std::invalid_argument);
  const auto eig = max_eigpair(build_A(10, 3, 2, 5));
  EXPECT_NEAR(expected_satisfied(eig.vector, 10, 2, 5), 4.0 + std::sqrt(6.0) / 5.0 * eig.value, 1e-12);
}

TEST(semicircle, closed_form) {
  EXPECT_NEAR(semicircle_closed_form(1.0 / 20.0, 0.5), 0.71794, 1e-5);
  EXPECT_DOUBLE_EQ(semicircle_closed_form(0.0, 0.3), 0.3);
  EXPECT_DOUBLE_EQ(semicircle_closed_form(0.5, 0.5), 1.0);
  EXPECT_DOUBLE_EQ(semicircle_closed_form(0.9, 0.4), 1.0);
  EXPECT_NEAR(semicircle_closed_form(0.2, 0.2), 0.64, 1e-15);
  EXPECT_THROW(semicircle_closed_form(1.5, 0.5), std::invalid_argument);
}

TEST(semicircle, large_m_eigenvalue_fraction) {
  const std::size_t m = 2000, ell = 200;
  const auto eig = max_eigpair(build_A_fraction(m, ell, 0.5));
  const double fraction = expected_satisfied_fraction(eig.vector, m, 0.5) / m;
  EXPECT_NEAR(fraction, semicircle_closed_form(0.1, 0.5), 0.02);
}

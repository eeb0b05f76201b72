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

#include "qdqi/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qdqi {

std::vector<double> TridiagonalMatrix::apply(std::span<const double> v) const {
  const std::size_t n = size();
  if (v.size() != n) throw std::invalid_argument("vector length differs from matrix size");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = diag[i] * v[i];
    if (i > 0) acc += offdiag[i - 1] * v[i - 1];
    if (i + 1 < n) acc += offdiag[i] * v[i + 1];
    out[i] = acc;
  }
  return out;
}

double d_param(std::uint32_t r, std::uint32_t p) {
  if (r == 0 || r >= p) throw std::invalid_argument("r must lie in 1..p-1");
  return (static_cast<double>(p) - 2.0 * r) / std::sqrt(static_cast<double>(r) * (p - r));
}

namespace {

TridiagonalMatrix build_with_d(std::size_t m, std::size_t ell, double d) {
  if (ell > m) throw std::invalid_argument("ell must not exceed m");
  TridiagonalMatrix A;
  A.diag.resize(ell + 1);
  A.offdiag.resize(ell);
  for (std::size_t k = 0; k <= ell; ++k) A.diag[k] = static_cast<double>(k) * d;
  for (std::size_t k = 1; k <= ell; ++k) A.offdiag[k - 1] = std::sqrt(static_cast<double>(k) * (m - k + 1));
  return A;
}

double norm2(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

// Solves (A - shift I) x = b in place with a partially pivoted LU.
void tridiagonal_solve(const TridiagonalMatrix& A, double shift, std::vector<double>& b, double tiny) {
  const std::size_t n = A.size();
  std::vector<double> dl(A.offdiag), du(A.offdiag), du2(n > 2 ? n - 2 : 0, 0.0), d(n);
  std::vector<bool> swapped(n, false);
  for (std::size_t i = 0; i < n; ++i) d[i] = A.diag[i] - shift;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == 0.0) d[i] = tiny;
      const double fact = dl[i] / d[i];
      dl[i] = fact;
      d[i + 1] -= fact * du[i];
    } else {
      const double fact = d[i] / dl[i];
      d[i] = dl[i];
      dl[i] = fact;
      const double temp = du[i];
      du[i] = d[i + 1];
      d[i + 1] = temp - fact * d[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -fact * du[i + 1];
      }
      swapped[i] = true;
    }
  }
  if (d[n - 1] == 0.0) d[n - 1] = tiny;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!swapped[i]) {
      b[i + 1] -= dl[i] * b[i];
    } else {
      const double temp = b[i];
      b[i] = b[i + 1];
      b[i + 1] = temp - dl[i] * b[i];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    if (i + 1 < n) acc -= du[i] * b[i + 1];
    if (i + 2 < n) acc -= du2[i] * b[i + 2];
    b[i] = acc / d[i];
  }
}

}  // namespace

TridiagonalMatrix build_A(std::size_t m, std::size_t ell, std::uint32_t r, std::uint32_t p) {
  return build_with_d(m, ell, d_param(r, p));
}

TridiagonalMatrix build_A_fraction(std::size_t m, std::size_t ell, double q) {
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("q must lie in (0, 1)");
  return build_with_d(m, ell, (1.0 - 2.0 * q) / std::sqrt(q * (1.0 - q)));
}

std::size_t eigenvalues_below(const TridiagonalMatrix& A, double x) {
  const double pivmin = std::numeric_limits<double>::min();
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < A.size(); ++i) {
    q = A.diag[i] - x - (i > 0 ? A.offdiag[i - 1] * A.offdiag[i - 1] / q : 0.0);
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

EigenPair max_eigpair(const TridiagonalMatrix& A) {
  const std::size_t n = A.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  if (n == 1) return {A.diag[0], {1.0}};

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    const double radius = (i > 0 ? std::abs(A.offdiag[i - 1]) : 0.0) + (i + 1 < n ? std::abs(A.offdiag[i]) : 0.0);
    lo = std::min(lo, A.diag[i] - radius);
    hi = std::max(hi, A.diag[i] + radius);
  }
  const double scale = std::max(std::abs(lo), std::abs(hi));
  const double eps = std::numeric_limits<double>::epsilon();
  while (hi - lo > 2.0 * eps * scale) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (eigenvalues_below(A, mid) == n) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  double lambda = 0.5 * (lo + hi);

  std::vector<double> v(n, 1.0);
  double residual = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 8 && residual > 1e-12 * std::max(1.0, scale); ++iter) {
    tridiagonal_solve(A, lambda, v, eps * std::max(1.0, scale));
    const double nv = norm2(v);
    for (double& x : v) x /= nv;
    const auto Av = A.apply(v);
    residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual += (Av[i] - lambda * v[i]) * (Av[i] - lambda * v[i]);
    residual = std::sqrt(residual);
  }
  if (residual > 1e-10) throw std::runtime_error("inverse iteration did not converge");
  const auto first = std::find_if(v.begin(), v.end(), [](double x) { return x != 0.0; });
  if (*first < 0.0) {
    for (double& x : v) x = -x;
  }
  return {lambda, v};
}

double quadratic_form(const TridiagonalMatrix& A, std::span<const double> w) {
  const auto Aw = A.apply(w);
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * Aw[i];
  return acc;
}

double expected_satisfied_fraction(std::span<const double> w, std::size_t m, double q) {
  if (w.empty()) throw std::invalid_argument("empty weight vector");
  if (std::abs(norm2(w) - 1.0) > 1e-9) throw std::invalid_argument("weight vector is not a unit vector");
  const auto A = build_A_fraction(m, w.size() - 1, q);
  return static_cast<double>(m) * q + std::sqrt(q * (1.0 - q)) * quadratic_form(A, w);
}

double expected_satisfied(std::span<const double> w, std::size_t m, std::uint32_t r, std::uint32_t p) {
  if (w.empty()) throw std::invalid_argument("empty weight vector");
  if (std::abs(norm2(w) - 1.0) > 1e-9) throw std::invalid_argument("weight vector is not a unit vector");
  const auto A = build_A(m, w.size() - 1, r, p);
  const double pd = p;
  return static_cast<double>(m) * r / pd + std::sqrt(static_cast<double>(r) * (p - r)) / pd * quadratic_form(A, w);
}

double semicircle_closed_form(double ell_over_m, double r_over_p) {
  if (!(ell_over_m >= 0.0 && ell_over_m <= 1.0 && r_over_p >= 0.0 && r_over_p <= 1.0)) {
    throw std::invalid_argument("semicircle arguments must lie in [0, 1]");
  }
  if (ell_over_m >= 1.0 - r_over_p) return 1.0;
  const double a = ell_over_m * (1.0 - r_over_p);
  const double b = r_over_p * (1.0 - ell_over_m);
  return a + b + 2.0 * std::sqrt(a * b);
}

double KrawtchoukBasis::inner(std::span<const double> f, std::span<const double> g) const {
  if (f.size() != m + 1 || g.size() != m + 1) throw std::invalid_argument("functions must be tabulated on s = 0..m");
  double acc = 0.0;
  for (std::size_t s = 0; s <= m; ++s) acc += f[s] * g[s] * weight[s];
  return acc;
}

KrawtchoukRecurrence krawtchouk_recurrence(std::size_t m, double q, std::size_t ell) {
  KrawtchoukRecurrence rec;
  const double v = q * (1.0 - q);
  for (std::size_t k = 0; k <= ell; ++k) {
    const double kd = static_cast<double>(k);
    const double mk = static_cast<double>(m) - kd;
    rec.a0.push_back(q * mk + kd * (1.0 - q));
    rec.aplus.push_back(std::sqrt(v * mk * (kd + 1.0)));
    rec.aminus.push_back(std::sqrt(v * (mk + 1.0) * kd));
  }
  return rec;
}

KrawtchoukBasis krawtchouk_table(std::size_t m, double q, std::size_t ell) {
  if (ell > m) throw std::invalid_argument("ell must not exceed m");
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("q must lie in (0, 1)");
  KrawtchoukBasis basis;
  basis.m = m;
  basis.q = q;
  const double md = static_cast<double>(m);
  for (std::size_t s = 0; s <= m; ++s) {
    const double sd = static_cast<double>(s);
    const double log_w = std::lgamma(md + 1.0) - std::lgamma(sd + 1.0) - std::lgamma(md - sd + 1.0) +
                         sd * std::log(q) + (md - sd) * std::log1p(-q);
    basis.weight.push_back(std::exp(log_w));
  }
  const auto rec = krawtchouk_recurrence(m, q, ell);
  basis.table.assign(ell + 1, std::vector<double>(m + 1, 0.0));
  for (std::size_t s = 0; s <= m; ++s) {
    const double sd = static_cast<double>(s);
    basis.table[0][s] = 1.0;
    for (std::size_t k = 0; k < ell; ++k) {
      const double prev = k > 0 ? basis.table[k - 1][s] : 0.0;
      basis.table[k + 1][s] = ((rec.a0[k] - sd) * basis.table[k][s] - rec.aminus[k] * prev) / rec.aplus[k];
    }
  }
  return basis;
}

KrawtchoukBasis krawtchouk_table(std::size_t m, std::uint32_t r, std::uint32_t p, std::size_t ell) {
  if (r == 0 || r >= p) throw std::invalid_argument("r must lie in 1..p-1");
  return krawtchouk_table(m, static_cast<double>(r) / p, ell);
}

std::vector<double> krawtchouk_project(std::span<const double> P, const KrawtchoukBasis& basis, double tol) {
  std::vector<double> w;
  for (const auto& K : basis.table) w.push_back(basis.inner(K, P));
  for (std::size_t s = 0; s <= basis.m; ++s) {
    double rebuilt = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) rebuilt += w[k] * basis.table[k][s];
    if (std::abs(rebuilt - P[s]) > tol) throw std::domain_error("polynomial is not in the Krawtchouk span");
  }
  return w;
}

}  // namespace qdqi

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

#include "qdqi/dqi_builder.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "qdqi/spectral.hpp"

namespace qdqi {

namespace {

double binomial(std::size_t m, std::size_t k) {
  if (k > m) return 0.0;
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i) c = c * static_cast<double>(m - k + i) / static_cast<double>(i);
  return c;
}

void require_weights(const QuadSatInstance& inst, std::span<const double> w) {
  if (w.empty()) throw std::invalid_argument("empty weight vector");
  if (w.size() > inst.m()) throw std::invalid_argument("ell must be below m");
}

Digits column_times(const FieldMatrix& M, std::span<const std::uint32_t> y, std::size_t n, std::uint32_t p) {
  Digits out(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < M.size(); ++i) acc += std::uint64_t{M[i][j]} * y[i];
    out[j] = static_cast<std::uint32_t>(acc % p);
  }
  return out;
}

std::size_t read_number(const Digits& t, std::size_t off, std::size_t width, std::uint32_t p) {
  std::size_t v = 0;
  for (std::size_t i = 0; i < width; ++i) v = v * p + t[off + i];
  return v;
}

void write_number(Digits& t, std::size_t off, std::size_t width, std::uint32_t p, std::size_t v) {
  for (std::size_t i = width; i-- > 0;) {
    t[off + i] = static_cast<std::uint32_t>(v % p);
    v /= p;
  }
}

bool all_zero(const Digits& t, std::size_t off, std::size_t width) {
  for (std::size_t i = 0; i < width; ++i) {
    if (t[off + i] != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<double> elementary_symmetric_two_value(std::size_t s, std::size_t m, double g_sat, double g_unsat,
                                                   std::size_t kmax) {
  if (s > m) throw std::invalid_argument("s exceeds m");
  std::vector<double> coeffs(kmax + 1, 0.0);
  coeffs[0] = 1.0;
  auto multiply = [&](double g, std::size_t times) {
    for (std::size_t t = 0; t < times; ++t) {
      for (std::size_t k = kmax; k > 0; --k) coeffs[k] += g * coeffs[k - 1];
    }
  };
  multiply(g_sat, s);
  multiply(g_unsat, m - s);
  return coeffs;
}

std::vector<double> elementary_symmetric(std::span<const double> values, std::size_t kmax) {
  std::vector<double> e(kmax + 1, 0.0);
  e[0] = 1.0;
  for (double v : values) {
    for (std::size_t k = kmax; k > 0; --k) e[k] += v * e[k - 1];
  }
  return e;
}

std::vector<double> dqi_polynomial_values(const QuadSatInstance& inst, std::span<const double> w) {
  require_weights(inst, w);
  const auto cspec = constraint_values(inst);
  const std::size_t m = inst.m();
  const std::size_t ell = w.size() - 1;
  const double pd = inst.p();
  std::vector<double> P(m + 1, 0.0);
  for (std::size_t s = 0; s <= m; ++s) {
    const auto e = elementary_symmetric_two_value(s, m, cspec.g_sat, cspec.g_unsat, ell);
    for (std::size_t k = 0; k <= ell; ++k) {
      const double norm = std::pow(pd, static_cast<double>(inst.n()) - static_cast<double>(k)) * binomial(m, k);
      P[s] += w[k] * e[k] / std::sqrt(norm);
    }
  }
  return P;
}

std::vector<double> optimal_weights(const QuadSatInstance& inst, std::size_t ell) {
  if (ell >= inst.m()) throw std::invalid_argument("ell must be below m");
  return max_eigpair(build_A(inst.m(), ell, inst.r(), inst.p())).vector;
}

SparseState build_direct(const QuadSatInstance& inst, std::span<const double> w, std::uint64_t budget) {
  const auto P = dqi_polynomial_values(inst, w);
  checked_space_size(inst.p(), inst.n(), budget);
  SparseState state(RegisterLayout(inst.modulus(), {{"x", inst.n()}}));
  Digits x(inst.n(), 0);
  do {
    const double a = P[satisfied_count(inst, x)];
    if (std::abs(a) >= kPruneThreshold) state.add(x, a);
  } while (next_digits(x, inst.p()));
  return state;
}

SparseState build_qft_form(const QuadSatInstance& inst, std::span<const double> w, std::uint64_t budget) {
  require_weights(inst, w);
  const std::uint32_t p = inst.p();
  const std::size_t n = inst.n();
  const std::size_t m = inst.m();
  checked_space_size(p, n, budget);
  const auto cspec = constraint_values(inst);
  std::map<std::uint32_t, DigitMatrix> f_cache;
  auto f_for = [&](std::uint32_t alpha) -> const DigitMatrix& {
    auto it = f_cache.find(alpha);
    if (it == f_cache.end()) it = f_cache.emplace(alpha, f_alpha_matrix(FieldElement(alpha, inst.modulus()))).first;
    return it->second;
  };

  SparseState fourier(RegisterLayout(inst.modulus(), {{"x", n}}));
  const double pn = std::pow(static_cast<double>(p), static_cast<double>(n));
  std::uint64_t work = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const double coef = w[k] / std::sqrt(binomial(m, k)) / pn;
    for_each_weight_vector(m, p, k, [&](const Digits& y) {
      Complex c = coef;
      for (std::size_t i = 0; i < m; ++i) {
        if (y[i] != 0) c *= cspec.g_tilde[i][y[i]];
      }
      if (std::abs(c) < kPruneThreshold) return true;
      const Digits alpha = column_times(inst.B(), y, n, p);
      const Digits beta = column_times(inst.D(), y, n, p);
      std::vector<const DigitMatrix*> fs;
      for (std::size_t j = 0; j < n; ++j) fs.push_back(&f_for(alpha[j]));
      Digits z(n, 0);
      do {
        if (++work > budget) throw std::length_error("enumeration budget exceeded");
        Complex amp = c;
        for (std::size_t j = 0; j < n && amp != Complex{}; ++j) amp *= (*fs[j])[z[j]][beta[j]];
        if (amp != Complex{}) fourier.add(z, amp);
      } while (next_digits(z, p));
      return true;
    });
  }
  fourier.prune();
  return iqft(fourier, "x");
}

std::size_t weight_register_width(std::size_t ell, std::uint32_t p) {
  std::size_t width = 1;
  std::size_t capacity = p;
  while (capacity <= ell) {
    capacity *= p;
    ++width;
  }
  return width;
}

PipelineTrace run_pipeline(const QuadSatInstance& inst, std::span<const double> w) {
  require_weights(inst, w);
  if (!inst.linear_part_zero()) {
    throw std::invalid_argument("pipeline requires every linear part b_i to vanish");
  }
  const std::uint32_t p = inst.p();
  const std::size_t n = inst.n();
  const std::size_t m = inst.m();
  const std::size_t ell = w.size() - 1;
  const std::size_t wt = weight_register_width(ell, p);
  const RegisterLayout layout(inst.modulus(), {{"weight", wt}, {"error", m}, {"syndrome", n}});
  const std::size_t err = wt;
  const std::size_t syn = wt + m;
  const auto cspec = constraint_values(inst);
  const SyndromeCode code = quadratic_syndrome_code(inst, ell);

  PipelineTrace trace{{}, false, {}, SparseState(RegisterLayout(inst.modulus(), {{"x", n}}))};
  auto snapshot = [&](const char* name, const SparseState& s) { trace.steps.push_back({name, s}); };

  // 1. weights
  SparseState state(layout);
  for (std::size_t k = 0; k <= ell; ++k) {
    Digits t(layout.total_digits(), 0);
    write_number(t, 0, wt, p, k);
    state.add(t, w[k]);
  }
  state.prune();
  snapshot("prepare_weights", state);

  // 2. Dicke state on the error register, controlled by k
  {
    SparseState next(layout);
    for (const auto& [t, amp] : state.amplitudes()) {
      if (!all_zero(t, err, m)) throw std::logic_error("error register not initialized to zero");
      const std::size_t k = read_number(t, 0, wt, p);
      const double scale = 1.0 / std::sqrt(binomial(m, k));
      for_each_weight_vector(m, 2, k, [&](const Digits& mu) {
        Digits u = t;
        std::copy(mu.begin(), mu.end(), u.begin() + static_cast<std::ptrdiff_t>(err));
        next.add(u, amp * scale);
        return true;
      });
    }
    state = next;
  }
  snapshot("dicke", state);

  // 3. uncompute k from |mu|
  const std::size_t capacity = static_cast<std::size_t>(std::pow(p, wt) + 0.5);
  state = apply_basis_map(state, [&](const Digits& t) {
    Digits u = t;
    const std::size_t k = read_number(t, 0, wt, p);
    const std::size_t weight = hamming_weight(std::span(t).subspan(err, m));
    write_number(u, 0, wt, p, (k + capacity - weight % capacity) % capacity);
    return u;
  });
  for (const auto& [t, amp] : state.amplitudes()) {
    if (!all_zero(t, 0, wt)) throw std::logic_error("weight register did not return to zero");
  }
  snapshot("uncompute_weight", state);

  // 4. G_i on each error digit
  for (const auto& [t, amp] : state.amplitudes()) {
    for (std::size_t i = 0; i < m; ++i) {
      if (t[err + i] > 1) throw std::logic_error("error register holds a non-binary digit before G_i");
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    DigitMatrix G = identity_matrix(p);
    for (std::uint32_t y = 0; y < p; ++y) G[y][1] = cspec.g_tilde[i][y];
    state = apply_single_digit_operator(state, err + i, G);
  }
  snapshot("error_register", state);

  // 5. syndrome += D^T y
  state = apply_basis_map(state, [&](const Digits& t) {
    Digits u = t;
    const Digits s = code.syndrome(std::span(t).subspan(err, m));
    for (std::size_t j = 0; j < n; ++j) u[syn + j] = mod_add(u[syn + j], s[j], p);
    return u;
  });
  snapshot("syndrome", state);

  // 6. decode and subtract
  std::map<Digits, DecodeResult> decoded;
  for (const auto& [t, amp] : state.amplitudes()) {
    Digits s(t.begin() + static_cast<std::ptrdiff_t>(syn), t.end());
    if (decoded.count(s) != 0) continue;
    DecodeResult r = decode_brute(code, s);
    if (r.status != DecodeStatus::kFound) {
      throw DecoderError("syndrome " + digits_to_string(s) + " could not be decoded (" + to_string(r.status) + ")", s);
    }
    decoded.emplace(std::move(s), std::move(r));
  }
  state = apply_basis_map(state, [&](const Digits& t) {
    Digits u = t;
    const Digits s(t.begin() + static_cast<std::ptrdiff_t>(syn), t.end());
    const Digits& y = decoded.at(s).y;
    for (std::size_t i = 0; i < m; ++i) u[err + i] = mod_sub(u[err + i], y[i], p);
    if (!all_zero(u, err, m)) throw DecoderError("decoded error differs from the error register", s);
    return u;
  });
  for (const auto& [s, r] : decoded) trace.decoder_log.push_back({s, r.y, hamming_weight(r.y), r.candidates});
  trace.decoder_success = true;
  snapshot("decode", state);

  // 7. F_0 per syndrome digit
  const DigitMatrix f0 = f_alpha_matrix(FieldElement(0, inst.modulus()));
  for (std::size_t j = 0; j < n; ++j) state = apply_single_digit_operator(state, syn + j, f0);
  snapshot("apply_f0", state);

  // 8. back to the position basis
  state = iqft(state, "syndrome");
  snapshot("qft", state);

  const SparseState x = extract_register(state, "syndrome");
  for (const auto& [t, amp] : x.amplitudes()) trace.final_state.add(t, amp);
  return trace;
}

}  // namespace qdqi

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

#include "qdqi/primitives.hpp"

#include <stdexcept>

namespace qdqi {

namespace {

DigitMatrix multiply_by(std::uint32_t c, std::uint32_t p) {
  DigitMatrix m(p, std::vector<Complex>(p));
  for (std::uint32_t x = 0; x < p; ++x) m[mod_mul(c, x, p)][x] = 1.0;
  return m;
}

}  // namespace

PrimitiveResult sim_quadratic_phase(const FieldElement& a) {
  const PrimeModulus& mod = a.modulus();
  const std::uint32_t p = mod.value();
  const InvertibleSqrt sqrt_map(mod);
  const RegisterLayout layout(mod, {{"ctrl", 1}, {"x", 1}, {"flag", 1}});
  constexpr std::size_t kCtrl = 0, kX = 1, kFlag = 2;

  SparseState state = SparseState::basis(layout, {0, a.value(), 0});
  state = apply_single_digit_operator(state, kCtrl, embedded_hadamard(p));

  // ctrl = 0: QFT|a>; ctrl = 1: QFT|twist^{-1} a>
  const DigitMatrix f = qft_matrix(p);
  const DigitMatrix f_twisted = matmul(f, multiply_by(mod_inv(sqrt_map.twist(), p), p));
  state = apply_conditional_digit_operator(state, kX, {f, f_twisted}, [](const Digits& t) { return std::size_t{t[kCtrl]}; });

  state = apply_basis_map(state, [&](const Digits& t) {
    Digits u = t;
    u[kX] = sqrt_map.forward(t[kX]);
    return u;
  });

  // flag marks the branch each control value keeps; s = 0 goes with ctrl = 0
  state = apply_basis_map(state, [&](const Digits& t) {
    Digits u = t;
    const std::uint32_t s = t[kX];
    const bool keep = t[kCtrl] == 0 ? (s == 0 || sqrt_map.branch(s) == 1) : (s != 0 && sqrt_map.branch(s) == -1);
    u[kFlag] = mod_add(u[kFlag], keep ? 1 : 0, p);
    return u;
  });
  auto flagged = postselect(state, [](const Digits& t) { return t[kFlag] == 1; });

  state = apply_single_digit_operator(flagged.state, kCtrl, embedded_hadamard(p));
  auto selected = postselect(state, [](const Digits& t) { return t[kCtrl] == 0; });

  PrimitiveResult out{extract_register(selected.state, "x"), flagged.probability * selected.probability,
                      {flagged.probability, selected.probability}};
  return out;
}

PrimitiveResult sim_shifted_quadratic_phase(const FieldElement& a, const FieldElement& b) {
  if (!(a.modulus() == b.modulus())) throw std::invalid_argument("modulus mismatch");
  const std::uint32_t p = a.modulus().value();
  PrimitiveResult base = sim_quadratic_phase(a);
  SparseState b_reg = SparseState::basis(RegisterLayout(a.modulus(), {{"b", 1}}), {b.value()});
  SparseState state = tensor(base.state, b_reg);
  state = apply_basis_map(state, [&](const Digits& t) { return Digits{mod_sub(t[0], t[1], p), t[1]}; });
  state = qft(state, "b");
  auto selected = postselect(state, [](const Digits& t) { return t[1] == 0; });

  PrimitiveResult out{extract_register(selected.state, "x"), base.success_probability * selected.probability,
                      base.stage_probabilities};
  out.stage_probabilities.push_back(selected.probability);
  return out;
}

PrimitiveResult sim_quadratic_form_phase(std::span<const FieldElement> diag) {
  if (diag.empty()) throw std::invalid_argument("empty quadratic form");
  const PrimeModulus mod = diag.front().modulus();
  PrimitiveResult out{SparseState(RegisterLayout(mod, {{"x", diag.size()}})), 1.0, {}};
  std::vector<SparseState> parts;
  for (const auto& d : diag) {
    PrimitiveResult one = sim_quadratic_phase(d);
    out.success_probability *= one.success_probability;
    out.stage_probabilities.insert(out.stage_probabilities.end(), one.stage_probabilities.begin(),
                                   one.stage_probabilities.end());
    parts.push_back(std::move(one.state));
  }
  // product state over the n digits
  std::vector<std::pair<Digits, Complex>> acc{{Digits{}, 1.0}};
  for (const auto& part : parts) {
    std::vector<std::pair<Digits, Complex>> next;
    for (const auto& [prefix, amp] : acc) {
      for (const auto& [t, v] : part.amplitudes()) {
        Digits d = prefix;
        d.push_back(t[0]);
        next.emplace_back(std::move(d), amp * v);
      }
    }
    acc = std::move(next);
  }
  for (const auto& [d, v] : acc) out.state.add(d, v);
  out.state.prune();
  return out;
}

QuantumCondition::QuantumCondition(std::function<bool(std::uint32_t)> predicate, DigitMatrix U0, DigitMatrix U1,
                                   PrimeModulus p)
    : predicate_(std::move(predicate)), U0_(std::move(U0)), U1_(std::move(U1)), p_(p) {
  const std::uint32_t q = p_.value();
  matrix_.assign(q, std::vector<Complex>(q));
  for (std::uint32_t x = 0; x < q; ++x) {
    const SparseState col = simulate(SparseState::basis(RegisterLayout(p_, {{"x", 1}}), {x}));
    for (const auto& [t, v] : col.amplitudes()) matrix_[t[0]][x] = v;
  }
}

SparseState QuantumCondition::apply(const SparseState& input) const { return simulate(input); }

SparseState QuantumCondition::simulate(const SparseState& input) const {
  if (input.layout().total_digits() != 1 || !(input.layout().modulus() == p_)) {
    throw std::invalid_argument("quantum condition acts on a single digit");
  }
  const std::uint32_t q = p_.value();
  SparseState state = tensor(input, SparseState::basis(RegisterLayout(p_, {{"anc", 1}}), {0}));
  state = apply_basis_map(state, [&](const Digits& t) { return Digits{t[0], predicate_(t[0]) ? 1u : 0u}; });
  state = apply_conditional_digit_operator(state, 0, {U0_, U1_}, [](const Digits& t) { return std::size_t{t[1]}; });
  state = apply_single_digit_operator(state, 1, embedded_hadamard(q));
  SparseState out(RegisterLayout(p_, {{input.layout().registers().front().name, 1}}));
  for (const auto& [t, v] : state.amplitudes()) {
    if (t[1] == 0) out.add({t[0]}, v);
  }
  out.prune();
  return out;
}

}  // namespace qdqi

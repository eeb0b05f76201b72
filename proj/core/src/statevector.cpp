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

#include "qdqi/statevector.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace qdqi {

RegisterLayout::RegisterLayout(PrimeModulus p, std::vector<Register> registers)
    : p_(p), registers_(std::move(registers)) {
  for (std::size_t i = 0; i < registers_.size(); ++i) {
    if (registers_[i].digits == 0) throw std::invalid_argument("register '" + registers_[i].name + "' is empty");
    for (std::size_t j = 0; j < i; ++j) {
      if (registers_[j].name == registers_[i].name) {
        throw std::invalid_argument("duplicate register '" + registers_[i].name + "'");
      }
    }
    total_ += registers_[i].digits;
  }
}

const Register& RegisterLayout::find(const std::string& name) const {
  for (const auto& r : registers_) {
    if (r.name == name) return r;
  }
  throw std::out_of_range("no register named '" + name + "'");
}

bool RegisterLayout::has(const std::string& name) const {
  for (const auto& r : registers_) {
    if (r.name == name) return true;
  }
  return false;
}

std::size_t RegisterLayout::offset(const std::string& name) const {
  std::size_t off = 0;
  for (const auto& r : registers_) {
    if (r.name == name) return off;
    off += r.digits;
  }
  throw std::out_of_range("no register named '" + name + "'");
}

std::size_t RegisterLayout::width(const std::string& name) const { return find(name).digits; }

bool RegisterLayout::operator==(const RegisterLayout& o) const {
  if (!(p_ == o.p_) || registers_.size() != o.registers_.size()) return false;
  for (std::size_t i = 0; i < registers_.size(); ++i) {
    if (registers_[i].name != o.registers_[i].name || registers_[i].digits != o.registers_[i].digits) return false;
  }
  return true;
}

SparseState::SparseState(RegisterLayout layout) : layout_(std::move(layout)) {}

SparseState SparseState::basis(RegisterLayout layout, Digits digits) {
  SparseState s(std::move(layout));
  s.add(digits, 1.0);
  return s;
}

Complex SparseState::amplitude(const Digits& digits) const {
  auto it = amps_.find(digits);
  return it == amps_.end() ? Complex{} : it->second;
}

void SparseState::add(const Digits& digits, Complex value) {
  if (digits.size() != layout_.total_digits()) throw std::invalid_argument("tuple length differs from layout");
  for (auto d : digits) {
    if (d >= layout_.p()) throw std::invalid_argument("digit outside [0, p)");
  }
  amps_[digits] += value;
}

void SparseState::prune() {
  std::erase_if(amps_, [](const auto& kv) { return std::abs(kv.second) < kPruneThreshold; });
}

double SparseState::norm_sq() const {
  double acc = 0.0;
  for (const auto& [k, v] : amps_) acc += std::norm(v);
  return acc;
}

SparseState SparseState::scaled(Complex c) const {
  SparseState out(layout_);
  for (const auto& [k, v] : amps_) out.amps_.emplace_hint(out.amps_.end(), k, v * c);
  out.prune();
  return out;
}

SparseState SparseState::normalized() const {
  const double n = norm_sq();
  if (!(n > 0.0)) throw std::domain_error("zero-norm state");
  return scaled(1.0 / std::sqrt(n));
}

Complex inner_product(const SparseState& a, const SparseState& b) {
  Complex acc = 0.0;
  for (const auto& [k, v] : a.amplitudes()) {
    auto it = b.amplitudes().find(k);
    if (it != b.amplitudes().end()) acc += std::conj(v) * it->second;
  }
  return acc;
}

SparseState operator+(const SparseState& a, const SparseState& b) {
  if (!(a.layout() == b.layout())) throw std::invalid_argument("layout mismatch");
  SparseState out = a;
  for (const auto& [k, v] : b.amplitudes()) out.add(k, v);
  out.prune();
  return out;
}

DigitMatrix identity_matrix(std::uint32_t p) {
  DigitMatrix m(p, std::vector<Complex>(p));
  for (std::uint32_t i = 0; i < p; ++i) m[i][i] = 1.0;
  return m;
}

DigitMatrix qft_matrix(std::uint32_t p, bool inverse) {
  DigitMatrix m(p, std::vector<Complex>(p));
  const double norm = 1.0 / std::sqrt(static_cast<double>(p));
  for (std::uint32_t z = 0; z < p; ++z) {
    for (std::uint32_t x = 0; x < p; ++x) {
      const std::int64_t k = static_cast<std::int64_t>(mod_mul(z, x, p));
      m[z][x] = norm * root_of_unity(inverse ? -k : k, p);
    }
  }
  return m;
}

DigitMatrix embedded_hadamard(std::uint32_t p) {
  DigitMatrix m = identity_matrix(p);
  const double h = std::numbers::sqrt2 / 2.0;
  m[0][0] = h;
  m[0][1] = h;
  m[1][0] = h;
  m[1][1] = -h;
  return m;
}

DigitMatrix matmul(const DigitMatrix& a, const DigitMatrix& b) {
  const std::size_t n = a.size();
  DigitMatrix out(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

DigitMatrix f_alpha_matrix(const FieldElement& alpha) {
  const PrimeModulus& mod = alpha.modulus();
  const std::uint32_t p = mod.value();
  DigitMatrix m(p, std::vector<Complex>(p));
  m[alpha.value()][0] = static_cast<double>(p);
  const Complex g1 = quad_gauss_closed(FieldElement(1, mod));
  const std::uint32_t inv4 = mod_inv(4 % p, p);
  for (std::uint32_t x = 1; x < p; ++x) {
    const Complex lead = static_cast<double>(chi(FieldElement(mod_neg(x, p), mod))) * g1;
    const std::uint32_t xinv = mod_inv(x, p);
    for (std::uint32_t z = 0; z < p; ++z) {
      const std::uint32_t d = mod_sub(z, alpha.value(), p);
      const std::uint32_t e = mod_mul(mod_mul(xinv, mod_mul(d, d, p), p), inv4, p);
      m[z][x] = lead * root_of_unity(e, p);
    }
  }
  return m;
}

namespace {

void require_square(const DigitMatrix& m, std::uint32_t p) {
  if (m.size() != p) throw std::invalid_argument("operator must be p x p");
  for (const auto& row : m) {
    if (row.size() != p) throw std::invalid_argument("operator must be p x p");
  }
}

}  // namespace

SparseState apply_single_digit_operator(const SparseState& state, std::size_t digit, const DigitMatrix& m) {
  return apply_conditional_digit_operator(state, digit, {m}, [](const Digits&) { return std::size_t{0}; });
}

SparseState apply_conditional_digit_operator(const SparseState& state, std::size_t digit,
                                             const std::vector<DigitMatrix>& matrices,
                                             const std::function<std::size_t(const Digits&)>& select) {
  const std::uint32_t p = state.layout().p();
  if (digit >= state.layout().total_digits()) throw std::out_of_range("digit index out of range");
  for (const auto& m : matrices) require_square(m, p);
  SparseState out(state.layout());
  for (const auto& [tuple, amp] : state.amplitudes()) {
    const DigitMatrix& m = matrices.at(select(tuple));
    const std::uint32_t col = tuple[digit];
    Digits t = tuple;
    for (std::uint32_t row = 0; row < p; ++row) {
      const Complex c = m[row][col];
      if (c == Complex{}) continue;
      t[digit] = row;
      out.add(t, c * amp);
    }
  }
  out.prune();
  return out;
}

SparseState qft(const SparseState& state, const std::string& reg) {
  const DigitMatrix f = qft_matrix(state.layout().p());
  const std::size_t off = state.layout().offset(reg);
  SparseState out = state;
  for (std::size_t j = 0; j < state.layout().width(reg); ++j) out = apply_single_digit_operator(out, off + j, f);
  return out;
}

SparseState iqft(const SparseState& state, const std::string& reg) {
  const DigitMatrix f = qft_matrix(state.layout().p(), true);
  const std::size_t off = state.layout().offset(reg);
  SparseState out = state;
  for (std::size_t j = 0; j < state.layout().width(reg); ++j) out = apply_single_digit_operator(out, off + j, f);
  return out;
}

SparseState apply_basis_map(const SparseState& state, const std::function<Digits(const Digits&)>& f) {
  SparseState out(state.layout());
  for (const auto& [tuple, amp] : state.amplitudes()) {
    Digits image = f(tuple);
    if (out.amplitudes().count(image) != 0) throw std::logic_error("basis map is not injective on the support");
    out.add(image, amp);
  }
  return out;
}

Postselected postselect(const SparseState& state, const std::function<bool(const Digits&)>& keep) {
  const double before = state.norm_sq();
  if (!(before > 0.0)) throw std::domain_error("zero-norm state");
  SparseState kept(state.layout());
  for (const auto& [tuple, amp] : state.amplitudes()) {
    if (keep(tuple)) kept.add(tuple, amp);
  }
  const double after = kept.norm_sq();
  if (!(after > 0.0)) throw std::domain_error("post-selection has zero probability");
  return {kept.scaled(1.0 / std::sqrt(after)), after / before};
}

SparseState extract_register(const SparseState& state, const std::string& reg) {
  const auto& layout = state.layout();
  const std::size_t off = layout.offset(reg);
  const std::size_t w = layout.width(reg);
  SparseState out(RegisterLayout(layout.modulus(), {{reg, w}}));
  Digits rest;
  bool first = true;
  for (const auto& [tuple, amp] : state.amplitudes()) {
    Digits others(tuple.begin(), tuple.begin() + static_cast<std::ptrdiff_t>(off));
    others.insert(others.end(), tuple.begin() + static_cast<std::ptrdiff_t>(off + w), tuple.end());
    if (first) {
      rest = std::move(others);
      first = false;
    } else if (others != rest) {
      throw std::logic_error("register '" + reg + "' is entangled with the rest of the state");
    }
    out.add(Digits(tuple.begin() + static_cast<std::ptrdiff_t>(off), tuple.begin() + static_cast<std::ptrdiff_t>(off + w)),
            amp);
  }
  return out;
}

SparseState tensor(const SparseState& a, const SparseState& b) {
  if (!(a.layout().modulus() == b.layout().modulus())) throw std::invalid_argument("modulus mismatch");
  std::vector<Register> regs = a.layout().registers();
  regs.insert(regs.end(), b.layout().registers().begin(), b.layout().registers().end());
  SparseState out(RegisterLayout(a.layout().modulus(), std::move(regs)));
  for (const auto& [ta, va] : a.amplitudes()) {
    for (const auto& [tb, vb] : b.amplitudes()) {
      Digits t = ta;
      t.insert(t.end(), tb.begin(), tb.end());
      out.add(t, va * vb);
    }
  }
  out.prune();
  return out;
}

double distance_up_to_phase_scale(const SparseState& s1, const SparseState& s2) {
  if (s1.layout().p() != s2.layout().p() || s1.layout().total_digits() != s2.layout().total_digits()) {
    throw std::invalid_argument("layout mismatch");
  }
  const double n1 = s1.norm_sq();
  const double n2 = s2.norm_sq();
  if (!(n1 > 0.0) || !(n2 > 0.0)) throw std::domain_error("zero-norm state");
  const Complex c = inner_product(s2, s1) / n2;
  double residual = 0.0;
  for (const auto& [k, v] : s1.amplitudes()) residual += std::norm(v - c * s2.amplitude(k));
  for (const auto& [k, v] : s2.amplitudes()) {
    if (s1.amplitudes().count(k) == 0) residual += std::norm(c * v);
  }
  return std::sqrt(residual / n1);
}

std::vector<double> measure_distribution(const SparseState& state, std::size_t bins,
                                         const std::function<std::size_t(const Digits&)>& classifier) {
  const double total = state.norm_sq();
  if (!(total > 0.0)) throw std::domain_error("zero-norm state");
  std::vector<double> probs(bins, 0.0);
  for (const auto& [tuple, amp] : state.amplitudes()) probs.at(classifier(tuple)) += std::norm(amp);
  for (auto& v : probs) v /= total;
  return probs;
}

double expectation_satisfied(const SparseState& state, const QuadSatInstance& inst) {
  if (state.layout().total_digits() != inst.n() || state.layout().p() != inst.p()) {
    throw std::invalid_argument("state does not live on the instance's variable register");
  }
  const auto probs = measure_distribution(state, inst.m() + 1, [&](const Digits& x) { return satisfied_count(inst, x); });
  double e = 0.0;
  for (std::size_t s = 0; s < probs.size(); ++s) e += static_cast<double>(s) * probs[s];
  return e;
}

void write_csv(const SparseState& state, std::ostream& out) {
  char buf[64];
  for (const auto& [tuple, amp] : state.amplitudes()) {
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i) out << ';';
      out << tuple[i];
    }
    std::snprintf(buf, sizeof buf, ",%.17g", amp.real());
    out << buf;
    std::snprintf(buf, sizeof buf, ",%.17g\n", amp.imag());
    out << buf;
  }
}

}  // namespace qdqi

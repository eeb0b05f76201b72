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

#include "qdqi/prime_field.hpp"

#include <string>

namespace qdqi {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint32_t p) : p_(p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not an odd prime");
  }
  if (p > (1u << 30)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " exceeds supported range");
  }
}

std::uint32_t mod_pow(std::uint32_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  std::uint64_t b = base % p;
  while (exp > 0) {
    if (exp & 1) result = (result * b) % p;
    b = (b * b) % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("no inverse");
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  // old_r == gcd(a, p) == 1 since p is prime
  return mod_reduce(old_s, p);
}

int legendre(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) return 0;
  return mod_pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

FieldElement::FieldElement(std::uint32_t value, PrimeModulus modulus) : value_(value), modulus_(modulus) {
  if (value >= modulus.value()) {
    throw std::invalid_argument("field element " + std::to_string(value) + " out of range for p = " +
                                std::to_string(modulus.value()));
  }
}

FieldElement FieldElement::from_signed(std::int64_t value, PrimeModulus modulus) {
  return FieldElement(mod_reduce(value, modulus.value()), modulus);
}

void FieldElement::require_same_modulus(const FieldElement& o) const {
  if (!(modulus_ == o.modulus_)) throw std::invalid_argument("modulus mismatch");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_modulus(o);
  return FieldElement(mod_add(value_, o.value_, modulus_.value()), modulus_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_modulus(o);
  return FieldElement(mod_sub(value_, o.value_, modulus_.value()), modulus_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_modulus(o);
  return FieldElement(mod_mul(value_, o.value_, modulus_.value()), modulus_);
}

FieldElement FieldElement::operator-() const { return FieldElement(mod_neg(value_, modulus_.value()), modulus_); }

FieldElement FieldElement::pow(std::uint64_t exp) const {
  return FieldElement(mod_pow(value_, exp, modulus_.value()), modulus_);
}

FieldElement inv(const FieldElement& a) { return FieldElement(mod_inv(a.value(), a.modulus().value()), a.modulus()); }

int chi(const FieldElement& a) { return legendre(a.value(), a.modulus().value()); }

std::complex<double> i_p(const PrimeModulus& p) {
  return p.residue_class() == 1 ? std::complex<double>(1.0, 0.0) : std::complex<double>(0.0, 1.0);
}

std::complex<double> i_p_pow(const PrimeModulus& p, std::int64_t exponent) {
  if (p.residue_class() == 1) return {1.0, 0.0};
  switch (((exponent % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

FieldElement primitive_root(const PrimeModulus& modulus) {
  const std::uint32_t p = modulus.value();
  std::vector<std::uint32_t> factors;
  std::uint32_t n = p - 1;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool generator = true;
    for (std::uint32_t q : factors) {
      if (mod_pow(g, (p - 1) / q, p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return FieldElement(g, modulus);
  }
  // p = 3: the loop above returns 2, so only unreachable paths land here.
  throw std::logic_error("no primitive root found");
}

std::uint32_t smallest_nonresidue(const PrimeModulus& modulus) {
  for (std::uint32_t a = 2; a < modulus.value(); ++a) {
    if (legendre(a, modulus.value()) == -1) return a;
  }
  throw std::logic_error("no nonresidue found");
}

InvertibleSqrt::InvertibleSqrt(PrimeModulus p)
    : modulus_(p), forward_(p.value(), 0), inverse_(p.value(), 0), branch_(p.value(), 0) {
  const std::uint32_t q = p.value();
  const bool three_mod_four = p.residue_class() == 3;
  twist_ = three_mod_four ? q - 1 : smallest_nonresidue(p);
  std::vector<bool> hit(q, false);
  hit[0] = true;
  for (std::uint32_t s = 1; s < q; ++s) {
    int b = three_mod_four ? legendre(s, q) : (s <= (q - 1) / 2 ? 1 : -1);
    std::uint32_t sq = mod_mul(s, s, q);
    std::uint32_t x = b == 1 ? sq : mod_mul(twist_, sq, q);
    if (hit[x]) throw std::logic_error("invertible square root is not a bijection");
    hit[x] = true;
    branch_[s] = b;
    inverse_[s] = x;
    forward_[x] = s;
  }
}

FieldElement InvertibleSqrt::forward(const FieldElement& x) const {
  if (!(x.modulus() == modulus_)) throw std::invalid_argument("modulus mismatch");
  return FieldElement(forward(x.value()), modulus_);
}

FieldElement InvertibleSqrt::inverse(const FieldElement& s) const {
  if (!(s.modulus() == modulus_)) throw std::invalid_argument("modulus mismatch");
  return FieldElement(inverse(s.value()), modulus_);
}

FieldElement sqrt_invertible(const FieldElement& x) { return InvertibleSqrt(x.modulus()).forward(x); }

}  // namespace qdqi

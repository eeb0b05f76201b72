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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qdqi {

/// An odd prime p. Primality is checked by trial division at construction.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint32_t p);

  std::uint32_t value() const { return p_; }
  /// p mod 4, either 1 or 3.
  std::uint32_t residue_class() const { return p_ % 4; }

  bool operator==(const PrimeModulus&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Raw modular helpers on canonical residues in [0, p).
inline std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}
inline std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}
inline std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}
inline std::uint32_t mod_neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
/// Reduces any signed integer into [0, p).
inline std::uint32_t mod_reduce(std::int64_t a, std::uint32_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}
std::uint32_t mod_pow(std::uint32_t base, std::uint64_t exp, std::uint32_t p);
/// Extended Euclid. Throws std::domain_error("no inverse") for a == 0.
std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p);
/// Euler's criterion; returns -1, 0 or +1.
int legendre(std::uint32_t a, std::uint32_t p);

class FieldElement {
 public:
  FieldElement(std::uint32_t value, PrimeModulus modulus);
  static FieldElement from_signed(std::int64_t value, PrimeModulus modulus);

  std::uint32_t value() const { return value_; }
  const PrimeModulus& modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement pow(std::uint64_t exp) const;

  bool operator==(const FieldElement&) const = default;

 private:
  void require_same_modulus(const FieldElement& o) const;

  std::uint32_t value_;
  PrimeModulus modulus_;
};

FieldElement inv(const FieldElement& a);

/// Quadratic character: +1 on nonzero squares, -1 on nonsquares, 0 at 0.
int chi(const FieldElement& a);

/// 1 when p = 1 mod 4, the imaginary unit when p = 3 mod 4.
std::complex<double> i_p(const PrimeModulus& p);

/// i_p raised to an integer power, computed exactly on the four units.
std::complex<double> i_p_pow(const PrimeModulus& p, std::int64_t exponent);

/// Smallest generator of the multiplicative group.
FieldElement primitive_root(const PrimeModulus& p);

/// Smallest quadratic nonresidue.
std::uint32_t smallest_nonresidue(const PrimeModulus& p);

/// Bijective square root on F_p used to turn linear phases into quadratic ones.
///
/// Every nonzero s is labelled with a branch: on the +1 branch s is the chosen
/// root of the residue s^2, on the -1 branch s is the chosen root of
/// twist^{-1} x for a nonresidue x, so x = twist * s^2. For p = 3 mod 4 the
/// twist is -1 and the branch of s is chi(s), which gives the familiar
/// x = chi(s) s^2. For p = 1 mod 4 the twist is the smallest nonresidue and
/// the branch is +1 on {1..(p-1)/2} and -1 on the upper half.
class InvertibleSqrt {
 public:
  explicit InvertibleSqrt(PrimeModulus p);

  const PrimeModulus& modulus() const { return modulus_; }
  std::uint32_t twist() const { return twist_; }

  std::uint32_t forward(std::uint32_t x) const { return forward_.at(x); }
  std::uint32_t inverse(std::uint32_t s) const { return inverse_.at(s); }
  int branch(std::uint32_t s) const { return branch_.at(s); }

  FieldElement forward(const FieldElement& x) const;
  FieldElement inverse(const FieldElement& s) const;

 private:
  PrimeModulus modulus_;
  std::uint32_t twist_;
  std::vector<std::uint32_t> forward_;
  std::vector<std::uint32_t> inverse_;
  std::vector<int> branch_;
};

FieldElement sqrt_invertible(const FieldElement& x);

}  // namespace qdqi

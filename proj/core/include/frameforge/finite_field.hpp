// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace frameforge {

bool is_prime(std::uint64_t n) noexcept;

struct PrimePower {
  std::uint32_t p;
  std::uint32_t n;
};
// Decomposes q = p^n, or nothing when q is not a prime power.
std::optional<PrimePower> prime_power(std::uint64_t q) noexcept;

// Legendre symbol (k/p) for an odd prime p.
int legendre(long long k, long long p);

// Nonzero squares mod p together with 0, ascending.
std::vector<std::uint32_t> squares_mod(std::uint32_t p);

class FieldElement;

// GF(p^n). Elements are coded as integers in [0, p^n): the base-p digits of
// the code are the coefficients of the residue polynomial, low degree first.
// The modulus is the monic irreducible of degree n with the smallest code.
class FiniteField {
 public:
  using Code = std::uint32_t;

  FiniteField(std::uint32_t p, std::uint32_t n);
  static FiniteField of_order(std::uint64_t q);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return n_; }
  Code order() const noexcept { return q_; }
  // Coefficients of the modulus, low degree first, length n + 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Code add(Code a, Code b) const noexcept;
  Code sub(Code a, Code b) const noexcept;
  Code neg(Code a) const noexcept;
  Code mul(Code a, Code b) const noexcept;
  Code inv(Code a) const;  // throws InvalidArgument on zero
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t e) const noexcept;
  // Sum of the Frobenius conjugates a^{p^i}; lands in the prime subfield.
  std::uint32_t trace(Code a) const noexcept;
  // The embedding of an integer of the prime field.
  Code from_integer(long long k) const noexcept;

  FieldElement element(Code code) const;

  // Coefficient-list polynomials over GF(p), low degree first.
  static bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

 private:
  std::uint32_t p_;
  std::uint32_t n_;
  Code q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Code> exp_;  // powers of a primitive element, length q - 1
  std::vector<std::uint32_t> log_;
};

// A field element bound to its field. The field must outlive the element.
class FieldElement {
 public:
  FieldElement(const FiniteField& field, FiniteField::Code code) noexcept
      : field_(&field), code_(code) {}

  FiniteField::Code code() const noexcept { return code_; }
  const FiniteField& field() const noexcept { return *field_; }

  FieldElement operator+(const FieldElement& o) const noexcept {
    return {*field_, field_->add(code_, o.code_)};
  }
  FieldElement operator-(const FieldElement& o) const noexcept {
    return {*field_, field_->sub(code_, o.code_)};
  }
  FieldElement operator-() const noexcept { return {*field_, field_->neg(code_)}; }
  FieldElement operator*(const FieldElement& o) const noexcept {
    return {*field_, field_->mul(code_, o.code_)};
  }
  FieldElement operator/(const FieldElement& o) const {
    return {*field_, field_->div(code_, o.code_)};
  }
  FieldElement pow(std::uint64_t e) const noexcept { return {*field_, field_->pow(code_, e)}; }
  FieldElement inverse() const { return {*field_, field_->inv(code_)}; }

  bool operator==(const FieldElement& o) const noexcept {
    return field_ == o.field_ && code_ == o.code_;
  }

 private:
  const FiniteField* field_;
  FiniteField::Code code_;
};

std::uint32_t field_trace(const FieldElement& x) noexcept;

}  // namespace frameforge

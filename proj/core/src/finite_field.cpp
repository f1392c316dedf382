// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frameforge/finite_field.hpp"

#include <string>

#include "frameforge/error.hpp"

namespace frameforge {
namespace {

constexpr std::uint64_t kMaxOrder = 1u << 24;

using Poly = std::vector<std::uint32_t>;

std::uint64_t modpow(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = result * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return result;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g, both over GF(p).
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint32_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - lead * g[i] % p) % p);
    }
    trim(f);
  }
  return f;
}

Poly digits(std::uint64_t code, std::uint32_t p, std::uint32_t n) {
  Poly out(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    out[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return out;
}

std::uint64_t encode(const Poly& f, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = f.size(); i-- > 0;) code = code * p + f[i];
  return code;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> prime_power(std::uint64_t q) noexcept {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t n = 0;
  while (q % p == 0) {
    q /= p;
    ++n;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{static_cast<std::uint32_t>(p), n};
}

int legendre(long long k, long long p) {
  require(p > 2 && is_prime(static_cast<std::uint64_t>(p)), ErrorCode::kBadPrime,
          "Legendre symbol needs an odd prime, got " + std::to_string(p));
  const long long r = ((k % p) + p) % p;
  if (r == 0) return 0;
  return modpow(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>((p - 1) / 2),
                static_cast<std::uint64_t>(p)) == 1
             ? 1
             : -1;
}

std::vector<std::uint32_t> squares_mod(std::uint32_t p) {
  std::vector<bool> hit(p, false);
  for (std::uint64_t x = 0; x < p; ++x) hit[x * x % p] = true;
  std::vector<std::uint32_t> out;
  for (std::uint32_t r = 0; r < p; ++r) {
    if (hit[r]) out.push_back(r);
  }
  return out;
}

bool FiniteField::is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  require(!f.empty(), ErrorCode::kInvalidArgument, "zero polynomial");
  const std::size_t d = f.size() - 1;
  if (d <= 1) return d == 1;
  // Trial division by every monic polynomial of degree 1..d/2.
  for (std::size_t deg = 1; deg <= d / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = digits(c, p, static_cast<std::uint32_t>(deg));
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t n) : p_(p), n_(n) {
  require(is_prime(p), ErrorCode::kNotPrime, "field characteristic " + std::to_string(p));
  require(n >= 1, ErrorCode::kInvalidArgument, "extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    require(q <= kMaxOrder, ErrorCode::kInvalidArgument, "field order too large");
  }
  q_ = static_cast<Code>(q);

  for (std::uint64_t c = 0; c < q; ++c) {
    Poly candidate = digits(c, p, n);
    candidate.push_back(1);
    if (is_irreducible(candidate, p)) {
      modulus_ = candidate;
      break;
    }
  }

  auto slow_mul = [&](Code a, Code b) {
    const Poly fa = digits(a, p, n);
    const Poly fb = digits(b, p, n);
    Poly prod(2 * n - 1, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{fa[i]} * fb[j]) % p);
      }
    }
    return static_cast<Code>(encode(poly_mod(prod, modulus_, p), p));
  };

  // Find a primitive element and tabulate its powers.
  log_.assign(q_, 0);
  for (Code g = 1; g < q_; ++g) {
    exp_.clear();
    Code x = 1;
    do {
      exp_.push_back(x);
      x = slow_mul(x, g);
    } while (x != 1 && exp_.size() < q_);
    if (exp_.size() == q_ - 1) break;
  }
  for (std::uint32_t i = 0; i < exp_.size(); ++i) log_[exp_[i]] = i;
}

FiniteField FiniteField::of_order(std::uint64_t q) {
  const auto pp = prime_power(q);
  require(pp.has_value(), ErrorCode::kInadmissibleParameters,
          std::to_string(q) + " is not a prime power");
  return FiniteField(pp->p, pp->n);
}

FiniteField::Code FiniteField::add(Code a, Code b) const noexcept {
  if (p_ == 2) return a ^ b;
  Code result = 0;
  Code scale = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    result += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return result;
}

FiniteField::Code FiniteField::neg(Code a) const noexcept {
  if (p_ == 2) return a;
  Code result = 0;
  Code scale = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    result += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return result;
}

FiniteField::Code FiniteField::sub(Code a, Code b) const noexcept { return add(a, neg(b)); }

FiniteField::Code FiniteField::mul(Code a, Code b) const noexcept {
  if (a == 0 || b == 0) return 0;
  return exp_[(std::uint64_t{log_[a]} + log_[b]) % (q_ - 1)];
}

FiniteField::Code FiniteField::inv(Code a) const {
  require(a != 0, ErrorCode::kInvalidArgument, "inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Code FiniteField::pow(Code a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::size_t>(std::uint64_t{log_[a]} * (e % (q_ - 1)) % (q_ - 1))];
}

std::uint32_t FiniteField::trace(Code a) const noexcept {
  Code sum = 0;
  Code conjugate = a;
  for (std::uint32_t i = 0; i < n_; ++i) {
    sum = add(sum, conjugate);
    conjugate = pow(conjugate, p_);
  }
  return sum;
}

FiniteField::Code FiniteField::from_integer(long long k) const noexcept {
  const long long p = p_;
  return static_cast<Code>(((k % p) + p) % p);
}

FieldElement FiniteField::element(Code code) const {
  require(code < q_, ErrorCode::kInvalidArgument,
          "element code " + std::to_string(code) + " outside the field");
  return {*this, code};
}

std::uint32_t field_trace(const FieldElement& x) noexcept { return x.field().trace(x.code()); }

}  // namespace frameforge

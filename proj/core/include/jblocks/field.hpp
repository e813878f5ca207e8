#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "jblocks/error.hpp"

namespace jblocks {

using Integer = mpz_class;
using Rational = mpq_class;

bool is_prime(std::uint64_t n) noexcept;

/// Characteristic of the ground field: 0 selects the rationals, a prime p
/// selects F_p. Partitions of matrices with entries in the prime field do not
/// change under field extension, so nothing larger is needed.
class FieldSpec {
 public:
  FieldSpec() = default;
  explicit FieldSpec(unsigned characteristic);

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime(unsigned p) { return FieldSpec{p}; }

  unsigned characteristic() const noexcept { return characteristic_; }
  bool is_rational() const noexcept { return characteristic_ == 0; }

  /// True when n is a unit in the field (n != 0 mod p, or n != 0 in Q).
  bool is_invertible(std::int64_t n) const noexcept;

  std::string to_string() const;

  friend bool operator==(FieldSpec a, FieldSpec b) noexcept = default;

 private:
  unsigned characteristic_ = 0;
};

/// F_p with p < 2^31, elements stored as canonical residues.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }
  FieldSpec spec() const { return FieldSpec::prime(p_); }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  value_type from_int(std::int64_t n) const noexcept {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  /// Throws InvalidArgument when p divides the denominator.
  value_type from_rational(const Rational& q) const;

  value_type add(value_type a, value_type b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type inv(value_type a) const;
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  bool is_zero(value_type a) const noexcept { return a == 0; }
  bool is_one(value_type a) const noexcept { return a == 1; }

  std::string to_string(value_type a) const { return std::to_string(a); }
  value_type parse(const std::string& text) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// Q with arbitrary-precision numerators and denominators.
class RationalField {
 public:
  using value_type = Rational;

  std::uint32_t characteristic() const noexcept { return 0; }
  FieldSpec spec() const { return FieldSpec::rationals(); }

  value_type zero() const { return Rational(0); }
  value_type one() const { return Rational(1); }
  value_type from_int(std::int64_t n) const { return Rational(static_cast<long>(n)); }
  value_type from_rational(const Rational& q) const { return q; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const;
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }

  std::string to_string(const value_type& a) const { return a.get_str(); }
  value_type parse(const std::string& text) const;

  friend bool operator==(const RationalField&, const RationalField&) noexcept { return true; }
};

/// Parses "n" or "n/d" into a canonical rational.
Rational parse_rational(const std::string& text);

/// Calls f with the concrete field selected by spec.
template <class F>
decltype(auto) visit_field(FieldSpec spec, F&& f) {
  if (spec.is_rational()) return std::forward<F>(f)(RationalField{});
  return std::forward<F>(f)(PrimeField{spec.characteristic()});
}

}  // namespace jblocks

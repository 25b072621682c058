#pragma once

// Exact rationals over arbitrary-precision integers.
//
// A Rational is always kept in lowest terms with a positive denominator,
// so two values are equal iff their numerators and denominators are.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gerbe {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(std::int64_t num, std::int64_t den);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Fractional part in [0, 1).
  Rational frac() const;
  /// Largest integer <= value.
  BigInt floor() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;
  /// Accepts "p", "p/q", "-p/q". Rejects decimals, empty strings and zero denominators.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class v);
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// base^exp for exp >= 0.
BigInt ipow(const BigInt& base, unsigned long exp);
/// base^exp as a Rational; negative exponents invert (base must be nonzero).
Rational rpow(const BigInt& base, long exp);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
/// Residue of a modulo m in [0, m); m > 0.
std::int64_t mod64(std::int64_t a, std::int64_t m);

}  // namespace gerbe

#pragma once

// Exact elements of the cyclotomic field Q(zeta_N), zeta_N = exp(2 pi i / N).
//
// Values are stored in the power basis 1, zeta, ..., zeta^{phi(N)-1}, i.e. as
// polynomials reduced modulo Phi_N. Within one order the coefficient list is
// canonical. Binary operations between different orders embed both operands
// into Q(zeta_lcm) and never descend to a smaller field afterwards.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gerbe/rational.hpp"

namespace gerbe {

class CyclotomicNumber {
 public:
  /// Zero of Q(zeta_1) = Q.
  CyclotomicNumber();
  /// A rational placed in Q(zeta_order).
  explicit CyclotomicNumber(const Rational& q, std::int64_t order = 1);

  /// Builds from canonical power-basis coefficients; length must be phi(order).
  static CyclotomicNumber from_coefficients(std::int64_t order, std::vector<Rational> coeffs);

  /// sum_j terms[j] * zeta_order^j for an arbitrary-length list; reduced on construction.
  static CyclotomicNumber from_power_sum(std::int64_t order, std::span<const Rational> terms);

  /// zeta_order^exponent. Rejects order < 1.
  static CyclotomicNumber root_of_unity(std::int64_t exponent, std::int64_t order);

  std::int64_t order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  /// True when every non-constant coefficient vanishes.
  bool is_rational() const;
  /// The constant coefficient; meaningful as "the value" only when is_rational().
  const Rational& constant_term() const { return coeffs_.front(); }

  /// Same value written in Q(zeta_target); target must be a multiple of order().
  CyclotomicNumber embed(std::int64_t target) const;

  /// Complex conjugation, zeta -> zeta^{N-1}.
  CyclotomicNumber conj() const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const Rational& rhs);
  /// Division by a nonzero rational; general field division is not provided.
  CyclotomicNumber& operator/=(const Rational& rhs);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& b) { return a *= b; }
  friend CyclotomicNumber operator*(const Rational& b, CyclotomicNumber a) { return a *= b; }
  friend CyclotomicNumber operator/(CyclotomicNumber a, const Rational& b) { return a /= b; }

  /// Value equality across orders (compared in Q(zeta_lcm)).
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  /// Human-readable form such as "1/2 + 3*z^2 (z = zeta_6)"; for debugging only.
  std::string to_string() const;

 private:
  CyclotomicNumber(std::int64_t order, std::vector<Rational> coeffs);

  std::int64_t order_ = 1;
  std::vector<Rational> coeffs_;
};

/// Equivalent to CyclotomicNumber::root_of_unity.
inline CyclotomicNumber root_of_unity(std::int64_t exponent, std::int64_t order) {
  return CyclotomicNumber::root_of_unity(exponent, order);
}

}  // namespace gerbe

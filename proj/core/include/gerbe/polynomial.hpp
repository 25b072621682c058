#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gerbe/rational.hpp"

namespace gerbe {

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// lowest degree first. The zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  /// x^n - 1
  static IntPolynomial x_pow_minus_one(std::int64_t n);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int i) const;
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  /// Exact division by a monic divisor; throws std::domain_error if a remainder is left.
  IntPolynomial divide_exact(const IntPolynomial& monic_divisor) const;

  /// e.g. "x^2 - x + 1"
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// The N-th cyclotomic polynomial. Rejects N < 1. Results are cached.
const IntPolynomial& cyclotomic_polynomial(std::int64_t n);

/// Positive divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Euler's totient, by trial factorisation. Rejects n < 1.
std::int64_t euler_totient(std::int64_t n);

}  // namespace gerbe

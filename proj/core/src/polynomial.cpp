#include "gerbe/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace gerbe {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::x_pow_minus_one(std::int64_t n) {
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
  c.front() = -1;
  c.back() += 1;
  return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& d) const {
  if (!d.is_monic()) throw std::domain_error("divide_exact: divisor must be monic");
  if (degree() < d.degree()) {
    if (coeffs_.empty()) return {};
    throw std::domain_error("divide_exact: nonzero remainder");
  }
  std::vector<BigInt> rem = coeffs_;
  std::vector<BigInt> quot(static_cast<std::size_t>(degree() - d.degree() + 1), BigInt(0));
  const auto dd = static_cast<std::size_t>(d.degree());
  for (std::size_t k = rem.size(); k-- > dd;) {
    const BigInt lead = rem[k];
    if (lead == 0) continue;
    quot[k - dd] = lead;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= lead * d.coeffs_[j];
  }
  for (std::size_t j = 0; j < dd; ++j) {
    if (rem[j] != 0) throw std::domain_error("divide_exact: nonzero remainder");
  }
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    BigInt c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool neg = c < 0;
    BigInt mag = neg ? BigInt(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

const IntPolynomial& cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be >= 1");
  static std::mutex mutex;
  static std::map<std::int64_t, std::unique_ptr<IntPolynomial>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  IntPolynomial acc = IntPolynomial::x_pow_minus_one(n);
  for (auto d : divisors(n)) {
    if (d == n) break;
    acc = acc.divide_exact(cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::make_unique<IntPolynomial>(std::move(acc)));
  return *it->second;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisors: argument must be >= 1");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t euler_totient(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("euler_totient: argument must be >= 1");
  std::int64_t result = n;
  std::int64_t m = n;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace gerbe

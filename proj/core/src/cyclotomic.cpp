#include "gerbe/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

#include "gerbe/polynomial.hpp"

namespace gerbe {

namespace {

void require_order(std::int64_t order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
}

// Folds exponents mod N (x^N = 1), then reduces modulo Phi_N.
std::vector<Rational> reduce(std::int64_t order, std::span<const Rational> terms) {
  const auto n = static_cast<std::size_t>(order);
  std::vector<Rational> folded(n);
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (!terms[j].is_zero()) folded[j % n] += terms[j];
  }
  const auto& phi = cyclotomic_polynomial(order);
  const auto deg = static_cast<std::size_t>(phi.degree());
  for (std::size_t k = folded.size(); k-- > deg;) {
    if (folded[k].is_zero()) continue;
    const Rational lead = folded[k];
    for (std::size_t j = 0; j < deg; ++j) {
      const auto& c = phi.coeffs()[j];
      if (c != 0) folded[k - deg + j] -= lead * Rational(c);
    }
    folded[k] = Rational();
  }
  folded.resize(deg);
  return folded;
}

}  // namespace

CyclotomicNumber::CyclotomicNumber() : order_(1), coeffs_(1) {}

CyclotomicNumber::CyclotomicNumber(std::int64_t order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {}

CyclotomicNumber::CyclotomicNumber(const Rational& q, std::int64_t order) : order_(order) {
  require_order(order);
  coeffs_.assign(static_cast<std::size_t>(euler_totient(order)), Rational());
  coeffs_.front() = q;
}

CyclotomicNumber CyclotomicNumber::from_coefficients(std::int64_t order, std::vector<Rational> coeffs) {
  require_order(order);
  if (static_cast<std::int64_t>(coeffs.size()) != euler_totient(order)) {
    throw std::invalid_argument("cyclotomic coefficient list must have length phi(order)");
  }
  return CyclotomicNumber(order, std::move(coeffs));
}

CyclotomicNumber CyclotomicNumber::from_power_sum(std::int64_t order, std::span<const Rational> terms) {
  require_order(order);
  return CyclotomicNumber(order, reduce(order, terms));
}

CyclotomicNumber CyclotomicNumber::root_of_unity(std::int64_t exponent, std::int64_t order) {
  require_order(order);
  std::vector<Rational> terms(static_cast<std::size_t>(mod64(exponent, order)) + 1);
  terms.back() = Rational(1);
  return from_power_sum(order, terms);
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

CyclotomicNumber CyclotomicNumber::embed(std::int64_t target) const {
  require_order(target);
  if (target % order_ != 0) throw std::invalid_argument("embed: target order must be a multiple");
  if (target == order_) return *this;
  const auto step = static_cast<std::size_t>(target / order_);
  std::vector<Rational> terms(coeffs_.empty() ? 1 : (coeffs_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) terms[i * step] = coeffs_[i];
  return from_power_sum(target, terms);
}

CyclotomicNumber CyclotomicNumber::conj() const {
  const auto n = static_cast<std::size_t>(order_);
  std::vector<Rational> terms(n);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) terms[(n - i) % n] = coeffs_[i];
  return from_power_sum(order_, terms);
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  auto out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  const auto common = lcm64(order_, rhs.order_);
  if (common != order_) *this = embed(common);
  const auto& other = rhs.order_ == common ? rhs : rhs.embed(common);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) { return *this += -rhs; }

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
  const auto common = lcm64(order_, rhs.order_);
  const auto lhs = order_ == common ? *this : embed(common);
  const auto other = rhs.order_ == common ? rhs : rhs.embed(common);
  std::vector<Rational> prod(lhs.coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (!other.coeffs_[j].is_zero()) prod[i + j] += lhs.coeffs_[i] * other.coeffs_[j];
    }
  }
  *this = from_power_sum(common, prod);
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("CyclotomicNumber: division by zero");
  for (auto& c : coeffs_) c /= rhs;
  return *this;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const auto common = lcm64(a.order_, b.order_);
  return a.embed(common).coeffs_ == b.embed(common).coeffs_;
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << coeffs_[i];
    } else {
      if (coeffs_[i] != Rational(1)) os << coeffs_[i] << '*';
      os << "z";
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  if (order_ > 2) os << " (z = zeta_" << order_ << ')';
  return os.str();
}

}  // namespace gerbe

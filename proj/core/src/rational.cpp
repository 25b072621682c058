#include "gerbe/rational.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace gerbe {

namespace {

static_assert(sizeof(long) == sizeof(std::int64_t), "mpz_class(long) must hold int64_t");

BigInt from_i64(std::int64_t v) { return BigInt(static_cast<long>(v)); }

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational::Rational(std::int64_t n) : value_(from_i64(n)) {}

Rational::Rational(const BigInt& n) : value_(n) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(from_i64(num), from_i64(den)) {}

Rational Rational::frac() const { return *this - Rational(floor()); }

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  if (num_text[0] == '+') num_text.remove_prefix(1);
  BigInt num{std::string(num_text)};
  if (slash == std::string_view::npos) return Rational(num);
  auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text) || den_text[0] == '-' || den_text[0] == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  BigInt den{std::string(den_text)};
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rational rpow(const BigInt& base, long exp) {
  if (exp >= 0) return Rational(ipow(base, static_cast<unsigned long>(exp)));
  if (base == 0) throw std::domain_error("rpow: zero to a negative power");
  return Rational(BigInt(1), ipow(base, static_cast<unsigned long>(-exp)));
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t mod64(std::int64_t a, std::int64_t m) {
  auto r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace gerbe

#include "cubic_orbit/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cubic_orbit/errors.hpp"

namespace cubic_orbit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

[[noreturn]] void bad_literal(std::string_view literal) {
  throw std::invalid_argument("malformed rational literal '" + std::string(literal) + "'");
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw DivisionByZero("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
  if (sgn(value_.get_den()) == 0) throw DivisionByZero("zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view literal) {
  std::string_view body = literal;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }

  mpz_class num;
  mpz_class den = 1;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto lhs = body.substr(0, slash);
    const auto rhs = body.substr(slash + 1);
    if (!all_digits(lhs) || !all_digits(rhs)) bad_literal(literal);
    num.set_str(std::string(lhs), 10);
    den.set_str(std::string(rhs), 10);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      bad_literal(literal);
    }
    num.set_str(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  } else {
    if (!all_digits(body)) bad_literal(literal);
    num.set_str(std::string(body), 10);
  }
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(value_.get_den(), value_.get_num());
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

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
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  if (mpz_perfect_square_p(x.num().get_mpz_t()) == 0 ||
      mpz_perfect_square_p(x.den().get_mpz_t()) == 0) {
    return std::nullopt;
  }
  return Rational(mpz_class(sqrt(x.num())), mpz_class(sqrt(x.den())));
}

double log10_abs(const mpz_class& n) {
  if (sgn(n) == 0) return -std::numeric_limits<double>::infinity();
  long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log10(std::fabs(mantissa)) + static_cast<double>(exp2) * std::log10(2.0);
}

std::uint64_t decimal_digits(const mpz_class& n) {
  if (sgn(n) == 0) return 1;
  // mpz_sizeinbase may overshoot by one.
  std::uint64_t digits = mpz_sizeinbase(n.get_mpz_t(), 10);
  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 10, digits - 1);
  if (mpz_cmpabs(n.get_mpz_t(), bound.get_mpz_t()) < 0) --digits;
  return digits;
}

}  // namespace cubic_orbit

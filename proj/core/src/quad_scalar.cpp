#include "cubic_orbit/quad_scalar.hpp"

#include <stdexcept>

#include "cubic_orbit/errors.hpp"

namespace cubic_orbit {

QuadScalar::QuadScalar(Rational p, Rational q, Rational radicand)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(radicand)) {
  if (is_rational_square(d_)) {
    throw std::invalid_argument("radicand " + d_.to_string() + " is a rational square");
  }
}

QuadScalar::QuadScalar(Unchecked, Rational p, Rational q, Rational radicand)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(radicand)) {}

QuadScalar QuadScalar::embed(const Rational& p, const Rational& radicand) {
  return QuadScalar(p, Rational(0), radicand);
}

QuadScalar QuadScalar::root(const Rational& radicand) {
  return QuadScalar(Rational(0), Rational(1), radicand);
}

Rational QuadScalar::to_rational() const {
  if (!q_.is_zero()) {
    throw std::domain_error("value " + to_string() + " has a nonzero sqrt component");
  }
  return p_;
}

Rational QuadScalar::norm() const { return p_ * p_ - q_ * q_ * d_; }

QuadScalar QuadScalar::conj() const { return QuadScalar(Unchecked{}, p_, -q_, d_); }

QuadScalar QuadScalar::inverse() const {
  const Rational n = norm();
  // D is not a square, so the norm vanishes only at zero.
  if (n.is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt(" + d_.to_string() + "))");
  return QuadScalar(Unchecked{}, p_ / n, -q_ / n, d_);
}

QuadScalar QuadScalar::pow(std::uint64_t n) const {
  QuadScalar result = embed(Rational(1), d_);
  QuadScalar base = *this;
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return result;
}

int QuadScalar::sign() const {
  const int sp = p_.sign();
  const int sq = q_.sign();
  if (sq == 0) return sp;
  if (d_.sign() < 0) throw std::domain_error("sign of a non-real element");
  if (sp == 0 || sp == sq) return sq;
  // p and q*sqrt(D) have opposite signs: the larger square wins.
  const auto c = p_ * p_ <=> q_ * q_ * d_;
  if (c == 0) return 0;
  return (c > 0) ? sp : sq;
}

std::string QuadScalar::to_string() const {
  return p_.to_string() + (q_.sign() < 0 ? " - " : " + ") + q_.abs().to_string() + "*sqrt(" +
         d_.to_string() + ")";
}

QuadScalar QuadScalar::operator-() const { return QuadScalar(Unchecked{}, -p_, -q_, d_); }

void QuadScalar::require_same_field(const QuadScalar& other) const {
  if (d_ != other.d_) {
    throw std::invalid_argument("mixed radicands " + d_.to_string() + " and " + other.d_.to_string());
  }
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& rhs) {
  require_same_field(rhs);
  p_ += rhs.p_;
  q_ += rhs.q_;
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& rhs) {
  require_same_field(rhs);
  p_ -= rhs.p_;
  q_ -= rhs.q_;
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& rhs) {
  require_same_field(rhs);
  Rational p = p_ * rhs.p_ + q_ * rhs.q_ * d_;
  Rational q = p_ * rhs.q_ + q_ * rhs.p_;
  p_ = std::move(p);
  q_ = std::move(q);
  return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

QuadScalar& QuadScalar::operator+=(const Rational& rhs) {
  p_ += rhs;
  return *this;
}

QuadScalar& QuadScalar::operator-=(const Rational& rhs) {
  p_ -= rhs;
  return *this;
}

QuadScalar& QuadScalar::operator*=(const Rational& rhs) {
  p_ *= rhs;
  q_ *= rhs;
  return *this;
}

bool operator==(const QuadScalar& l, const QuadScalar& r) {
  l.require_same_field(r);
  return l.p_ == r.p_ && l.q_ == r.q_;
}

QuadScalar quad_add(const QuadScalar& x, const QuadScalar& y) { return x + y; }
QuadScalar quad_mul(const QuadScalar& x, const QuadScalar& y) { return x * y; }
QuadScalar quad_inv(const QuadScalar& x) { return x.inverse(); }
QuadScalar quad_conj(const QuadScalar& x) { return x.conj(); }

}  // namespace cubic_orbit

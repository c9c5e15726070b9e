#pragma once

#include <cstdint>
#include <string>

#include "cubic_orbit/rational.hpp"

namespace cubic_orbit {

/**
 * Element p + q*sqrt(D) of the quadratic extension Q(sqrt(D)).
 *
 * D is a fixed non-square rational and may be negative; all arithmetic is
 * formal through sqrt(D)^2 = D, so complex conjugate pairs need no floating
 * point. Mixing operands with different radicands throws std::invalid_argument.
 */
class QuadScalar {
 public:
  /// Throws std::invalid_argument when `radicand` is the square of a rational.
  QuadScalar(Rational p, Rational q, Rational radicand);

  /// p + 0*sqrt(D).
  static QuadScalar embed(const Rational& p, const Rational& radicand);
  /// sqrt(D) itself.
  static QuadScalar root(const Rational& radicand);

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const Rational& radicand() const { return d_; }

  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
  bool is_rational() const { return q_.is_zero(); }
  /// Throws std::domain_error when the sqrt(D) component is nonzero.
  Rational to_rational() const;

  /// p^2 - q^2 D.
  Rational norm() const;
  QuadScalar conj() const;
  /// Throws DivisionByZero for zero.
  QuadScalar inverse() const;
  QuadScalar pow(std::uint64_t n) const;

  /// Sign as a real number; requires D > 0 unless the value is rational.
  int sign() const;

  std::string to_string() const;

  QuadScalar operator-() const;
  QuadScalar& operator+=(const QuadScalar& rhs);
  QuadScalar& operator-=(const QuadScalar& rhs);
  QuadScalar& operator*=(const QuadScalar& rhs);
  QuadScalar& operator/=(const QuadScalar& rhs);
  QuadScalar& operator+=(const Rational& rhs);
  QuadScalar& operator-=(const Rational& rhs);
  QuadScalar& operator*=(const Rational& rhs);

  friend QuadScalar operator+(QuadScalar l, const QuadScalar& r) { return l += r; }
  friend QuadScalar operator-(QuadScalar l, const QuadScalar& r) { return l -= r; }
  friend QuadScalar operator*(QuadScalar l, const QuadScalar& r) { return l *= r; }
  friend QuadScalar operator/(QuadScalar l, const QuadScalar& r) { return l /= r; }
  friend QuadScalar operator+(QuadScalar l, const Rational& r) { return l += r; }
  friend QuadScalar operator+(const Rational& l, QuadScalar r) { return r += l; }
  friend QuadScalar operator-(QuadScalar l, const Rational& r) { return l -= r; }
  friend QuadScalar operator-(const Rational& l, const QuadScalar& r) { return -r + l; }
  friend QuadScalar operator*(QuadScalar l, const Rational& r) { return l *= r; }
  friend QuadScalar operator*(const Rational& l, QuadScalar r) { return r *= l; }

  friend bool operator==(const QuadScalar& l, const QuadScalar& r);

 private:
  struct Unchecked {};
  QuadScalar(Unchecked, Rational p, Rational q, Rational radicand);
  void require_same_field(const QuadScalar& other) const;

  Rational p_;
  Rational q_;
  Rational d_;
};

inline QuadScalar inverse(const QuadScalar& x) { return x.inverse(); }

QuadScalar quad_add(const QuadScalar& x, const QuadScalar& y);
QuadScalar quad_mul(const QuadScalar& x, const QuadScalar& y);
QuadScalar quad_inv(const QuadScalar& x);
QuadScalar quad_conj(const QuadScalar& x);

}  // namespace cubic_orbit

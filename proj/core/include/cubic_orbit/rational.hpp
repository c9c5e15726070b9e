#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace cubic_orbit {

/// Default ceiling on decimal digits produced by any single expansion.
inline constexpr std::uint64_t kDefaultDigitBudget = 1'000'000;

/**
 * Exact rational number backed by GMP.
 *
 * Always kept in canonical form: positive denominator, numerator and
 * denominator coprime, zero stored as 0/1.
 */
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      value_ = static_cast<long>(value);
    } else {
      value_ = static_cast<unsigned long>(value);
    }
  }

  /// Throws DivisionByZero when `den` is zero.
  Rational(const mpz_class& num, const mpz_class& den);

  explicit Rational(const mpq_class& value);

  /**
   * Parses "-3/7", "42" or an exact decimal such as "-0.25".
   * Throws std::invalid_argument on malformed input and DivisionByZero on a zero denominator.
   */
  static Rational parse(std::string_view literal);

  const mpz_class& num() const { return value_.get_num(); }
  const mpz_class& den() const { return value_.get_den(); }
  const mpq_class& get() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  /// Throws DivisionByZero for zero.
  Rational inverse() const;

  /// "p/q", or "p" when q = 1.
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

inline Rational inverse(const Rational& x) { return x.inverse(); }

/// Nonnegative square root when `x` is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& x);

inline bool is_rational_square(const Rational& x) { return rational_sqrt(x).has_value(); }

/// log10 |n|; -inf for zero.
double log10_abs(const mpz_class& n);

/// Decimal digit count of |n| (1 for zero), exact.
std::uint64_t decimal_digits(const mpz_class& n);

}  // namespace cubic_orbit

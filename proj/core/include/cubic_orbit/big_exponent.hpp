#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "cubic_orbit/rational.hpp"

namespace cubic_orbit {

/// Nonnegative arbitrary-precision exponent.
class BigExponent {
 public:
  BigExponent() = default;
  BigExponent(std::uint64_t value);  // NOLINT(google-explicit-constructor)
  /// Throws std::invalid_argument for a negative value.
  explicit BigExponent(mpz_class value);

  const mpz_class& value() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_odd() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }
  bool fits_ulong() const { return value_.fits_ulong_p(); }
  double to_double() const { return value_.get_d(); }
  std::string to_string() const { return value_.get_str(); }

  friend BigExponent operator+(const BigExponent& l, const BigExponent& r) {
    return BigExponent(mpz_class(l.value_ + r.value_));
  }
  friend BigExponent operator*(const BigExponent& l, const BigExponent& r) {
    return BigExponent(mpz_class(l.value_ * r.value_));
  }
  friend bool operator==(const BigExponent& l, const BigExponent& r) { return l.value_ == r.value_; }
  friend std::strong_ordering operator<=>(const BigExponent& l, const BigExponent& r) {
    const int c = cmp(l.value_, r.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class value_{0};
};

/// 3^n.
BigExponent three_pow(std::uint64_t n);

/// (3^n - 1) / 2, the exponent of a constant coefficient after n cubing steps.
BigExponent geometric_exponent(std::uint64_t n);

/// ((3^(2n) - 1) / 8, (3^(2n+1) - 3) / 8): exponents of the two-step
/// coefficient in the even and odd antitrace terms.
std::pair<BigExponent, BigExponent> antitrace_exponents(std::uint64_t n);

/// Estimated decimal digits of base^exp, counting numerator and denominator.
double estimate_pow_digits(const Rational& base, const BigExponent& exp);

/**
 * Exact base^exp with 0^0 = 1.
 * Throws DigitBudgetExceeded when the estimated size exceeds `digit_budget`.
 */
Rational pow_rational(const Rational& base, const BigExponent& exp,
                      std::uint64_t digit_budget = kDefaultDigitBudget);

}  // namespace cubic_orbit

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubic_orbit/big_exponent.hpp"
#include "cubic_orbit/rational.hpp"

namespace cubic_orbit {

struct Factor {
  Rational base;
  BigExponent exp;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/**
 * A value kept as sign * prod(base^exp) without expanding it.
 *
 * Orbit terms carry exponents like 3^n, so their expanded digit count grows
 * exponentially in n; this form lets them be built and compared cheaply.
 * Bases are nonzero, never 1, and exponents are never 0. A base of -1 is
 * folded into the sign. Zero is sign 0 with no factors.
 */
class FactoredValue {
 public:
  /// The value 1.
  FactoredValue() = default;
  /// Throws std::invalid_argument for a zero base or a sign outside {-1, 0, 1}.
  FactoredValue(int sign, std::vector<Factor> factors);

  static FactoredValue zero() { return FactoredValue(0, {}); }
  static FactoredValue from_rational(const Rational& value);
  static FactoredValue power(const Rational& base, const BigExponent& exp);

  int sign() const { return sign_; }
  const std::vector<Factor>& factors() const { return factors_; }
  bool is_zero() const { return sign_ == 0; }

  /// Sign of the denoted number, accounting for negative bases with odd exponents.
  int value_sign() const;

  /// Positive bases, equal bases merged, sorted by base.
  FactoredValue normalized() const;

  FactoredValue pow(const BigExponent& exp) const;

  /// Upper estimate of decimal digits of the expanded numerator plus denominator.
  double estimated_digits() const;

  /// Throws DigitBudgetExceeded when the estimate exceeds `digit_budget`.
  Rational expand(std::uint64_t digit_budget = kDefaultDigitBudget) const;

  /// e.g. "-1 * 2^81 * (3/2)^2"; "0" for zero and "1" for the empty product.
  std::string to_string() const;

  friend FactoredValue operator*(const FactoredValue& l, const FactoredValue& r);
  friend FactoredValue operator*(const FactoredValue& l, const Rational& r) {
    return l * FactoredValue::from_rational(r);
  }

  /// Structural equality of the stored representation; see factored_equal for value equality.
  friend bool operator==(const FactoredValue&, const FactoredValue&) = default;

 private:
  int sign_ = 1;
  std::vector<Factor> factors_;
};

Rational factored_expand(const FactoredValue& value,
                         std::uint64_t digit_budget = kDefaultDigitBudget);

/**
 * Exact value equality without expansion.
 *
 * Splits every base into integer numerator and denominator, refines the
 * combined set into pairwise coprime integers, and checks that the quotient
 * of the two values has all-zero exponents in that basis.
 */
bool factored_equal(const FactoredValue& lhs, const FactoredValue& rhs);

inline bool factored_equal(const FactoredValue& lhs, const Rational& rhs) {
  return factored_equal(lhs, FactoredValue::from_rational(rhs));
}

}  // namespace cubic_orbit

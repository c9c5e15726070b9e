#include "cubic_orbit/big_exponent.hpp"

#include <cmath>
#include <stdexcept>

#include "cubic_orbit/errors.hpp"

namespace cubic_orbit {

DigitBudgetExceeded::DigitBudgetExceeded(double estimated_digits, std::uint64_t budget)
    : Error("expansion needs about " +
            (std::isfinite(estimated_digits) ? std::to_string(static_cast<std::uint64_t>(estimated_digits))
                                             : std::string("unbounded")) +
            " decimal digits, budget is " + std::to_string(budget)),
      estimated_(estimated_digits),
      budget_(budget) {}

TrivialSolutionEncountered::TrivialSolutionEncountered(std::uint64_t witness)
    : Error("solution is eventually trivial (witness n = " + std::to_string(witness) + ")"),
      witness_(witness) {}

UnknownWithinHorizon::UnknownWithinHorizon(std::uint64_t horizon)
    : Error("zero-set membership undecided within horizon " + std::to_string(horizon)),
      horizon_(horizon) {}

BigExponent::BigExponent(std::uint64_t value) {
  mpz_import(value_.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
}

BigExponent::BigExponent(mpz_class value) : value_(std::move(value)) {
  if (sgn(value_) < 0) throw std::invalid_argument("negative exponent");
}

BigExponent three_pow(std::uint64_t n) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 3, n);
  return BigExponent(std::move(out));
}

BigExponent geometric_exponent(std::uint64_t n) {
  mpz_class out = three_pow(n).value() - 1;
  mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), 2);
  return BigExponent(std::move(out));
}

std::pair<BigExponent, BigExponent> antitrace_exponents(std::uint64_t n) {
  const mpz_class nine_n = three_pow(2 * n).value();
  mpz_class even = nine_n - 1;
  mpz_class odd = 3 * nine_n - 3;
  mpz_divexact_ui(even.get_mpz_t(), even.get_mpz_t(), 8);
  mpz_divexact_ui(odd.get_mpz_t(), odd.get_mpz_t(), 8);
  return {BigExponent(std::move(even)), BigExponent(std::move(odd))};
}

double estimate_pow_digits(const Rational& base, const BigExponent& exp) {
  if (exp.is_zero() || base.is_zero()) return 1.0;
  const double per_unit = std::max(0.0, log10_abs(base.num())) + std::max(0.0, log10_abs(base.den()));
  return exp.to_double() * per_unit + 2.0;
}

Rational pow_rational(const Rational& base, const BigExponent& exp, std::uint64_t digit_budget) {
  if (exp.is_zero()) return Rational(1);
  if (base.is_zero()) return Rational(0);
  if (base == Rational(1)) return base;
  if (base == Rational(-1)) return exp.is_odd() ? base : Rational(1);

  const double estimate = estimate_pow_digits(base, exp);
  if (estimate > static_cast<double>(digit_budget) || !exp.fits_ulong()) {
    throw DigitBudgetExceeded(estimate, digit_budget);
  }
  const unsigned long e = exp.value().get_ui();
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), e);
  return Rational(num, den);
}

}  // namespace cubic_orbit

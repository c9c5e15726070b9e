#include "cubic_orbit/factored_value.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "cubic_orbit/errors.hpp"

namespace cubic_orbit {

namespace {

struct SignedPower {
  mpz_class base;  // > 1
  mpz_class exp;   // any sign
};

void push_integer(std::vector<SignedPower>& items, const mpz_class& value, const mpz_class& exp) {
  if (value > 1 && sgn(exp) != 0) items.push_back({value, exp});
}

void merge_equal_bases(std::vector<SignedPower>& items) {
  std::sort(items.begin(), items.end(),
            [](const SignedPower& l, const SignedPower& r) { return cmp(l.base, r.base) < 0; });
  std::vector<SignedPower> merged;
  for (auto& item : items) {
    if (!merged.empty() && merged.back().base == item.base) {
      merged.back().exp += item.exp;
    } else {
      merged.push_back(std::move(item));
    }
  }
  std::erase_if(merged, [](const SignedPower& p) { return sgn(p.exp) == 0; });
  items = std::move(merged);
}

// Factor refinement: rewrite until bases are pairwise coprime. Each split
// strictly lowers the product of the bases, so the loop terminates.
void refine_coprime(std::vector<SignedPower>& items) {
  for (;;) {
    merge_equal_bases(items);
    bool split = false;
    for (std::size_t i = 0; i < items.size() && !split; ++i) {
      for (std::size_t j = i + 1; j < items.size() && !split; ++j) {
        mpz_class g = gcd(items[i].base, items[j].base);
        if (g == 1) continue;
        SignedPower first = std::move(items[i]);
        SignedPower second = std::move(items[j]);
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(j));
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(i));
        push_integer(items, mpz_class(first.base / g), first.exp);
        push_integer(items, mpz_class(second.base / g), second.exp);
        push_integer(items, g, mpz_class(first.exp + second.exp));
        split = true;
      }
    }
    if (!split) return;
  }
}

void append_rational(std::vector<SignedPower>& items, const Rational& base, const mpz_class& exp) {
  push_integer(items, abs(base.num()), exp);
  push_integer(items, base.den(), mpz_class(-exp));
}

}  // namespace

FactoredValue::FactoredValue(int sign, std::vector<Factor> factors) : sign_(sign) {
  if (sign < -1 || sign > 1) throw std::invalid_argument("sign must be -1, 0 or 1");
  if (sign_ == 0) return;
  for (auto& f : factors) {
    if (f.base.is_zero()) throw std::invalid_argument("zero base in factored value");
    if (f.exp.is_zero() || f.base == Rational(1)) continue;
    if (f.base == Rational(-1)) {
      if (f.exp.is_odd()) sign_ = -sign_;
      continue;
    }
    factors_.push_back(std::move(f));
  }
}

FactoredValue FactoredValue::from_rational(const Rational& value) {
  if (value.is_zero()) return zero();
  return FactoredValue(value.sign(), {{value.abs(), BigExponent(1)}});
}

FactoredValue FactoredValue::power(const Rational& base, const BigExponent& exp) {
  if (exp.is_zero()) return FactoredValue();
  if (base.is_zero()) return zero();
  return FactoredValue(1, {{base, exp}});
}

int FactoredValue::value_sign() const {
  int s = sign_;
  for (const auto& f : factors_) {
    if (f.base.sign() < 0 && f.exp.is_odd()) s = -s;
  }
  return s;
}

FactoredValue FactoredValue::normalized() const {
  if (sign_ == 0) return zero();
  std::vector<Factor> positive;
  positive.reserve(factors_.size());
  for (const auto& f : factors_) positive.push_back({f.base.abs(), f.exp});
  std::sort(positive.begin(), positive.end(),
            [](const Factor& l, const Factor& r) { return l.base < r.base; });
  std::vector<Factor> merged;
  for (auto& f : positive) {
    if (!merged.empty() && merged.back().base == f.base) {
      merged.back().exp = merged.back().exp + f.exp;
    } else {
      merged.push_back(std::move(f));
    }
  }
  return FactoredValue(value_sign(), std::move(merged));
}

FactoredValue FactoredValue::pow(const BigExponent& exp) const {
  if (exp.is_zero()) return FactoredValue();
  if (sign_ == 0) return zero();
  std::vector<Factor> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back({f.base, f.exp * exp});
  const int s = (sign_ < 0 && exp.is_odd()) ? -1 : 1;
  return FactoredValue(s, std::move(out));
}

double FactoredValue::estimated_digits() const {
  if (sign_ == 0) return 1.0;
  double total = 2.0;
  for (const auto& f : factors_) total += estimate_pow_digits(f.base, f.exp);
  return total;
}

Rational FactoredValue::expand(std::uint64_t digit_budget) const {
  if (sign_ == 0) return Rational(0);
  const double estimate = estimated_digits();
  if (estimate > static_cast<double>(digit_budget)) throw DigitBudgetExceeded(estimate, digit_budget);
  Rational out(sign_);
  for (const auto& f : factors_) out *= pow_rational(f.base, f.exp, digit_budget);
  return out;
}

std::string FactoredValue::to_string() const {
  if (sign_ == 0) return "0";
  std::string out = sign_ < 0 ? "-1" : "";
  for (const auto& f : factors_) {
    if (!out.empty()) out += " * ";
    const std::string base = f.base.to_string();
    const bool wrap = !f.base.is_integer() || f.base.sign() < 0;
    out += wrap ? "(" + base + ")" : base;
    out += "^" + f.exp.to_string();
  }
  return out.empty() ? "1" : out;
}

FactoredValue operator*(const FactoredValue& l, const FactoredValue& r) {
  if (l.sign_ == 0 || r.sign_ == 0) return FactoredValue::zero();
  std::vector<Factor> out = l.factors_;
  out.insert(out.end(), r.factors_.begin(), r.factors_.end());
  return FactoredValue(l.sign_ * r.sign_, std::move(out));
}

Rational factored_expand(const FactoredValue& value, std::uint64_t digit_budget) {
  return value.expand(digit_budget);
}

bool factored_equal(const FactoredValue& lhs, const FactoredValue& rhs) {
  const int ls = lhs.value_sign();
  if (ls != rhs.value_sign()) return false;
  if (ls == 0) return true;

  std::vector<SignedPower> items;
  for (const auto& f : lhs.factors()) append_rational(items, f.base, f.exp.value());
  for (const auto& f : rhs.factors()) append_rational(items, f.base, mpz_class(-f.exp.value()));
  refine_coprime(items);
  return items.empty();
}

}  // namespace cubic_orbit

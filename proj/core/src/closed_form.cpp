#include "cubic_orbit/closed_form.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cubic_orbit/big_exponent.hpp"
#include "cubic_orbit/errors.hpp"

namespace cubic_orbit {

namespace {

void require(bool ok, const char* routine, const SystemParams& p) {
  if (!ok) {
    throw CaseMismatch(std::string(routine) + " called for a " + std::string(to_string(classify(p))) +
                       " matrix");
  }
}

double term_digits(const Rational& r) {
  return static_cast<double>(decimal_digits(r.num()) + decimal_digits(r.den()));
}

// x0^(3^n) * prod_{k<n} base_k^(3^(n-k-1)), the solution of x_{k+1} = base_k x_k^3.
FactoredValue cubic_product(const Rational& x0, std::span<const Rational> bases, std::uint64_t n) {
  FactoredValue out = FactoredValue::power(x0, three_pow(n));
  for (std::uint64_t k = 0; k < n; ++k) {
    if (bases[k].is_zero()) return FactoredValue::zero();
    out = out * FactoredValue::power(bases[k], three_pow(n - k - 1));
  }
  return out;
}

Rational cubic_coefficient(const SystemParams& p, const Rational& r) { return p.a * r + p.b * r * r; }

OrbitTerm initial_term(const InitialPair& init) {
  return {0, FactoredValue::from_rational(init.x0), FactoredValue::from_rational(init.y0)};
}

// Ratios r_0..r_n, stopping with the witness at the first zero of u_k or v_k.
template <class RatioAt>
std::vector<Rational> ratios_through(std::uint64_t n, RatioAt&& ratio_at) {
  std::vector<Rational> out;
  out.reserve(n + 1);
  for (std::uint64_t k = 0; k <= n; ++k) {
    Rational r = ratio_at(k);  // throws on u_k = 0
    if (r.is_zero()) throw TrivialSolutionEncountered(k);
    out.push_back(std::move(r));
  }
  return out;
}

OrbitTerm from_ratios(const SystemParams& p, const InitialPair& init, const std::vector<Rational>& ratios,
                      std::uint64_t n) {
  std::vector<Rational> bases;
  bases.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) bases.push_back(cubic_coefficient(p, ratios[k]));
  FactoredValue x = cubic_product(init.x0, bases, n);
  FactoredValue y = x * ratios[n];
  return {n, std::move(x), std::move(y)};
}

}  // namespace

CoeffSequence::CoeffSequence(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (std::any_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); })) {
    throw std::invalid_argument("coefficient sequence must be nonzero");
  }
}

std::vector<OrbitTerm> iterate_direct(const SystemParams& p, const InitialPair& init, std::uint64_t n,
                                      std::uint64_t digit_budget) {
  const double coeff_digits =
      std::max({term_digits(p.a), term_digits(p.b), term_digits(p.c), term_digits(p.d)});
  std::vector<OrbitTerm> out;
  out.reserve(n + 1);
  Rational x = init.x0;
  Rational y = init.y0;
  out.push_back(initial_term(init));
  for (std::uint64_t k = 1; k <= n; ++k) {
    const double estimate = 3.0 * std::max(term_digits(x), term_digits(y)) + coeff_digits + 2.0;
    if (estimate > static_cast<double>(digit_budget)) throw DigitBudgetExceeded(estimate, digit_budget);
    const Rational xy = x * y;
    Rational next_x = xy * (p.a * x + p.b * y);
    Rational next_y = xy * (p.c * x + p.d * y);
    x = std::move(next_x);
    y = std::move(next_y);
    out.push_back({k, FactoredValue::from_rational(x), FactoredValue::from_rational(y)});
  }
  return out;
}

FactoredValue cubic_coeff_solve(const CoeffSequence& seq, const Rational& x0, std::uint64_t n) {
  if (n > seq.size()) throw std::invalid_argument("n exceeds the coefficient sequence length");
  return cubic_product(x0, seq.coeffs(), n);
}

OrbitTerm solve_rank_deficient(const SystemParams& p, const InitialPair& init, std::uint64_t n) {
  require(p.determinant().is_zero(), "solve_rank_deficient", p);
  if (p.degenerate()) throw DegenerateParameters();
  if (const auto v = z0_member(p, init); v.member()) throw TrivialSolutionEncountered(*v.witness);
  if (n == 0) return initial_term(init);

  // Rows are proportional: (c, d) = t (a, b), and y_{k+1} = t x_{k+1}.
  const Rational t = p.a.is_zero() ? p.d / p.b : p.c / p.a;
  const Rational first = p.a * init.x0 * init.x0 * init.y0 + p.b * init.x0 * init.y0 * init.y0;
  const Rational k = cubic_coefficient(p, t);
  FactoredValue x = FactoredValue::power(first, three_pow(n - 1)) *
                    FactoredValue::power(k, geometric_exponent(n - 1));
  FactoredValue y = x * t;
  return {n, std::move(x), std::move(y)};
}

OrbitTerm solve_distinct(const SystemParams& p, const InitialPair& init, std::uint64_t n) {
  require(!p.determinant().is_zero() && !p.discriminant().is_zero(), "solve_distinct", p);
  if (p.degenerate()) throw DegenerateParameters();
  const RatioConstants constants = ratio_constants(p, init);
  const auto ratios = ratios_through(n, [&](std::uint64_t k) { return ratio_from_constants(constants, k); });
  return from_ratios(p, init, ratios, n);
}

OrbitTerm solve_repeated(const SystemParams& p, const InitialPair& init, std::uint64_t n) {
  require(!p.determinant().is_zero() && p.discriminant().is_zero(), "solve_repeated", p);
  if (p.degenerate()) throw DegenerateParameters();
  const RatioConstants constants = ratio_constants(p, init);
  const auto ratios = ratios_through(n, [&](std::uint64_t k) { return ratio_from_constants(constants, k); });
  return from_ratios(p, init, ratios, n);
}

OrbitTerm solve_antitrace(const SystemParams& p, const InitialPair& init, std::uint64_t n) {
  require(!p.determinant().is_zero() && !p.discriminant().is_zero() && p.trace().is_zero(),
          "solve_antitrace", p);
  if (p.degenerate()) throw DegenerateParameters();
  if (const auto v = z3_member(p, init); v.member()) throw TrivialSolutionEncountered(*v.witness);

  const auto [even_ratio, odd_ratio] = antitrace_ratios(p, init);
  const Rational r0 = cubic_coefficient(p, even_ratio);
  const Rational r1 = cubic_coefficient(p, odd_ratio);
  const Rational two_step = r1 * r0 * r0 * r0;
  const auto [even_exp, odd_exp] = antitrace_exponents(n / 2);

  FactoredValue x = FactoredValue::power(init.x0, three_pow(n));
  if (n % 2 == 0) {
    x = x * FactoredValue::power(two_step, even_exp);
    FactoredValue y = x * even_ratio;
    return {n, std::move(x), std::move(y)};
  }
  x = x * r0 * FactoredValue::power(two_step, odd_exp);
  FactoredValue y = x * odd_ratio;
  return {n, std::move(x), std::move(y)};
}

OrbitTerm reconstruct_general(const SystemParams& p, const InitialPair& init, std::uint64_t n) {
  FactoredValue product;
  for (std::uint64_t k = 0; k < n; ++k) {
    const LinearState s = linear_orbit(p, init, k);
    const Rational uv = s.u * s.v;
    if (uv.is_zero()) throw TrivialSolutionEncountered(k);
    product = product * FactoredValue::power(uv, three_pow(n - 1 - k));
  }
  const LinearState last = linear_orbit(p, init, n);
  return {n, product * last.u, product * last.v};
}

OrbitTerm solve_case(const SystemParams& p, const InitialPair& init, std::uint64_t n) {
  switch (classify(p)) {
    case CaseTag::RankDeficient:
      return solve_rank_deficient(p, init, n);
    case CaseTag::Repeated:
      return solve_repeated(p, init, n);
    case CaseTag::AntiTraceDistinct:
      return solve_antitrace(p, init, n);
    case CaseTag::Distinct:
      break;
  }
  return solve_distinct(p, init, n);
}

SolveResult solve(const SystemParams& p, const InitialPair& init, std::uint64_t n, std::uint64_t horizon) {
  const ZeroSetVerdict verdict = zero_set_member(p, init, horizon);
  if (verdict.member()) return TrivialReport{verdict, *verdict.witness};
  if (verdict.status == ZeroSetStatus::UnknownWithinHorizon && n >= horizon) {
    throw UnknownWithinHorizon(horizon);
  }
  return solve_case(p, init, n);
}

}  // namespace cubic_orbit

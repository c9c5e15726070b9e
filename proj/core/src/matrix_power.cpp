#include "cubic_orbit/matrix_power.hpp"

#include <string>

#include "cubic_orbit/big_exponent.hpp"
#include "cubic_orbit/detail/eigen_field.hpp"
#include "cubic_orbit/errors.hpp"

namespace cubic_orbit {

namespace {

void require_case(const SystemParams& p, bool ok, std::string_view routine) {
  if (!ok) {
    throw CaseMismatch(std::string(routine) + " called for a " + std::string(to_string(classify(p))) +
                       " matrix");
  }
}

Rational unbudgeted_pow(const Rational& base, std::uint64_t n) {
  return pow_rational(base, BigExponent(n), UINT64_MAX);
}

}  // namespace

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::RankDeficient:
      return "rank-deficient";
    case CaseTag::Repeated:
      return "repeated";
    case CaseTag::Distinct:
      return "distinct";
    case CaseTag::AntiTraceDistinct:
      return "antitrace-distinct";
  }
  return "unknown";
}

CaseTag classify(const SystemParams& p) {
  if (p.determinant().is_zero()) return CaseTag::RankDeficient;
  if (p.discriminant().is_zero()) return CaseTag::Repeated;
  if (p.trace().is_zero()) return CaseTag::AntiTraceDistinct;
  return CaseTag::Distinct;
}

Eigenpair eigenvalues(const SystemParams& p) {
  const Rational disc = p.discriminant();
  const Rational half_trace = p.trace() / Rational(2);
  Eigenpair out{disc, Rational(0), Rational(0), p.determinant().is_zero()};
  if (const auto root = rational_sqrt(disc)) {
    const Rational half_root = *root / Rational(2);
    out.lambda1 = half_trace + half_root;
    out.lambda2 = half_trace - half_root;
  } else {
    const Rational half(1, 2);
    out.lambda1 = QuadScalar(half_trace, half, disc);
    out.lambda2 = QuadScalar(half_trace, -half, disc);
  }
  return out;
}

Mat2 power_rank_deficient(const SystemParams& p, std::uint64_t n) {
  require_case(p, p.determinant().is_zero(), "power_rank_deficient");
  if (n == 0) return Mat2::identity();
  // 0^0 = 1 keeps n = 1 equal to A in the nilpotent subcase.
  return coefficient_matrix(p).scaled(unbudgeted_pow(p.trace(), n - 1));
}

Mat2 power_distinct(const SystemParams& p, std::uint64_t n) {
  require_case(p, !p.determinant().is_zero() && !p.discriminant().is_zero(), "power_distinct");
  if (n == 0) return Mat2::identity();
  return detail::with_eigenvalues(eigenvalues(p), [&](const auto& l1, const auto& l2) {
    const auto e = detail::putzer_entries(p, l1, l2, n);
    return Mat2{detail::certify_rational(e[0]), detail::certify_rational(e[1]),
                detail::certify_rational(e[2]), detail::certify_rational(e[3])};
  });
}

QuadMat2 power_distinct_extended(const SystemParams& p, std::uint64_t n) {
  require_case(p, !p.determinant().is_zero() && !p.discriminant().is_zero(), "power_distinct_extended");
  const Eigenpair eig = eigenvalues(p);
  if (eig.rational()) throw std::invalid_argument("discriminant is a rational square");
  const auto e = detail::putzer_entries(p, std::get<QuadScalar>(eig.lambda1),
                                        std::get<QuadScalar>(eig.lambda2), n);
  return {e[0], e[1], e[2], e[3]};
}

Mat2 power_repeated(const SystemParams& p, std::uint64_t n) {
  require_case(p, !p.determinant().is_zero() && p.discriminant().is_zero(), "power_repeated");
  if (n == 0) return Mat2::identity();
  const Rational mu = p.trace() / Rational(2);
  const Rational half_gap = (p.a - p.d) / Rational(2);
  const Rational k(n);
  const Mat2 inner{mu + k * half_gap, p.b * k, p.c * k, mu - k * half_gap};
  return inner.scaled(unbudgeted_pow(mu, n - 1));
}

Mat2 power_antitrace(const SystemParams& p, std::uint64_t n) {
  require_case(p,
               !p.determinant().is_zero() && !p.discriminant().is_zero() && p.trace().is_zero(),
               "power_antitrace");
  const Rational scale = unbudgeted_pow(p.a * p.a + p.b * p.c, n / 2);
  return (n % 2 == 0) ? Mat2::identity().scaled(scale) : coefficient_matrix(p).scaled(scale);
}

Mat2 power(const SystemParams& p, std::uint64_t n) {
  switch (classify(p)) {
    case CaseTag::RankDeficient:
      return power_rank_deficient(p, n);
    case CaseTag::Repeated:
      return power_repeated(p, n);
    case CaseTag::AntiTraceDistinct:
      return power_antitrace(p, n);
    case CaseTag::Distinct:
      break;
  }
  return power_distinct(p, n);
}

}  // namespace cubic_orbit

#include "cubic_orbit/linearization.hpp"

#include <stdexcept>

#include "cubic_orbit/detail/eigen_field.hpp"
#include "cubic_orbit/errors.hpp"

namespace cubic_orbit {

namespace {

RepeatedConstants repeated_constants(const SystemParams& p, const InitialPair& init) {
  const Rational two(2);
  return {p.trace() / two * init.x0, (p.a - p.d) / two * init.x0 + p.b * init.y0,
          p.trace() / two * init.y0, p.c * init.x0 + (p.d - p.a) / two * init.y0};
}

template <class F>
Rational evaluate(const DistinctConstants<F>& k, std::uint64_t n) {
  const F l1n = detail::field_pow(k.lambda1, n);
  const F l2n = detail::field_pow(k.lambda2, n);
  const F den = k.k1 * l1n - k.k2 * l2n;
  if (detail::is_zero(den)) throw TrivialSolutionEncountered(n);
  return detail::certify_rational((k.k3 * l1n - k.k4 * l2n) / den);
}

Rational evaluate(const RepeatedConstants& k, std::uint64_t n) {
  const Rational m(n);
  const Rational den = k.c1 + k.c2 * m;
  if (den.is_zero()) throw TrivialSolutionEncountered(n);
  return (k.c3 + k.c4 * m) / den;
}

}  // namespace

LinearState linear_orbit(const SystemParams& p, const InitialPair& init, std::uint64_t n) {
  const Mat2 m = power(p, n);
  return {n, m.m11 * init.x0 + m.m12 * init.y0, m.m21 * init.x0 + m.m22 * init.y0};
}

LinearState linear_step(const SystemParams& p, const LinearState& s) {
  return {s.n + 1, p.a * s.u + p.b * s.v, p.c * s.u + p.d * s.v};
}

std::pair<QuadScalar, QuadScalar> linear_orbit_extended(const SystemParams& p, const InitialPair& init,
                                                        std::uint64_t n) {
  const QuadMat2 m = power_distinct_extended(p, n);
  return {m.m11 * init.x0 + m.m12 * init.y0, m.m21 * init.x0 + m.m22 * init.y0};
}

Rational ratio(const SystemParams& p, const InitialPair& init, std::uint64_t n) {
  const LinearState s = linear_orbit(p, init, n);
  if (s.u.is_zero()) throw TrivialSolutionEncountered(n);
  return s.v / s.u;
}

std::pair<Rational, Rational> antitrace_ratios(const SystemParams& p, const InitialPair& init) {
  if (!p.trace().is_zero()) throw CaseMismatch("antitrace_ratios requires a + d = 0");
  if (init.x0.is_zero()) throw TrivialSolutionEncountered(0);
  const Rational u1 = p.a * init.x0 + p.b * init.y0;
  if (u1.is_zero()) throw TrivialSolutionEncountered(1);
  return {init.y0 / init.x0, (p.c * init.x0 + p.d * init.y0) / u1};
}

RatioConstants ratio_constants(const SystemParams& p, const InitialPair& init) {
  if (p.determinant().is_zero()) throw CaseMismatch("ratio constants need ad - bc != 0");
  if (p.discriminant().is_zero()) return repeated_constants(p, init);
  return detail::with_eigenvalues(eigenvalues(p), [&](const auto& l1, const auto& l2) -> RatioConstants {
    using F = std::decay_t<decltype(l1)>;
    return DistinctConstants<F>{l1,
                                l2,
                                (p.a - l2) * init.x0 + p.b * init.y0,
                                (p.a - l1) * init.x0 + p.b * init.y0,
                                p.c * init.x0 + (p.d - l2) * init.y0,
                                p.c * init.x0 + (p.d - l1) * init.y0};
  });
}

std::optional<RatioConstants> divided_ratio_constants(const SystemParams& p, const InitialPair& init) {
  if (p.determinant().is_zero()) throw CaseMismatch("ratio constants need ad - bc != 0");
  if (p.discriminant().is_zero()) return RatioConstants(repeated_constants(p, init));
  if (p.b.is_zero()) return std::nullopt;
  return detail::with_eigenvalues(
      eigenvalues(p), [&](const auto& l1, const auto& l2) -> std::optional<RatioConstants> {
        using F = std::decay_t<decltype(l1)>;
        const F g1 = l1 - p.a;
        const F g2 = l2 - p.a;
        if (detail::is_zero(g1) || detail::is_zero(g2)) return std::nullopt;
        const F scale = inverse(l1 - l2);
        return RatioConstants(DistinctConstants<F>{
            l1, l2, scale * p.b * (p.c * inverse(g1) * init.x0 + init.y0),
            scale * p.b * (p.c * inverse(g2) * init.x0 + init.y0), scale * (p.c * init.x0 + g1 * init.y0),
            scale * (p.c * init.x0 + g2 * init.y0)});
      });
}

Rational ratio_from_constants(const RatioConstants& constants, std::uint64_t n) {
  return std::visit([n](const auto& k) { return evaluate(k, n); }, constants);
}

}  // namespace cubic_orbit

#include "cubic_orbit/zero_sets.hpp"

#include <algorithm>
#include <string>

#include "cubic_orbit/detail/eigen_field.hpp"
#include "cubic_orbit/errors.hpp"

namespace cubic_orbit {

namespace {

void require(bool ok, const char* routine, const SystemParams& p) {
  if (!ok) {
    throw CaseMismatch(std::string(routine) + " called for a " + std::string(to_string(classify(p))) +
                       " matrix");
  }
}

template <class F>
F real_abs(const F& x) {
  return detail::real_sign(x) < 0 ? F(-x) : x;
}

template <class F>
int real_compare(const F& l, const F& r) {
  return detail::real_sign(F(l - r));
}

// Every n with |l1/l2|^n = target lies below the returned bound. `rho` != 1.
template <class F>
std::uint64_t crossover_bound(const F& rho, const F& target) {
  F one = rho / rho;
  const bool growing = real_compare(rho, one) > 0;
  std::uint64_t n = 0;
  F power = one;
  while (growing ? real_compare(power, target) <= 0 : real_compare(power, target) >= 0) {
    ++n;
    power = power * rho;
  }
  return n;
}

// Bound for one row k_first l1^n - k_second l2^n = 0.
template <class F>
std::uint64_t row_bound(const F& rho, const F& k_first, const F& k_second) {
  // With one coefficient zero the row never vanishes (eigenvalues are nonzero);
  // with both zero it vanishes at n = 0 already.
  if (detail::is_zero(k_first) || detail::is_zero(k_second)) return 1;
  return crossover_bound(rho, real_abs(F(k_second / k_first)));
}

// Least n < limit with u_n = 0 or v_n = 0.
std::optional<std::uint64_t> scan_linear(const SystemParams& p, const InitialPair& init,
                                         std::uint64_t limit) {
  LinearState s{0, init.x0, init.y0};
  for (std::uint64_t n = 0; n < limit; ++n) {
    if (s.u.is_zero() || s.v.is_zero()) return n;
    s = linear_step(p, s);
  }
  return std::nullopt;
}

bool is_scalar(const Mat2& m) { return m.m12.is_zero() && m.m21.is_zero() && m.m11 == m.m22; }

// Least nonnegative integer root of c + g*n = 0, if any.
std::optional<std::uint64_t> linear_root(const Rational& c, const Rational& g) {
  if (g.is_zero()) return c.is_zero() ? std::optional<std::uint64_t>(0) : std::nullopt;
  const Rational root = -c / g;
  if (!root.is_integer() || root.sign() < 0 || !root.num().fits_ulong_p()) return std::nullopt;
  return root.num().get_ui();
}

}  // namespace

std::string_view to_string(ZeroSetStatus status) {
  switch (status) {
    case ZeroSetStatus::Member:
      return "member";
    case ZeroSetStatus::NonMember:
      return "non-member";
    case ZeroSetStatus::UnknownWithinHorizon:
      return "unknown";
  }
  return "unknown";
}

ZeroSetVerdict z0_member(const SystemParams& p, const InitialPair& init) {
  require(p.determinant().is_zero(), "z0_member", p);
  if (init.x0.is_zero() || init.y0.is_zero()) return ZeroSetVerdict::member_at(0);
  const LinearState one = linear_step(p, {0, init.x0, init.y0});
  if (one.u.is_zero() || one.v.is_zero()) return ZeroSetVerdict::member_at(1);
  // A^2 = (a + d) A, so A^2 = 0 when the trace vanishes; otherwise u_n is a nonzero multiple of u_1.
  if (p.trace().is_zero()) return ZeroSetVerdict::member_at(2);
  return ZeroSetVerdict::non_member();
}

ZeroSetVerdict z1_member(const SystemParams& p, const InitialPair& init, std::uint64_t horizon) {
  require(!p.determinant().is_zero() && !p.discriminant().is_zero() && !p.trace().is_zero(), "z1_member",
          p);
  if (init.x0.is_zero() || init.y0.is_zero()) return ZeroSetVerdict::member_at(0);

  if (p.discriminant().sign() > 0) {
    const auto constants = ratio_constants(p, init);
    const std::uint64_t limit = std::visit(
        [](const auto& k) -> std::uint64_t {
          if constexpr (std::is_same_v<std::decay_t<decltype(k)>, RepeatedConstants>) {
            return 0;
          } else {
            const auto rho = real_abs(decltype(k.lambda1)(k.lambda1 / k.lambda2));
            return std::max(row_bound(rho, k.k1, k.k2), row_bound(rho, k.k3, k.k4));
          }
        },
        constants);
    if (const auto w = scan_linear(p, init, limit)) return ZeroSetVerdict::member_at(*w);
    return ZeroSetVerdict::non_member();
  }

  // Complex pair: l1/l2 has modulus one. If it is a root of unity then some
  // A^k is scalar and zeros repeat with period k.
  for (std::uint64_t k : {3, 4, 6}) {
    if (is_scalar(power(p, k))) {
      if (const auto w = scan_linear(p, init, k)) return ZeroSetVerdict::member_at(*w);
      return ZeroSetVerdict::non_member();
    }
  }
  if (const auto w = scan_linear(p, init, horizon + 1)) return ZeroSetVerdict::member_at(*w);
  return ZeroSetVerdict::unknown(horizon);
}

ZeroSetVerdict z2_member(const SystemParams& p, const InitialPair& init) {
  require(!p.determinant().is_zero() && p.discriminant().is_zero(), "z2_member", p);
  const auto k = std::get<RepeatedConstants>(ratio_constants(p, init));
  // u_n = mu^(n-1) (c1 + c2 n) and v_n = mu^(n-1) (c3 + c4 n) with mu = (a + d)/2 != 0.
  const auto ru = linear_root(k.c1, k.c2);
  const auto rv = linear_root(k.c3, k.c4);
  if (ru && rv) return ZeroSetVerdict::member_at(std::min(*ru, *rv));
  if (ru) return ZeroSetVerdict::member_at(*ru);
  if (rv) return ZeroSetVerdict::member_at(*rv);
  return ZeroSetVerdict::non_member();
}

ZeroSetVerdict z3_member(const SystemParams& p, const InitialPair& init) {
  require(!p.determinant().is_zero() && !p.discriminant().is_zero() && p.trace().is_zero(), "z3_member",
          p);
  if (init.x0.is_zero() || init.y0.is_zero()) return ZeroSetVerdict::member_at(0);
  // A^2 = (a^2 + bc) I with a^2 + bc = -(ad - bc) != 0.
  const LinearState one = linear_step(p, {0, init.x0, init.y0});
  if (one.u.is_zero() || one.v.is_zero()) return ZeroSetVerdict::member_at(1);
  return ZeroSetVerdict::non_member();
}

ZeroSetVerdict zero_set_member(const SystemParams& p, const InitialPair& init, std::uint64_t horizon) {
  if (p.degenerate()) throw DegenerateParameters();
  switch (classify(p)) {
    case CaseTag::RankDeficient:
      return z0_member(p, init);
    case CaseTag::Repeated:
      return z2_member(p, init);
    case CaseTag::AntiTraceDistinct:
      return z3_member(p, init);
    case CaseTag::Distinct:
      break;
  }
  return z1_member(p, init, horizon);
}

}  // namespace cubic_orbit

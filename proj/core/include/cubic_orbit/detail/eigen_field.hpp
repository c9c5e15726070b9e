#pragma once

// Helpers that run the same code over Q or Q(sqrt(D)) depending on whether
// the eigenvalues are rational.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "cubic_orbit/big_exponent.hpp"
#include "cubic_orbit/matrix_power.hpp"
#include "cubic_orbit/quad_scalar.hpp"
#include "cubic_orbit/rational.hpp"

namespace cubic_orbit::detail {

inline Rational field_pow(const Rational& x, std::uint64_t n) {
  return pow_rational(x, BigExponent(n), UINT64_MAX);
}
inline QuadScalar field_pow(const QuadScalar& x, std::uint64_t n) { return x.pow(n); }

inline int real_sign(const Rational& x) { return x.sign(); }
inline int real_sign(const QuadScalar& x) { return x.sign(); }

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const QuadScalar& x) { return x.is_zero(); }

inline Rational certify_rational(const Rational& x) { return x; }
/// Throws std::logic_error if the sqrt(D) component survived.
inline Rational certify_rational(const QuadScalar& x) {
  if (!x.is_rational()) throw std::logic_error("nonzero sqrt component in a real quantity: " + x.to_string());
  return x.p();
}

/// Calls fn(lambda1, lambda2) with both eigenvalues in Q or in Q(sqrt(D)).
template <class Fn>
decltype(auto) with_eigenvalues(const Eigenpair& eig, Fn&& fn) {
  if (eig.rational()) {
    return std::forward<Fn>(fn)(std::get<Rational>(eig.lambda1), std::get<Rational>(eig.lambda2));
  }
  return std::forward<Fn>(fn)(std::get<QuadScalar>(eig.lambda1), std::get<QuadScalar>(eig.lambda2));
}

/// Entries of A^n from the eigenvalue formula with l1 != l2.
template <class F>
std::array<F, 4> putzer_entries(const SystemParams& p, const F& l1, const F& l2, std::uint64_t n) {
  const F l1n = field_pow(l1, n);
  const F l2n = field_pow(l2, n);
  const F inv = inverse(l1 - l2);
  const F diff = (l1n - l2n) * inv;
  return {((p.a - l2) * l1n - (p.a - l1) * l2n) * inv, p.b * diff, p.c * diff,
          ((p.d - l2) * l1n - (p.d - l1) * l2n) * inv};
}

}  // namespace cubic_orbit::detail

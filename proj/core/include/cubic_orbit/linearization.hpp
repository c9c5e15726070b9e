#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>

#include "cubic_orbit/matrix_power.hpp"
#include "cubic_orbit/quad_scalar.hpp"
#include "cubic_orbit/rational.hpp"

namespace cubic_orbit {

struct InitialPair {
  Rational x0;
  Rational y0;

  friend bool operator==(const InitialPair&, const InitialPair&) = default;
};

/// (u_n, v_n) = A^n (x0, y0), where u_n = x_n / prod_{k<n} x_k y_k and likewise v_n.
struct LinearState {
  std::uint64_t n = 0;
  Rational u;
  Rational v;

  friend bool operator==(const LinearState&, const LinearState&) = default;
};

/**
 * Coefficients of v_n/u_n = (k3 l1^n - k4 l2^n) / (k1 l1^n - k2 l2^n) for
 * distinct eigenvalues, over Q or Q(sqrt(D)).
 */
template <class F>
struct DistinctConstants {
  F lambda1;
  F lambda2;
  F k1, k2, k3, k4;
};

/// v_n/u_n = (c3 + c4 n) / (c1 + c2 n) for a repeated eigenvalue.
struct RepeatedConstants {
  Rational c1, c2, c3, c4;
};

using RatioConstants =
    std::variant<DistinctConstants<Rational>, DistinctConstants<QuadScalar>, RepeatedConstants>;

LinearState linear_orbit(const SystemParams& p, const InitialPair& init, std::uint64_t n);

/// One application of A.
LinearState linear_step(const SystemParams& p, const LinearState& s);

/// (u_n, v_n) over Q(sqrt(D)) before the sqrt(D) parts are discarded; requires a non-square D.
std::pair<QuadScalar, QuadScalar> linear_orbit_extended(const SystemParams& p, const InitialPair& init,
                                                        std::uint64_t n);

/// v_n / u_n from the orbit. Throws TrivialSolutionEncountered(n) when u_n = 0.
Rational ratio(const SystemParams& p, const InitialPair& init, std::uint64_t n);

/**
 * (y0/x0, (c x0 + d y0)/(a x0 + b y0)): the constant ratios at even and odd
 * indices when a + d = 0. Throws TrivialSolutionEncountered when a denominator vanishes.
 */
std::pair<Rational, Rational> antitrace_ratios(const SystemParams& p, const InitialPair& init);

/**
 * Ratio constants without any division by b or by (lambda - a):
 * k1 = (a - l2) x0 + b y0, k2 = (a - l1) x0 + b y0,
 * k3 = c x0 + (d - l2) y0, k4 = c x0 + (d - l1) y0.
 * Repeated-eigenvalue inputs yield RepeatedConstants. Throws CaseMismatch when ad - bc = 0.
 */
RatioConstants ratio_constants(const SystemParams& p, const InitialPair& init);

/**
 * The divided form C1..C4, using c/(lambda_i - a) and a leading factor b.
 * Empty when b = 0 or an eigenvalue equals a; agrees with ratio_constants elsewhere.
 */
std::optional<RatioConstants> divided_ratio_constants(const SystemParams& p, const InitialPair& init);

/// Evaluates the ratio at n. Throws TrivialSolutionEncountered(n) when the denominator vanishes.
Rational ratio_from_constants(const RatioConstants& constants, std::uint64_t n);

}  // namespace cubic_orbit

#pragma once

#include <cstdint>
#include <string_view>
#include <variant>

#include "cubic_orbit/quad_scalar.hpp"
#include "cubic_orbit/rational.hpp"

namespace cubic_orbit {

/// Coefficients of x' = a x^2 y + b x y^2, y' = c x^2 y + d x y^2, and of the matrix [[a, b], [c, d]].
struct SystemParams {
  Rational a;
  Rational b;
  Rational c;
  Rational d;

  Rational trace() const { return a + d; }
  Rational determinant() const { return a * d - b * c; }
  /// (a - d)^2 + 4bc.
  Rational discriminant() const { return (a - d) * (a - d) + Rational(4) * b * c; }
  /// a = b = 0 or c = d = 0.
  bool degenerate() const { return (a.is_zero() && b.is_zero()) || (c.is_zero() && d.is_zero()); }

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

enum class CaseTag { RankDeficient, Repeated, Distinct, AntiTraceDistinct };

/// "rank-deficient", "repeated", "distinct", "antitrace-distinct".
std::string_view to_string(CaseTag tag);

/// Precedence: ad - bc = 0, then discriminant = 0, then a + d = 0.
CaseTag classify(const SystemParams& p);

struct Mat2 {
  Rational m11, m12, m21, m22;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 zero() { return {0, 0, 0, 0}; }

  Mat2 scaled(const Rational& s) const { return {s * m11, s * m12, s * m21, s * m22}; }

  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.m11 * r.m11 + l.m12 * r.m21, l.m11 * r.m12 + l.m12 * r.m22,
            l.m21 * r.m11 + l.m22 * r.m21, l.m21 * r.m12 + l.m22 * r.m22};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

inline Mat2 coefficient_matrix(const SystemParams& p) { return {p.a, p.b, p.c, p.d}; }

/// Powers of A computed over Q(sqrt(D)) before the sqrt(D) parts are discarded.
struct QuadMat2 {
  QuadScalar m11, m12, m21, m22;
};

using EigenScalar = std::variant<Rational, QuadScalar>;

/// Eigenvalues ((a + d) +- sqrt(D)) / 2; rational whenever D is a rational square.
struct Eigenpair {
  Rational discriminant;
  EigenScalar lambda1;
  EigenScalar lambda2;
  /// Set for rank-deficient matrices, where the closed forms do not use the eigenvalues.
  bool informational = false;

  bool rational() const { return std::holds_alternative<Rational>(lambda1); }
};

Eigenpair eigenvalues(const SystemParams& p);

/// A^n when ad - bc = 0: identity for n = 0, else (a + d)^(n-1) A with 0^0 = 1.
Mat2 power_rank_deficient(const SystemParams& p, std::uint64_t n);
/// Putzer form over the eigenvalues; requires ad - bc != 0 and D != 0.
Mat2 power_distinct(const SystemParams& p, std::uint64_t n);
/// Requires ad - bc != 0 and D = 0.
Mat2 power_repeated(const SystemParams& p, std::uint64_t n);
/// Requires ad - bc != 0, D != 0, a + d = 0: A^(2m) = (a^2 + bc)^m I, A^(2m+1) = (a^2 + bc)^m A.
Mat2 power_antitrace(const SystemParams& p, std::uint64_t n);
/// Dispatches on classify(p).
Mat2 power(const SystemParams& p, std::uint64_t n);

/// Putzer entries of A^n kept in Q(sqrt(D)); requires D to be a non-square and ad - bc != 0.
QuadMat2 power_distinct_extended(const SystemParams& p, std::uint64_t n);

}  // namespace cubic_orbit

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "cubic_orbit/factored_value.hpp"
#include "cubic_orbit/linearization.hpp"
#include "cubic_orbit/matrix_power.hpp"
#include "cubic_orbit/zero_sets.hpp"

namespace cubic_orbit {

/// Term n of the cubic orbit, kept unexpanded.
struct OrbitTerm {
  std::uint64_t n = 0;
  FactoredValue x;
  FactoredValue y;
};

/// Coefficients a_0, ..., a_{m-1} of x_{k+1} = a_k x_k^3; all nonzero.
class CoeffSequence {
 public:
  /// Throws std::invalid_argument if any coefficient is zero.
  explicit CoeffSequence(std::vector<Rational> coeffs);

  std::span<const Rational> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

 private:
  std::vector<Rational> coeffs_;
};

/**
 * Terms 0..n by the literal recurrence in exact rationals. This is the
 * reference every closed form is checked against.
 * Throws DigitBudgetExceeded before a step whose result would exceed the budget.
 */
std::vector<OrbitTerm> iterate_direct(const SystemParams& p, const InitialPair& init, std::uint64_t n,
                                      std::uint64_t digit_budget = kDefaultDigitBudget);

/// x0^(3^n) * prod_{k<n} a_k^(3^(n-k-1)). Requires n <= seq.size().
FactoredValue cubic_coeff_solve(const CoeffSequence& seq, const Rational& x0, std::uint64_t n);

/**
 * ad - bc = 0 and a + d != 0. For n >= 1,
 * x_n = (a x0^2 y0 + b x0 y0^2)^(3^(n-1)) K^((3^(n-1)-1)/2), y_n = t x_n,
 * with t = c/a (or d/b when a = 0) and K = a t + b t^2.
 * Throws TrivialSolutionEncountered when the pair lies in the zero set,
 * which includes every pair when a + d = 0.
 */
OrbitTerm solve_rank_deficient(const SystemParams& p, const InitialPair& init, std::uint64_t n);

/// Distinct eigenvalues (a + d may vanish). Throws TrivialSolutionEncountered if u_k or v_k is zero for k <= n.
OrbitTerm solve_distinct(const SystemParams& p, const InitialPair& init, std::uint64_t n);

/// Repeated eigenvalue. Throws TrivialSolutionEncountered if u_k or v_k is zero for k <= n.
OrbitTerm solve_repeated(const SystemParams& p, const InitialPair& init, std::uint64_t n);

/// a + d = 0 with distinct eigenvalues; uses the two-step recurrence. Throws TrivialSolutionEncountered in Z3.
OrbitTerm solve_antitrace(const SystemParams& p, const InitialPair& init, std::uint64_t n);

/**
 * Second route: x_n = u_n P, y_n = v_n P with P = prod_{k<n} (u_k v_k)^(3^(n-1-k)).
 * Throws TrivialSolutionEncountered when some u_k v_k = 0 with k < n.
 */
OrbitTerm reconstruct_general(const SystemParams& p, const InitialPair& init, std::uint64_t n);

/// Returned by solve() for eventually trivial orbits: x_m = y_m = 0 for all m > witness.
struct TrivialReport {
  ZeroSetVerdict verdict;
  std::uint64_t witness = 0;
};

using SolveResult = std::variant<OrbitTerm, TrivialReport>;

/// The case solver for classify(p).
OrbitTerm solve_case(const SystemParams& p, const InitialPair& init, std::uint64_t n);

/**
 * Zero-set check followed by the case solver.
 * Throws DegenerateParameters, and UnknownWithinHorizon when membership is
 * undecided and n >= horizon (below the horizon the scan already rules out a zero).
 */
SolveResult solve(const SystemParams& p, const InitialPair& init, std::uint64_t n,
                  std::uint64_t horizon = kDefaultHorizon);

struct VerifyOptions {
  /// Rows up to this index compare expanded values against iterate_direct.
  std::uint64_t expand_depth = 6;
  std::uint64_t horizon = kDefaultHorizon;
  std::uint64_t digit_budget = kDefaultDigitBudget;
};

/**
 * Per-index comparison. Each optional is present only when the path was
 * evaluated: closed_form and reconstruct say whether that path matched the
 * reference (iterate_direct for expanded rows, the closed form otherwise);
 * iterate says whether the direct orbit is consistent with the zero-set verdict.
 */
struct VerificationRow {
  std::uint64_t n = 0;
  bool expanded = false;
  std::optional<bool> closed_form;
  std::optional<bool> reconstruct;
  std::optional<bool> iterate;

  bool ok() const { return closed_form.value_or(true) && reconstruct.value_or(true) && iterate.value_or(true); }
};

struct VerificationReport {
  SystemParams params;
  InitialPair init;
  CaseTag case_tag = CaseTag::Distinct;
  bool degenerate = false;
  std::optional<ZeroSetVerdict> verdict;
  std::vector<VerificationRow> rows;
  std::optional<std::uint64_t> first_divergence;

  bool all_agree() const { return !first_divergence.has_value(); }
};

VerificationReport verify(const SystemParams& p, const InitialPair& init, std::uint64_t max_n,
                          const VerifyOptions& options = {});

struct VerifyJob {
  SystemParams params;
  InitialPair init;
  std::uint64_t max_n = 6;
};

/// Runs verify() for every job on up to `threads` workers; results are in job order.
std::vector<VerificationReport> verify_all(std::span<const VerifyJob> jobs, const VerifyOptions& options = {},
                                           unsigned threads = 0);

}  // namespace cubic_orbit

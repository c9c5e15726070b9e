#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "cubic_orbit/closed_form.hpp"
#include "cubic_orbit/errors.hpp"

namespace cubic_orbit {

namespace {

struct Expanded {
  Rational x;
  Rational y;
};

// Longest prefix of the direct orbit that fits the digit budget.
std::vector<Expanded> expanded_orbit(const SystemParams& p, const InitialPair& init, std::uint64_t depth,
                                     std::uint64_t budget) {
  for (;;) {
    try {
      std::vector<Expanded> out;
      for (const auto& t : iterate_direct(p, init, depth, budget)) {
        out.push_back({t.x.expand(budget), t.y.expand(budget)});
      }
      return out;
    } catch (const DigitBudgetExceeded&) {
      if (depth == 0) return {};
      --depth;
    }
  }
}

template <class Fn>
std::optional<OrbitTerm> try_path(Fn&& fn) {
  try {
    return fn();
  } catch (const TrivialSolutionEncountered&) {
  } catch (const DegenerateParameters&) {
  } catch (const CaseMismatch&) {
  }
  return std::nullopt;
}

bool matches(const OrbitTerm& t, const Expanded& ref, std::uint64_t budget) {
  try {
    return t.x.expand(budget) == ref.x && t.y.expand(budget) == ref.y;
  } catch (const DigitBudgetExceeded&) {
    return factored_equal(t.x, ref.x) && factored_equal(t.y, ref.y);
  }
}

bool matches(const OrbitTerm& l, const OrbitTerm& r) {
  return factored_equal(l.x, r.x) && factored_equal(l.y, r.y);
}

// Whether the direct term at n is what the zero-set verdict predicts.
std::optional<bool> zero_pattern_consistent(const VerificationReport& report, std::uint64_t n,
                                            const Expanded& term) {
  const bool x_zero = term.x.is_zero();
  const bool y_zero = term.y.is_zero();
  if (report.degenerate) return n >= 2 ? x_zero && y_zero : true;
  const ZeroSetVerdict& v = *report.verdict;
  switch (v.status) {
    case ZeroSetStatus::Member: {
      const std::uint64_t w = *v.witness;
      if (n < w) return !x_zero && !y_zero;
      if (n == w) return x_zero || y_zero;
      return x_zero && y_zero;
    }
    case ZeroSetStatus::NonMember:
      return !x_zero && !y_zero;
    case ZeroSetStatus::UnknownWithinHorizon:
      if (n <= *v.horizon) return !x_zero && !y_zero;
      return std::nullopt;
  }
  return std::nullopt;
}

bool closed_form_expected(const VerificationReport& report, std::uint64_t n) {
  if (report.degenerate) return false;
  const ZeroSetVerdict& v = *report.verdict;
  if (v.status == ZeroSetStatus::NonMember) return true;
  return v.status == ZeroSetStatus::UnknownWithinHorizon && n <= *v.horizon;
}

}  // namespace

VerificationReport verify(const SystemParams& p, const InitialPair& init, std::uint64_t max_n,
                          const VerifyOptions& options) {
  VerificationReport report;
  report.params = p;
  report.init = init;
  report.case_tag = classify(p);
  report.degenerate = p.degenerate();
  if (!report.degenerate) report.verdict = zero_set_member(p, init, options.horizon);

  const auto direct =
      expanded_orbit(p, init, std::min(max_n, options.expand_depth), options.digit_budget);

  for (std::uint64_t n = 0; n <= max_n; ++n) {
    VerificationRow row;
    row.n = n;
    row.expanded = n < direct.size();

    const auto closed = try_path([&] { return solve_case(p, init, n); });
    const auto recon = try_path([&] { return reconstruct_general(p, init, n); });
    const bool expected = closed_form_expected(report, n);

    if (row.expanded) {
      const Expanded& ref = direct[n];
      row.iterate = zero_pattern_consistent(report, n, ref);
      if (closed) {
        row.closed_form = matches(*closed, ref, options.digit_budget);
      } else if (expected) {
        row.closed_form = false;
      }
      if (recon) {
        row.reconstruct = matches(*recon, ref, options.digit_budget);
      } else if (expected) {
        row.reconstruct = false;
      }
    } else {
      if (!closed && expected) row.closed_form = false;
      if (closed && recon) {
        row.reconstruct = matches(*recon, *closed);
      } else if (expected) {
        row.reconstruct = false;
      }
    }

    if (!row.ok() && !report.first_divergence) report.first_divergence = n;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<VerificationReport> verify_all(std::span<const VerifyJob> jobs, const VerifyOptions& options,
                                           unsigned threads) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(jobs.size(), 1));

  std::vector<VerificationReport> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
          try {
            results[i] = verify(jobs[i].params, jobs[i].init, jobs[i].max_n, options);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace cubic_orbit

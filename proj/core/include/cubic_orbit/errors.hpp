#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubic_orbit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Raised before an expansion whose estimated size exceeds the digit budget.
class DigitBudgetExceeded : public Error {
 public:
  DigitBudgetExceeded(double estimated_digits, std::uint64_t budget);

  double estimated_digits() const noexcept { return estimated_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  double estimated_;
  std::uint64_t budget_;
};

/// A case-specific routine was called with parameters of another case.
class CaseMismatch : public Error {
 public:
  using Error::Error;
};

/// a = b = 0 or c = d = 0: the orbit is forced to zero and no closed form applies.
class DegenerateParameters : public Error {
 public:
  DegenerateParameters() : Error("degenerate parameters: a = b = 0 or c = d = 0") {}
};

/// The orbit is eventually trivial; `witness` is the least n with u_n = 0 or v_n = 0.
class TrivialSolutionEncountered : public Error {
 public:
  explicit TrivialSolutionEncountered(std::uint64_t witness);

  std::uint64_t witness() const noexcept { return witness_; }

 private:
  std::uint64_t witness_;
};

/// Zero-set membership could not be decided by scanning up to `horizon`.
class UnknownWithinHorizon : public Error {
 public:
  explicit UnknownWithinHorizon(std::uint64_t horizon);

  std::uint64_t horizon() const noexcept { return horizon_; }

 private:
  std::uint64_t horizon_;
};

}  // namespace cubic_orbit

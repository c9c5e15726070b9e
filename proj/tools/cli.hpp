#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubic_orbit/factored_value.hpp"
#include "cubic_orbit/rational.hpp"

namespace cubic_orbit::cli {

inline constexpr const char* kSchema = "cubic-orbit/1";
inline constexpr const char* kBudgetEnvVar = "CUBIC_ORBIT_DIGIT_BUDGET";

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // verify found a divergence, or an unexpected internal error
  kUsage = 2,
  kDegenerate = 3,
  kTrivial = 4,
  kBudget = 5,
  kUnknown = 6,
};

/// Runs one subcommand. `args` excludes the program name. When `env_budget`
/// is unset the CUBIC_ORBIT_DIGIT_BUDGET environment variable is consulted.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_budget = std::nullopt);

/// {"sign": s, "terms": ["base^exp", ...]} over the normalized form.
nlohmann::ordered_json factored_to_json(const FactoredValue& value);

}  // namespace cubic_orbit::cli

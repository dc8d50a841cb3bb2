#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "photonfield/scenario.hpp"

namespace photonfield {

struct CheckResult {
  std::string check;
  nlohmann::json params;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  double tolerance_scale = 1.0;
  /// Overrides the scenario seed when set.
  std::optional<std::uint64_t> seed;
};

struct Report {
  std::string scenario;
  std::uint64_t seed = 0;
  double tolerance_scale = 1.0;
  /// Sorted by check name.
  std::vector<CheckResult> checks;

  bool passed() const;
  nlohmann::json to_json() const;
};

/// Nominal tolerance of a registered check before scaling. Throws InvalidInput for an
/// unknown name.
double base_tolerance(const std::string& check);

/// Runs the scenario's checks (all registered checks when the list is empty). Each check
/// draws from its own generator seeded by (seed, check name), so results do not depend on
/// which other checks run. A check passes when residual <= tolerance.
/// PreconditionError and ResourceLimitError propagate to the caller.
Report run_checks(const Scenario& scenario, const VerifyOptions& options = {});

}  // namespace photonfield

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "photonfield/ensembles.hpp"
#include "photonfield/field_operators.hpp"
#include "photonfield/fock_space.hpp"

namespace photonfield {

/// Malformed or inconsistent scenario file. The message starts with the JSON path of the
/// offending field, e.g. `lattice.modes[2].n: ...`.
class ConfigError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

inline constexpr const char* kScenarioSchema = "photonfield.scenario/1";

struct StateSpec {
  enum class Kind { vacuum, number, coherent, coherent_product, coefficients };

  Kind kind = Kind::vacuum;
  std::vector<int> occupancies;  // number
  Complex alpha = 0.0;           // coherent
  ModeSpec mode;                 // coherent
  int cap = 0;                   // coherent
  std::vector<Complex> alphas;   // coherent_product, one per mode
  CoefficientMap coefficients;   // coefficients
};

/// Closed-form expectation grid: `count` times in [t_begin, t_end) at fixed r.
struct GridSpec {
  FieldKind field = FieldKind::E;
  Vec3 r = Vec3::Zero();
  double t_begin = 0.0;
  double t_end = 0.0;
  int count = 0;
};

struct ScanSpec {
  FieldKind field = FieldKind::E;
  std::vector<int> cutoffs;
};

/// Sample sizes and probe parameters of the verification checks.
struct SamplingSpec {
  int directions = 1000;
  int near_singular_directions = 10;
  int boosts = 1000;
  int point_pairs = 20;
  int random_states = 50;
  int random_points = 10;
  double fd_step = 1e-3;
  double later_time = 0.37;
  SpacetimePoint probe{Vec3(0.3, -0.2, 0.5), 0.1};
};

struct Scenario {
  std::string name;
  LatticeConfig lattice;
  StateSpec state;
  /// Empty means every registered check.
  std::vector<std::string> checks;
  std::optional<GridSpec> grid;
  std::optional<ScanSpec> vacuum_scan;
  SamplingSpec sampling;
  std::uint64_t seed = 0;
};

/// Parses and validates a scenario document. Unknown keys, wrong types, unknown check
/// names and modes outside the lattice all raise ConfigError.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

/// Names accepted in `checks`, sorted.
const std::vector<std::string>& registered_checks();

/// The scenario's state on `basis`.
FockState build_state(const FockBasis& basis, const StateSpec& spec);

}  // namespace photonfield

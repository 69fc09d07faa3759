#pragma once

#include "gridtf/config.hpp"

#include <iosfwd>

namespace gridtf {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;        // compliance / feasibility failure
inline constexpr int kExitConfigError = 2; // config or validation error

/// Validates the configured curve parameters against every grid-code and
/// device-level constraint. Writes validation.json; exit 0 iff feasible.
int cmd_validate(const ScenarioConfig& config, std::ostream& out);

/// Synthesizes the desired-behavior transfer functions and writes tdes.json.
/// Infeasible parameters are refused unless `force`.
int cmd_synth(const ScenarioConfig& config, bool force, std::ostream& out);

/// Simulates step responses, reference curves and the actuator loop for the
/// configured scenario and baselines; writes CSV trajectories.
int cmd_simulate(const ScenarioConfig& config, bool force, std::ostream& out);

/// Runs simulate + compliance for the synthesized scenario and the selected
/// baselines; writes reports and a summary table. Exit 0 iff the synthesized
/// scenario passes.
int cmd_check(const ScenarioConfig& config, bool force, std::ostream& out);

}  // namespace gridtf

#pragma once

#include "gridtf/compliance.hpp"
#include "gridtf/gridcode.hpp"
#include "gridtf/simulate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gridtf {

enum class AlphaMode { min_req, max_lim, explicit_values };

std::string to_string(AlphaMode mode);
AlphaMode alpha_mode_from_string(const std::string& s);

/// One scenario: grid code, device data, curve parameters, step sizes and
/// simulation/tolerance settings. Defaults reproduce the reference tables
/// with a -0.01 p.u. frequency and -0.05 p.u. voltage step over 60 s.
struct ScenarioConfig {
    GridCodeSpec grid_code;
    DeviceLimits device_limits;
    DeviceModel device_model;
    GainSpec gains;
    AlphaMode alpha_mode = AlphaMode::min_req;
    std::optional<AlphaParams> explicit_alpha;
    int order = 2;
    double frequency_step_pu = -0.01;
    double voltage_step_pu = -0.05;
    double horizon_s = 60.0;
    std::optional<double> dt;  // nullopt = automatic step selection
    ToleranceSpec tolerance;
    std::vector<std::string> baselines = {"vi-fast", "vi-slow"};
    std::string output_dir = "out";
    bool superimposed = true;
    std::optional<double> minreal_tol;  // reporting aid in the synth document

    /// Resolves the curve parameters for the configured mode.
    AlphaParams resolve_alpha() const;
};

/// Validates ranges and cross-field consistency; throws std::invalid_argument.
void validate_config(const ScenarioConfig& config);

/// Parses a JSON config document. Missing keys fall back to defaults;
/// unknown keys are rejected.
ScenarioConfig parse_config(const std::string& json_text);
ScenarioConfig load_config(const std::string& path);
std::string config_to_json(const ScenarioConfig& config);

}  // namespace gridtf

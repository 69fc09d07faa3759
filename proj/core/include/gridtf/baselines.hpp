#pragma once

#include "gridtf/simulate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gridtf {

/// The two filtered virtual-inertia/droop comparison cases: same droop gains
/// as the synthesized behavior, filter constants 0.1 s ("vi-fast") and 2 s
/// ("vi-slow").
std::vector<BaselineSpec> reference_baselines();

std::optional<BaselineSpec> baseline_by_name(const std::string& name);

}  // namespace gridtf

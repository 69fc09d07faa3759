#include "gridtf/baselines.hpp"

namespace gridtf {

std::vector<BaselineSpec> reference_baselines() {
    BaselineSpec fast{4.0, 0.06, 0.06, 0.1, "vi-fast"};
    BaselineSpec slow{4.0, 0.06, 0.06, 2.0, "vi-slow"};
    return {fast, slow};
}

std::optional<BaselineSpec> baseline_by_name(const std::string& name) {
    for (const auto& spec : reference_baselines())
        if (spec.name == name) return spec;
    return std::nullopt;
}

}  // namespace gridtf

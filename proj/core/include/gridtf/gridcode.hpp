#pragma once

#include "gridtf/curve.hpp"

#include <string>
#include <vector>

namespace gridtf {

/// Grid-code constants bounding the curve parameters. Defaults are
/// representative European/Nordic network-code values.
struct GridCodeSpec {
    double t_i_max_fcr = 2.0;
    double t_a_max_fcr = 30.0;
    double t_90_max_vq = 5.0;
    double t_100_max_vq = 60.0;
    double t_a_max_ffr = 2.0;
    double t_d_min_ffr = 8.0;
    double t_r_min_ffr = 10.0;
    double x_peak_ffr = 1.3;
};

/// Device-level limits of the reserve unit.
struct DeviceLimits {
    double r_max_p = 32.56;
    double r_max_q = 150.0;
    double t_d_max_ffr = 25.0;
    double t_r_max_ffr = 10.0;
    double m_max_p = 49.167;
};

void validate_grid_code(const GridCodeSpec& gc);
void validate_device_limits(const DeviceLimits& dev);

/// Non-fatal advisories, e.g. a support-duration floor that is not clearly
/// larger than the FFR activation bound.
std::vector<std::string> grid_code_warnings(const GridCodeSpec& gc);

/// The curve-shape parameter vector chosen by the reserve unit.
struct AlphaParams {
    double t_i_fcr = 0.0;
    double t_a_fcr = 0.0;
    double t_90_vq = 0.0;
    double t_100_vq = 0.0;
    double t_a_ffr = 0.0;
    double t_d_ffr = 0.0;
    double t_r_ffr = 0.0;
    double p_ffr_peak = 0.0;
};

/// Structural ordering only (t_i <= t_a etc.); feasibility against bounds is
/// validate_alpha's job.
void validate_alpha_structure(const AlphaParams& alpha);

struct Constraint {
    std::string id;       // "1a" ... "4b"
    std::string detail;   // human-readable inequality
    double value = 0.0;   // constrained quantity
    double lower = 0.0;   // lower bound (-inf when absent)
    double upper = 0.0;   // upper bound (+inf when absent)
    double slack = 0.0;   // min distance to a bound; >= 0 iff satisfied
    bool satisfied = false;
};

struct ViolationReport {
    std::vector<Constraint> constraints;
    bool feasible = false;

    const Constraint* find(const std::string& id) const;
};

/// Evaluates every grid-code and device-level inequality (1a-1c, 2a-2d,
/// 3a-3e, and 4a-4b when `superimposed` is set). Boundary equality counts as
/// satisfied; infeasibility is data, not an error.
ViolationReport validate_alpha(const AlphaParams& alpha, const GainSpec& gains,
                               const GridCodeSpec& gc, const DeviceLimits& dev,
                               bool superimposed);

/// Parameters meeting the minimum grid-code requirements exactly.
AlphaParams min_requirements_alpha(const GridCodeSpec& gc, const GainSpec& gains);

/// Parameters exploiting the maximum device-level limits; the FFR peak takes
/// the tighter of the headroom and exceedance caps.
AlphaParams max_limits_alpha(const GridCodeSpec& gc, const DeviceLimits& dev,
                             const GainSpec& gains);

}  // namespace gridtf

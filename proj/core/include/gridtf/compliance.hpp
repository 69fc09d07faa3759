#pragma once

#include "gridtf/gridcode.hpp"
#include "gridtf/simulate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gridtf {

/// Measurement tolerances for compliance checking, echoed into every report.
/// band and corridor are fractions of the relevant capacity; timing_s pads
/// every milestone deadline; kink_exclusion_s masks the corridor comparison
/// around curve kinks where rational approximations inevitably ripple;
/// dwell_samples debounces level crossings.
struct ToleranceSpec {
    double band = 0.02;
    double timing_s = 0.5;
    double corridor = 0.30;
    double kink_exclusion_s = 1.0;
    int dwell_samples = 5;
};

void validate_tolerance(const ToleranceSpec& tol);

/// Milestones measured from a trajectory against a target capacity.
/// Milestones that never occur are absent, not zero.
struct ResponseMetrics {
    std::optional<double> t_initial_response;  // first |y| >= band * capacity
    std::optional<double> t_reach_90;          // first y >= 0.9 * capacity, sustained
    std::optional<double> t_reach_100;         // first y >= capacity, sustained
    double peak_value = 0.0;
    double peak_time = 0.0;
    double hold_duration = 0.0;  // longest debounced run with y >= (1-band) * capacity
    double final_value = 0.0;
};

/// Crossings are interpolated linearly between samples and must be held for
/// dwell_samples consecutive samples to count.
ResponseMetrics measure_metrics(const Trajectory& traj, double capacity, double band,
                                int dwell_samples = 5);

struct CheckEntry {
    std::string id;
    std::string detail;
    double measured = 0.0;
    double bound = 0.0;
    double margin = 0.0;  // >= 0 iff pass
    bool pass = false;
};

struct ComplianceReport {
    std::string service;  // "fcr" | "ffr" | "vq"
    double capacity = 0.0;
    double step_magnitude = 0.0;
    ToleranceSpec tolerances;
    std::vector<CheckEntry> entries;
    bool pass = false;
};

/// FCR compliance of an active-power trajectory. With `superimposed` set the
/// trajectory carries the FFR provision too: milestone checks run on the
/// total (power delivered is power delivered) while the conformance corridor
/// compares the FCR share, i.e. the trajectory minus the ideal FFR curve
/// scaled by the step.
ComplianceReport check_fcr(const Trajectory& traj, const AlphaParams& alpha,
                           const GainSpec& gains, const GridCodeSpec& gc,
                           const ToleranceSpec& tol, bool superimposed);

/// Reactive-power compliance: 90%/100% activation deadlines plus settling.
ComplianceReport check_vq(const Trajectory& traj, const AlphaParams& alpha,
                          const GainSpec& gains, const GridCodeSpec& gc,
                          const ToleranceSpec& tol);

/// FFR compliance of an FFR-share trajectory (use ffr_residual first when the
/// measurement contains the FCR provision as well).
ComplianceReport check_ffr(const Trajectory& traj, const AlphaParams& alpha,
                           const GainSpec& gains, const GridCodeSpec& gc,
                           const DeviceLimits& dev, const ToleranceSpec& tol);

/// FFR share of a superimposed measurement: the FCR share at time t is taken
/// as the ideal FCR curve value, the rest is FFR.
Trajectory ffr_residual(const Trajectory& traj, const AlphaParams& alpha,
                        const GainSpec& gains);

}  // namespace gridtf

#pragma once

#include "gridtf/rational.hpp"
#include "gridtf/state_space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gridtf {

/// Uniformly sampled simulation output. samples[k] is the value at
/// t0 + k * dt.
struct Trajectory {
    double t0 = 0.0;
    double dt = 0.0;
    std::vector<double> samples;
    double step_magnitude = 0.0;
    std::string label;

    double end_time() const { return t0 + dt * static_cast<double>(samples.size() - 1); }
    double time_at(std::size_t k) const { return t0 + dt * static_cast<double>(k); }
};

void validate_trajectory(const Trajectory& traj);

/// Fixed-step classic Runge-Kutta step response: u = magnitude for t >= 0,
/// x(0) = 0. dt = nullopt picks min(0.1/|lambda|_max, t_end/2000); an
/// explicit dt with dt * |lambda|_max > 2.5 is rejected (outside the RK4
/// stability region).
Trajectory step_response(const StateSpace& ss, double magnitude, double t_end,
                         std::optional<double> dt = std::nullopt,
                         const std::string& label = "y");

/// Convenience overload realizing the transfer function first.
Trajectory step_response(const RationalTF& tf, double magnitude, double t_end,
                         std::optional<double> dt = std::nullopt,
                         const std::string& label = "y");

/// Samples a capability curve on the same grid as a simulated trajectory.
Trajectory sample_curve(const PiecewiseCurve& curve, double t_end, double dt,
                        const std::string& label = "curve");

/// Classical filtered droop / virtual-inertia specification.
struct BaselineSpec {
    double m = 0.0;      // virtual inertia
    double d_p = 0.06;   // active power droop
    double d_q = 0.06;   // reactive power droop
    double tau_f = 0.1;  // filter time constant
    std::string name;
};

void validate_baseline(const BaselineSpec& spec);

enum class Channel { fp, vq };

/// fp: (M s + 1/D_p) / (tau_f s + 1); vq: (1/D_q) / (tau_f s + 1). Stored
/// unsigned like the synthesized desired behavior.
RationalTF baseline_tf(const BaselineSpec& spec, Channel channel);

/// Reduced-order actuator path: PI power controller commanding a saturated
/// first-order primary source.
struct DeviceModel {
    double tau_dc = 0.5;   // primary-source lag
    double i_dc_sat = 1.2; // command ceiling
    double i_dc_0 = 0.9;   // pre-step operating point
    double kp_p = 20.0;
    double ki_p = 100.0;
};

void validate_device_model(const DeviceModel& dev);

struct TrackingResult {
    Trajectory achieved_power;  // plant output deviation from the operating point
    Trajectory i_dc_ref;        // clamped primary-source command
    bool saturated = false;     // clamp engaged at least once
};

/// Tracks r(t) = magnitude * (unit step response of `ref`) with a PI
/// controller driving 1/(tau_dc s + 1). The commanded current is
/// i_dc_0 + PI output clamped to [0, i_dc_sat]; the integrator freezes while
/// the clamp is active and the error pushes further into it.
TrackingResult simulate_tracking_loop(const RationalTF& ref, const DeviceModel& dev,
                                      double magnitude, double t_end);

}  // namespace gridtf

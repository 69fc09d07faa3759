#include "gridtf/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gridtf {

namespace {

constexpr double kMaxEigStep = 2.5;  // RK4 stability guard on dt * |lambda|_max

double auto_step(double lambda_max, double t_end) {
    double dt = t_end / 2000.0;
    if (lambda_max > 0.0) dt = std::min(dt, 0.1 / lambda_max);
    return dt;
}

}  // namespace

void validate_trajectory(const Trajectory& traj) {
    if (!(traj.dt > 0.0)) throw std::invalid_argument("trajectory needs dt > 0");
    if (traj.samples.empty()) throw std::invalid_argument("trajectory has no samples");
}

Trajectory step_response(const StateSpace& ss, double magnitude, double t_end,
                         std::optional<double> dt_opt, const std::string& label) {
    if (!(t_end > 0.0)) throw std::invalid_argument("step_response needs t_end > 0");
    const double lambda_max = max_eigenvalue_magnitude(ss);
    double dt = dt_opt.value_or(auto_step(lambda_max, t_end));
    if (!(dt > 0.0)) throw std::invalid_argument("step_response needs dt > 0");
    if (dt * lambda_max > kMaxEigStep)
        throw std::invalid_argument("step size too large for the fastest pole");

    const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
    dt = t_end / static_cast<double>(steps);

    Trajectory traj;
    traj.dt = dt;
    traj.step_magnitude = magnitude;
    traj.label = label;
    traj.samples.reserve(steps + 1);

    const int n = ss.order();
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    const Eigen::VectorXd bu = ss.B * magnitude;
    const double du = ss.D * magnitude;
    traj.samples.push_back(n > 0 ? ss.C * x + du : du);
    Eigen::VectorXd k1(n), k2(n), k3(n), k4(n);
    for (std::size_t step = 0; step < steps; ++step) {
        k1 = ss.A * x + bu;
        k2 = ss.A * (x + 0.5 * dt * k1) + bu;
        k3 = ss.A * (x + 0.5 * dt * k2) + bu;
        k4 = ss.A * (x + dt * k3) + bu;
        x += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        traj.samples.push_back(ss.C * x + du);
    }
    return traj;
}

Trajectory step_response(const RationalTF& tf, double magnitude, double t_end,
                         std::optional<double> dt, const std::string& label) {
    return step_response(to_state_space(tf), magnitude, t_end, dt, label);
}

Trajectory sample_curve(const PiecewiseCurve& curve, double t_end, double dt,
                        const std::string& label) {
    if (!(t_end > 0.0) || !(dt > 0.0)) throw std::invalid_argument("bad sampling window");
    Trajectory traj;
    traj.dt = dt;
    traj.label = label;
    traj.step_magnitude = 1.0;
    const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
    traj.samples.reserve(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k)
        traj.samples.push_back(curve_eval(curve, dt * static_cast<double>(k)));
    return traj;
}

void validate_baseline(const BaselineSpec& spec) {
    if (!(spec.tau_f > 0.0)) throw std::invalid_argument("baseline needs tau_f > 0");
    if (!(spec.d_p > 0.0) || !(spec.d_q > 0.0))
        throw std::invalid_argument("baseline droops must be positive");
    if (spec.m < 0.0) throw std::invalid_argument("baseline inertia must be nonnegative");
}

RationalTF baseline_tf(const BaselineSpec& spec, Channel channel) {
    validate_baseline(spec);
    if (channel == Channel::fp)
        return RationalTF::make(Polynomial({1.0 / spec.d_p, spec.m}), Polynomial({1.0, spec.tau_f}));
    return RationalTF::make(Polynomial({1.0 / spec.d_q}), Polynomial({1.0, spec.tau_f}));
}

void validate_device_model(const DeviceModel& dev) {
    if (!(dev.tau_dc > 0.0)) throw std::invalid_argument("device model needs tau_dc > 0");
    if (!(dev.i_dc_0 >= 0.0) || !(dev.i_dc_0 < dev.i_dc_sat))
        throw std::invalid_argument("device model needs 0 <= i_dc_0 < i_dc_sat");
}

TrackingResult simulate_tracking_loop(const RationalTF& ref, const DeviceModel& dev,
                                      double magnitude, double t_end) {
    validate_device_model(dev);
    if (!(t_end > 0.0)) throw std::invalid_argument("tracking loop needs t_end > 0");

    const StateSpace rss = to_state_space(ref);
    const int n = rss.order();

    // The PI loop closed over the lag plant is the fastest dynamics around;
    // include it in the step-size budget next to the reference poles.
    const double lambda_loop = (1.0 + dev.kp_p) / dev.tau_dc;
    const double lambda_max = std::max(max_eigenvalue_magnitude(rss), lambda_loop);
    double dt = auto_step(lambda_max, t_end);
    const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
    dt = t_end / static_cast<double>(steps);

    TrackingResult result;
    result.achieved_power.dt = dt;
    result.achieved_power.step_magnitude = magnitude;
    result.achieved_power.label = "dp_achieved";
    result.i_dc_ref.dt = dt;
    result.i_dc_ref.step_magnitude = magnitude;
    result.i_dc_ref.label = "i_dc_ref";

    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    double i_dc = dev.i_dc_0;
    double integ = 0.0;
    bool saturated = false;

    const Eigen::VectorXd bu = rss.B * magnitude;
    const double du = rss.D * magnitude;

    struct Deriv {
        Eigen::VectorXd dx;
        double di_dc;
        double dinteg;
        double cmd;
        bool clamped;
    };
    auto deriv = [&](const Eigen::VectorXd& xs, double idc_s, double integ_s) -> Deriv {
        const double r = (n > 0 ? rss.C * xs + du : du);
        const double dp = idc_s - dev.i_dc_0;
        const double e = r - dp;
        const double cmd_raw = dev.i_dc_0 + dev.kp_p * e + dev.ki_p * integ_s;
        const double cmd = std::clamp(cmd_raw, 0.0, dev.i_dc_sat);
        const bool clamped = cmd != cmd_raw;
        double dinteg = e;
        // conditional integration: freeze while clamped and pushing further in
        if ((cmd_raw > dev.i_dc_sat && e > 0.0) || (cmd_raw < 0.0 && e < 0.0)) dinteg = 0.0;
        return {rss.A * xs + bu, (cmd - idc_s) / dev.tau_dc, dinteg, cmd, clamped};
    };

    auto record = [&](const Deriv& d) {
        result.achieved_power.samples.push_back(i_dc - dev.i_dc_0);
        result.i_dc_ref.samples.push_back(d.cmd);
        saturated = saturated || d.clamped;
    };

    record(deriv(x, i_dc, integ));
    for (std::size_t step = 0; step < steps; ++step) {
        const Deriv k1 = deriv(x, i_dc, integ);
        const Deriv k2 = deriv(x + 0.5 * dt * k1.dx, i_dc + 0.5 * dt * k1.di_dc,
                               integ + 0.5 * dt * k1.dinteg);
        const Deriv k3 = deriv(x + 0.5 * dt * k2.dx, i_dc + 0.5 * dt * k2.di_dc,
                               integ + 0.5 * dt * k2.dinteg);
        const Deriv k4 = deriv(x + dt * k3.dx, i_dc + dt * k3.di_dc, integ + dt * k3.dinteg);
        x += dt / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
        i_dc += dt / 6.0 * (k1.di_dc + 2.0 * k2.di_dc + 2.0 * k3.di_dc + k4.di_dc);
        integ += dt / 6.0 * (k1.dinteg + 2.0 * k2.dinteg + 2.0 * k3.dinteg + k4.dinteg);
        record(deriv(x, i_dc, integ));
    }
    result.saturated = saturated;
    return result;
}

}  // namespace gridtf

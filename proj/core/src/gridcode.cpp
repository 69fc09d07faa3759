#include "gridtf/gridcode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gridtf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Boundary equality counts as satisfied. Comparisons allow a few ulps so
/// that bounds reconstructed through equivalent float expressions still
/// register as equal.
bool leq(double value, double bound) {
    if (value <= bound) return true;
    return value - bound <= 4.0 * std::abs(bound) * std::numeric_limits<double>::epsilon();
}

Constraint make_constraint(std::string id, std::string detail, double value, double lower,
                           double upper) {
    Constraint c;
    c.id = std::move(id);
    c.detail = std::move(detail);
    c.value = value;
    c.lower = lower;
    c.upper = upper;
    const bool lo_ok = lower == -kInf || leq(lower, value);
    const bool hi_ok = upper == kInf || leq(value, upper);
    c.satisfied = lo_ok && hi_ok;
    double slack = kInf;
    if (lower != -kInf) slack = std::min(slack, value - lower);
    if (upper != kInf) slack = std::min(slack, upper - value);
    c.slack = slack;
    return c;
}

}  // namespace

void validate_grid_code(const GridCodeSpec& gc) {
    const double times[] = {gc.t_i_max_fcr, gc.t_a_max_fcr, gc.t_90_max_vq, gc.t_100_max_vq,
                            gc.t_a_max_ffr, gc.t_d_min_ffr, gc.t_r_min_ffr};
    for (double t : times)
        if (!(t >= 0.0) || !std::isfinite(t))
            throw std::invalid_argument("grid-code times must be nonnegative");
    if (gc.t_d_min_ffr < gc.t_a_max_ffr || gc.t_r_min_ffr < gc.t_a_max_ffr)
        throw std::invalid_argument("FFR support/recovery floors must be >= the activation bound");
    if (!(gc.x_peak_ffr >= 1.0 && gc.x_peak_ffr <= 2.0))
        throw std::invalid_argument("x_peak_ffr must lie in [1, 2]");
}

void validate_device_limits(const DeviceLimits& dev) {
    const double vals[] = {dev.r_max_p, dev.r_max_q, dev.t_d_max_ffr, dev.t_r_max_ffr,
                           dev.m_max_p};
    for (double v : vals)
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument("device limits must be strictly positive");
}

std::vector<std::string> grid_code_warnings(const GridCodeSpec& gc) {
    std::vector<std::string> warnings;
    if (gc.t_d_min_ffr < 2.0 * gc.t_a_max_ffr)
        warnings.push_back(
            "t_d_min_ffr is less than twice t_a_max_ffr; the support duration "
            "floor is expected to dominate the activation bound");
    return warnings;
}

void validate_alpha_structure(const AlphaParams& alpha) {
    const double vals[] = {alpha.t_i_fcr, alpha.t_a_fcr,  alpha.t_90_vq,  alpha.t_100_vq,
                           alpha.t_a_ffr, alpha.t_d_ffr, alpha.t_r_ffr, alpha.p_ffr_peak};
    for (double v : vals)
        if (!std::isfinite(v) || v < 0.0)
            throw std::invalid_argument("alpha entries must be finite and nonnegative");
    if (alpha.t_i_fcr > alpha.t_a_fcr || alpha.t_90_vq > alpha.t_100_vq ||
        alpha.t_a_ffr > alpha.t_d_ffr || alpha.t_d_ffr > alpha.t_r_ffr)
        throw std::invalid_argument("alpha times must be ordered");
}

const Constraint* ViolationReport::find(const std::string& id) const {
    for (const auto& c : constraints)
        if (c.id == id) return &c;
    return nullptr;
}

ViolationReport validate_alpha(const AlphaParams& alpha, const GainSpec& gains,
                               const GridCodeSpec& gc, const DeviceLimits& dev,
                               bool superimposed) {
    validate_alpha_structure(alpha);
    validate_gains(gains);
    validate_grid_code(gc);
    validate_device_limits(dev);

    const double cap_fcr = gains.fcr_capacity();
    const double cap_ffr = gains.ffr_capacity();
    const double cap_q100 = gains.q100_capacity();
    const double cap_q90 = gains.q90_capacity();

    auto ramp = [](double capacity, double duration) {
        return duration > 0.0 ? capacity / duration : (capacity > 0.0 ? kInf : 0.0);
    };

    ViolationReport report;
    auto add = [&](Constraint c) { report.constraints.push_back(std::move(c)); };

    add(make_constraint("1a", "0 <= t_i_fcr <= T_i_max_fcr", alpha.t_i_fcr, 0.0, gc.t_i_max_fcr));
    add(make_constraint("1b", "t_i_fcr <= t_a_fcr <= T_a_max_fcr", alpha.t_a_fcr, alpha.t_i_fcr,
                        gc.t_a_max_fcr));
    add(make_constraint("1c", "fcr ramp rate <= R_max_p",
                        ramp(cap_fcr, alpha.t_a_fcr - alpha.t_i_fcr), -kInf, dev.r_max_p));

    add(make_constraint("2a", "0 <= t_90_vq <= T_90_max_vq", alpha.t_90_vq, 0.0, gc.t_90_max_vq));
    add(make_constraint("2b", "t_90_vq <= t_100_vq <= T_100_max_vq", alpha.t_100_vq,
                        alpha.t_90_vq, gc.t_100_max_vq));
    add(make_constraint("2c", "q90 ramp rate <= R_max_q", ramp(cap_q90, alpha.t_90_vq), -kInf,
                        dev.r_max_q));
    add(make_constraint("2d", "q90->q100 ramp rate <= R_max_q",
                        ramp(0.1 * cap_q100, alpha.t_100_vq - alpha.t_90_vq), -kInf,
                        dev.r_max_q));

    add(make_constraint("3a", "0 <= t_a_ffr <= T_a_max_ffr", alpha.t_a_ffr, 0.0, gc.t_a_max_ffr));
    add(make_constraint("3b", "ffr ramp rate <= R_max_p", ramp(cap_ffr, alpha.t_a_ffr), -kInf,
                        dev.r_max_p));
    add(make_constraint("3c", "T_d_min <= t_d_ffr - t_a_ffr <= T_d_max",
                        alpha.t_d_ffr - alpha.t_a_ffr, gc.t_d_min_ffr, dev.t_d_max_ffr));
    add(make_constraint("3d", "T_r_min <= t_r_ffr - t_d_ffr <= T_r_max",
                        alpha.t_r_ffr - alpha.t_d_ffr, gc.t_r_min_ffr, dev.t_r_max_ffr));
    add(make_constraint("3e", "cap_ffr <= p_ffr_peak <= min(M_max_p, x_peak*cap_ffr)",
                        alpha.p_ffr_peak, cap_ffr,
                        std::min(dev.m_max_p, gc.x_peak_ffr * cap_ffr)));

    if (superimposed) {
        const double combined =
            ramp(cap_fcr, alpha.t_a_fcr - alpha.t_i_fcr) + ramp(cap_ffr, alpha.t_a_ffr);
        add(make_constraint("4a", "combined fcr+ffr ramp rate <= R_max_p", combined, -kInf,
                            dev.r_max_p));
        add(make_constraint("4b", "cap_fcr + p_ffr_peak <= M_max_p", cap_fcr + alpha.p_ffr_peak,
                            -kInf, dev.m_max_p));
    }

    report.feasible = std::all_of(report.constraints.begin(), report.constraints.end(),
                                  [](const Constraint& c) { return c.satisfied; });
    return report;
}

AlphaParams min_requirements_alpha(const GridCodeSpec& gc, const GainSpec& gains) {
    validate_grid_code(gc);
    validate_gains(gains);
    AlphaParams alpha;
    alpha.t_i_fcr = gc.t_i_max_fcr;
    alpha.t_a_fcr = gc.t_a_max_fcr;
    alpha.t_90_vq = gc.t_90_max_vq;
    alpha.t_100_vq = gc.t_100_max_vq;
    alpha.t_a_ffr = gc.t_a_max_ffr;
    alpha.t_d_ffr = alpha.t_a_ffr + gc.t_d_min_ffr;
    alpha.t_r_ffr = alpha.t_d_ffr + gc.t_r_min_ffr;
    alpha.p_ffr_peak = gains.ffr_capacity();
    return alpha;
}

AlphaParams max_limits_alpha(const GridCodeSpec& gc, const DeviceLimits& dev,
                             const GainSpec& gains) {
    validate_grid_code(gc);
    validate_device_limits(dev);
    validate_gains(gains);
    AlphaParams alpha;
    alpha.t_i_fcr = 0.0;
    alpha.t_a_fcr = 2.0 * gains.fcr_capacity() / dev.r_max_p;
    alpha.t_90_vq = gains.q90_capacity() / dev.r_max_q;
    alpha.t_100_vq = gains.q100_capacity() / dev.r_max_q;
    alpha.t_a_ffr = 2.0 * gains.ffr_capacity() / dev.r_max_p;
    alpha.t_d_ffr = alpha.t_a_ffr + dev.t_d_max_ffr;
    alpha.t_r_ffr = alpha.t_d_ffr + dev.t_r_max_ffr;
    alpha.p_ffr_peak =
        std::min(dev.m_max_p - gains.fcr_capacity(), gc.x_peak_ffr * gains.ffr_capacity());
    return alpha;
}

}  // namespace gridtf

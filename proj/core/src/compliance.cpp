#include "gridtf/compliance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gridtf {

namespace {

struct Run {
    std::size_t first = 0;
    std::size_t last = 0;  // inclusive
};

/// Maximal index runs with samples >= level; runs separated by fewer than
/// `dwell` below-level samples are merged (ripple debounce).
std::vector<Run> runs_above(const std::vector<double>& y, double level, int dwell) {
    std::vector<Run> raw;
    std::size_t i = 0;
    while (i < y.size()) {
        if (y[i] >= level) {
            std::size_t j = i;
            while (j + 1 < y.size() && y[j + 1] >= level) ++j;
            raw.push_back({i, j});
            i = j + 1;
        } else {
            ++i;
        }
    }
    std::vector<Run> merged;
    for (const auto& r : raw) {
        if (!merged.empty() && r.first - merged.back().last <= static_cast<std::size_t>(dwell))
            merged.back().last = r.last;
        else
            merged.push_back(r);
    }
    return merged;
}

double interp_cross_up(const Trajectory& traj, std::size_t i, double level) {
    if (i == 0 || traj.samples[i - 1] >= level) return traj.time_at(i);
    const double y0 = traj.samples[i - 1];
    const double y1 = traj.samples[i];
    return traj.time_at(i - 1) + (level - y0) / (y1 - y0) * traj.dt;
}

/// First crossing of `level` held for at least `dwell` samples.
std::optional<double> first_sustained_crossing(const Trajectory& traj, double level, int dwell) {
    const auto& y = traj.samples;
    const auto need = static_cast<std::size_t>(dwell);
    for (std::size_t i = 0; i + need <= y.size(); ++i) {
        bool held = true;
        for (std::size_t k = 0; k < need; ++k) held = held && y[i + k] >= level;
        if (held) return interp_cross_up(traj, i, level);
    }
    return std::nullopt;
}

/// Onset of activity: the first sustained time |y| exceeds eps, extrapolated
/// back to zero level along the local slope. For an ideal delayed ramp this
/// recovers the delay itself independent of eps.
std::optional<double> onset_time(const Trajectory& traj, double eps, int dwell) {
    const auto& y = traj.samples;
    const auto need = static_cast<std::size_t>(dwell);
    for (std::size_t i = 0; i + need <= y.size(); ++i) {
        bool held = true;
        for (std::size_t k = 0; k < need; ++k) held = held && std::abs(y[i + k]) >= eps;
        if (!held) continue;
        const double sign = y[i] >= 0.0 ? 1.0 : -1.0;
        double t_cross = traj.time_at(i);
        if (i > 0) {
            const double y0 = sign * y[i - 1];
            const double y1 = sign * y[i];
            if (y0 < eps) t_cross = traj.time_at(i - 1) + (eps - y0) / (y1 - y0) * traj.dt;
        }
        const double slope =
            (sign * y[i + need - 1] - sign * y[i]) / (static_cast<double>(need - 1) * traj.dt);
        if (slope > 0.0) t_cross -= eps / slope;
        return std::max(traj.t0, std::min(t_cross, traj.time_at(i)));
    }
    return std::nullopt;
}

CheckEntry deadline_entry(std::string id, std::string detail, std::optional<double> measured,
                          double bound) {
    CheckEntry e;
    e.id = std::move(id);
    e.detail = std::move(detail);
    e.bound = bound;
    if (measured) {
        e.measured = *measured;
        e.margin = bound - *measured;
        e.pass = *measured <= bound;
    } else {
        e.measured = std::numeric_limits<double>::infinity();
        e.margin = -std::numeric_limits<double>::infinity();
        e.pass = false;
    }
    return e;
}

CheckEntry ceiling_entry(std::string id, std::string detail, double measured, double bound) {
    CheckEntry e;
    e.id = std::move(id);
    e.detail = std::move(detail);
    e.measured = measured;
    e.bound = bound;
    e.margin = bound - measured;
    e.pass = measured <= bound;
    return e;
}

CheckEntry floor_entry(std::string id, std::string detail, double measured, double bound) {
    CheckEntry e;
    e.id = std::move(id);
    e.detail = std::move(detail);
    e.measured = measured;
    e.bound = bound;
    e.margin = measured - bound;
    e.pass = measured >= bound;
    return e;
}

void finalize(ComplianceReport& report) {
    report.pass = std::all_of(report.entries.begin(), report.entries.end(),
                              [](const CheckEntry& e) { return e.pass; });
}

void require_usable(const Trajectory& traj, int dwell) {
    validate_trajectory(traj);
    if (traj.samples.size() < static_cast<std::size_t>(dwell) + 1)
        throw std::invalid_argument("trajectory shorter than the crossing dwell window");
}

/// Max |trajectory - |step| * curve| outside +-exclusion of the mask times,
/// as a fraction of `capacity`.
double corridor_deviation(const Trajectory& traj, const PiecewiseCurve& curve, double scale,
                          double capacity, double exclusion,
                          const std::vector<double>& mask_times) {
    double worst = 0.0;
    for (std::size_t k = 0; k < traj.samples.size(); ++k) {
        const double t = traj.time_at(k);
        bool masked = false;
        for (double tk : mask_times) masked = masked || std::abs(t - tk) <= exclusion;
        if (masked) continue;
        worst = std::max(worst, std::abs(traj.samples[k] - scale * curve_eval(curve, t)));
    }
    return worst / capacity;
}

}  // namespace

void validate_tolerance(const ToleranceSpec& tol) {
    if (!(tol.band > 0.0 && tol.band < 0.1))
        throw std::invalid_argument("tolerance band must lie in (0, 0.1)");
    if (tol.timing_s < 0.0 || tol.kink_exclusion_s < 0.0 || tol.corridor <= 0.0)
        throw std::invalid_argument("tolerances must be nonnegative (corridor positive)");
    if (tol.dwell_samples < 1) throw std::invalid_argument("dwell must be at least one sample");
}

ResponseMetrics measure_metrics(const Trajectory& traj, double capacity, double band,
                                int dwell_samples) {
    if (!(capacity > 0.0)) throw std::invalid_argument("capacity must be positive");
    if (!(band > 0.0 && band < 0.1)) throw std::invalid_argument("band must lie in (0, 0.1)");
    require_usable(traj, dwell_samples);

    ResponseMetrics m;
    m.t_initial_response = onset_time(traj, band * capacity, dwell_samples);
    m.t_reach_90 = first_sustained_crossing(traj, 0.9 * capacity, dwell_samples);
    m.t_reach_100 = first_sustained_crossing(traj, capacity, dwell_samples);
    const auto peak_it = std::max_element(traj.samples.begin(), traj.samples.end());
    m.peak_value = *peak_it;
    m.peak_time = traj.time_at(static_cast<std::size_t>(peak_it - traj.samples.begin()));
    m.final_value = traj.samples.back();

    const double hold_level = (1.0 - band) * capacity;
    double best = 0.0;
    for (const auto& run : runs_above(traj.samples, hold_level, dwell_samples)) {
        double t_start = interp_cross_up(traj, run.first, hold_level);
        double t_end = traj.time_at(run.last);
        if (run.last + 1 < traj.samples.size()) {
            const double y0 = traj.samples[run.last];
            const double y1 = traj.samples[run.last + 1];
            if (y1 < hold_level) t_end += (y0 - hold_level) / (y0 - y1) * traj.dt;
        }
        best = std::max(best, t_end - t_start);
    }
    m.hold_duration = best;
    return m;
}

ComplianceReport check_fcr(const Trajectory& traj, const AlphaParams& alpha,
                           const GainSpec& gains, const GridCodeSpec& gc,
                           const ToleranceSpec& tol, bool superimposed) {
    validate_tolerance(tol);
    require_usable(traj, tol.dwell_samples);
    const double step = std::abs(traj.step_magnitude);
    const double cap = step * gains.fcr_capacity();

    ComplianceReport report;
    report.service = "fcr";
    report.capacity = cap;
    report.step_magnitude = traj.step_magnitude;
    report.tolerances = tol;

    report.entries.push_back(deadline_entry(
        "fcr.initial_delay", "response onset by T_i_max_fcr + timing",
        onset_time(traj, tol.band * cap, tol.dwell_samples), gc.t_i_max_fcr + tol.timing_s));

    const double level = (1.0 - tol.band) * cap;
    report.entries.push_back(deadline_entry(
        "fcr.full_activation", "capacity (within band) reached by T_a_max_fcr + timing",
        first_sustained_crossing(traj, level, tol.dwell_samples), gc.t_a_max_fcr + tol.timing_s));

    report.entries.push_back(ceiling_entry("fcr.final_value",
                                           "final value within band of the capacity",
                                           std::abs(traj.samples.back() - cap), tol.band * cap));

    // Held to the end of the horizon: the last debounced run above the band
    // level must reach the final sample.
    const auto runs = runs_above(traj.samples, level, tol.dwell_samples);
    double gap_to_end = std::numeric_limits<double>::infinity();
    if (!runs.empty())
        gap_to_end = traj.dt * static_cast<double>(traj.samples.size() - 1 - runs.back().last);
    report.entries.push_back(ceiling_entry("fcr.hold_to_end",
                                           "capacity held to the end of the horizon", gap_to_end,
                                           traj.dt * tol.dwell_samples));

    // Conformance corridor around the declared FCR curve. Padé synthesis
    // ripples near kinks and lags wide transitions, so the corridor is a
    // coarse envelope, not the compliance band itself.
    const PiecewiseCurve fcr_curve = build_fcr_curve(gains, alpha.t_i_fcr, alpha.t_a_fcr);
    Trajectory share = traj;
    std::vector<double> mask = fcr_curve.kink_times();
    if (superimposed) {
        const PiecewiseCurve ffr_curve =
            build_ffr_curve(gains, alpha.t_a_ffr, alpha.t_d_ffr, alpha.t_r_ffr, alpha.p_ffr_peak);
        for (std::size_t k = 0; k < share.samples.size(); ++k)
            share.samples[k] -= step * curve_eval(ffr_curve, share.time_at(k));
        const auto extra = ffr_curve.kink_times();
        mask.insert(mask.end(), extra.begin(), extra.end());
    }
    report.entries.push_back(ceiling_entry(
        "fcr.curve_corridor", "FCR share within the corridor around the declared curve",
        corridor_deviation(share, fcr_curve, step, cap, tol.kink_exclusion_s, mask),
        tol.corridor));

    finalize(report);
    return report;
}

ComplianceReport check_vq(const Trajectory& traj, const AlphaParams& alpha,
                          const GainSpec& gains, const GridCodeSpec& gc,
                          const ToleranceSpec& tol) {
    (void)alpha;  // the VQ bounds come from the grid code alone
    validate_tolerance(tol);
    require_usable(traj, tol.dwell_samples);
    const double step = std::abs(traj.step_magnitude);
    const double cap = step * gains.q100_capacity();

    ComplianceReport report;
    report.service = "vq";
    report.capacity = cap;
    report.step_magnitude = traj.step_magnitude;
    report.tolerances = tol;

    report.entries.push_back(deadline_entry(
        "vq.t90", "90% capacity (within band) by T_90_max_vq + timing",
        first_sustained_crossing(traj, (0.9 - tol.band) * cap, tol.dwell_samples),
        gc.t_90_max_vq + tol.timing_s));
    report.entries.push_back(deadline_entry(
        "vq.t100", "full capacity (within band) by T_100_max_vq + timing",
        first_sustained_crossing(traj, (1.0 - tol.band) * cap, tol.dwell_samples),
        gc.t_100_max_vq + tol.timing_s));
    report.entries.push_back(ceiling_entry("vq.final_value",
                                           "final value within band of the capacity",
                                           std::abs(traj.samples.back() - cap), tol.band * cap));
    finalize(report);
    return report;
}

ComplianceReport check_ffr(const Trajectory& traj, const AlphaParams& alpha,
                           const GainSpec& gains, const GridCodeSpec& gc,
                           const DeviceLimits& dev, const ToleranceSpec& tol) {
    (void)alpha;
    validate_tolerance(tol);
    require_usable(traj, tol.dwell_samples);
    const double step = std::abs(traj.step_magnitude);
    const double cap_n = gains.ffr_capacity();
    const double cap = step * cap_n;

    ComplianceReport report;
    report.service = "ffr";
    report.capacity = cap;
    report.step_magnitude = traj.step_magnitude;
    report.tolerances = tol;

    const auto metrics = measure_metrics(traj, cap, tol.band, tol.dwell_samples);
    const double level = (1.0 - tol.band) * cap;

    report.entries.push_back(deadline_entry(
        "ffr.activation", "FFR capacity (within band) by T_a_max_ffr + timing",
        first_sustained_crossing(traj, level, tol.dwell_samples), gc.t_a_max_ffr + tol.timing_s));

    // The hold is bounded by two crossings, each carrying the timing
    // tolerance, hence the 2x allowance on the required duration.
    report.entries.push_back(floor_entry("ffr.support_hold",
                                         "capacity held for the minimum support duration",
                                         metrics.hold_duration,
                                         gc.t_d_min_ffr - 2.0 * tol.timing_s));

    const double peak_bound = std::min(dev.m_max_p, gc.x_peak_ffr * cap_n) * step + tol.band * cap;
    report.entries.push_back(ceiling_entry("ffr.overdelivery",
                                           "peak within the overdelivery ceiling",
                                           metrics.peak_value, peak_bound));

    report.entries.push_back(ceiling_entry("ffr.recovery", "returned to recovery by the horizon",
                                           std::abs(traj.samples.back()), tol.band * cap));
    finalize(report);
    return report;
}

Trajectory ffr_residual(const Trajectory& traj, const AlphaParams& alpha, const GainSpec& gains) {
    validate_trajectory(traj);
    const PiecewiseCurve fcr_curve = build_fcr_curve(gains, alpha.t_i_fcr, alpha.t_a_fcr);
    const double step = std::abs(traj.step_magnitude);
    Trajectory out = traj;
    out.label = traj.label + "_ffr_share";
    for (std::size_t k = 0; k < out.samples.size(); ++k)
        out.samples[k] -= step * curve_eval(fcr_curve, out.time_at(k));
    return out;
}

}  // namespace gridtf

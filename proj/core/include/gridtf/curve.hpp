#pragma once

#include <string>
#include <vector>

namespace gridtf {

/// One linear piece of a capability curve. Values are normalized power
/// (p.u. response to a unit input step); outside [t_start, t_end] the
/// segment contributes zero.
struct CurveSegment {
    double t_start = 0.0;
    double t_end = 0.0;
    double y_start = 0.0;
    double y_end = 0.0;

    double slope() const { return (y_end - y_start) / (t_end - t_start); }
};

/// Throws std::invalid_argument unless t_end > t_start >= 0 and all values
/// are finite.
void validate_segment(const CurveSegment& seg);

/// Value of the segment at time t; zero outside its support.
double segment_eval(const CurveSegment& seg, double t);

/// Droop/correlation gains allocated to the reserve unit. Capacities follow
/// as 1/d_p (FCR), 1/k_p_ffr (FFR) and 1/d_q, 0.9/d_q (voltage control).
struct GainSpec {
    double d_p = 0.06;
    double k_p_ffr = 0.04;
    double d_q = 0.06;

    double fcr_capacity() const { return 1.0 / d_p; }
    double ffr_capacity() const { return 1.0 / k_p_ffr; }
    double q100_capacity() const { return 1.0 / d_q; }
    double q90_capacity() const { return 0.9 / d_q; }
};

void validate_gains(const GainSpec& gains);

/// Normalized piecewise-linear step-response capability curve. Segments are
/// contiguous and continuous; before the first segment the curve is zero and
/// after the last one it holds tail_value forever.
struct PiecewiseCurve {
    std::vector<CurveSegment> segments;
    double tail_value = 0.0;
    std::string label;

    double start_time() const { return segments.empty() ? 0.0 : segments.front().t_start; }
    double end_time() const { return segments.empty() ? 0.0 : segments.back().t_end; }
    /// Distinct kink times (segment boundaries), ascending.
    std::vector<double> kink_times() const;
};

void validate_curve(const PiecewiseCurve& curve);

double curve_eval(const PiecewiseCurve& curve, double t);

/// Flat zero until t_i, ramp to the FCR capacity 1/d_p at t_a, hold.
PiecewiseCurve build_fcr_curve(const GainSpec& gains, double t_i, double t_a);

/// Ramp to 0.9/d_q at t_90, then to 1/d_q at t_100, hold.
PiecewiseCurve build_vq_curve(const GainSpec& gains, double t_90, double t_100);

/// Ramp to `peak` at t_a, back to the FFR capacity 1/k_p_ffr at t_d, down to
/// zero at t_r. peak == capacity gives a flat support plateau.
PiecewiseCurve build_ffr_curve(const GainSpec& gains, double t_a, double t_d, double t_r,
                               double peak);

/// Steep-ramp stand-in for a step of `value` at time `at`: rises over
/// `rise_time` and holds. Builders never emit true discontinuities; this is
/// the explicit way to get arbitrarily close to one.
PiecewiseCurve build_step_curve(double value, double at, double rise_time);

/// Pointwise sum; the kink set of the result is the union of both kink sets.
PiecewiseCurve superimpose(const PiecewiseCurve& a, const PiecewiseCurve& b);

/// All values and the tail multiplied by |step|; times unchanged.
PiecewiseCurve scale_curve(const PiecewiseCurve& curve, double step);

}  // namespace gridtf

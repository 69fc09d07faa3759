#include "gridtf/curve.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace gridtf {

namespace {

bool all_finite(const CurveSegment& s) {
    return std::isfinite(s.t_start) && std::isfinite(s.t_end) && std::isfinite(s.y_start) &&
           std::isfinite(s.y_end);
}

}  // namespace

void validate_segment(const CurveSegment& seg) {
    if (!all_finite(seg)) throw std::invalid_argument("curve segment has non-finite entries");
    if (seg.t_start < 0.0) throw std::invalid_argument("curve segment starts before t=0");
    if (!(seg.t_end > seg.t_start))
        throw std::invalid_argument("curve segment must have t_end > t_start");
}

double segment_eval(const CurveSegment& seg, double t) {
    if (t < seg.t_start || t > seg.t_end) return 0.0;
    return seg.y_start + seg.slope() * (t - seg.t_start);
}

void validate_gains(const GainSpec& gains) {
    if (!(gains.d_p > 0.0) || !(gains.k_p_ffr > 0.0) || !(gains.d_q > 0.0))
        throw std::invalid_argument("gains must be strictly positive");
}

std::vector<double> PiecewiseCurve::kink_times() const {
    std::vector<double> times;
    for (const auto& seg : segments) {
        if (times.empty() || times.back() != seg.t_start) times.push_back(seg.t_start);
        times.push_back(seg.t_end);
    }
    return times;
}

void validate_curve(const PiecewiseCurve& curve) {
    if (curve.segments.empty()) throw std::invalid_argument("curve has no segments");
    if (!std::isfinite(curve.tail_value)) throw std::invalid_argument("tail value not finite");
    for (const auto& seg : curve.segments) validate_segment(seg);
    for (std::size_t k = 0; k + 1 < curve.segments.size(); ++k) {
        if (curve.segments[k].t_end != curve.segments[k + 1].t_start)
            throw std::invalid_argument("curve segments are not contiguous");
        if (curve.segments[k].y_end != curve.segments[k + 1].y_start)
            throw std::invalid_argument("curve has a vertical jump between segments");
    }
    if (curve.segments.front().t_start == 0.0 && curve.segments.front().y_start != 0.0)
        throw std::invalid_argument("curve must start at value 0");
}

double curve_eval(const PiecewiseCurve& curve, double t) {
    if (curve.segments.empty()) return curve.tail_value;
    if (t < curve.segments.front().t_start) return 0.0;
    if (t >= curve.segments.back().t_end) return curve.tail_value;
    // Segments are sorted and contiguous; find the one containing t.
    auto it = std::upper_bound(curve.segments.begin(), curve.segments.end(), t,
                               [](double v, const CurveSegment& s) { return v < s.t_end; });
    return segment_eval(*it, t);
}

PiecewiseCurve build_fcr_curve(const GainSpec& gains, double t_i, double t_a) {
    validate_gains(gains);
    if (t_i < 0.0 || !(t_a > t_i)) throw std::invalid_argument("FCR curve needs 0 <= t_i < t_a");
    PiecewiseCurve curve;
    curve.label = "fcr";
    if (t_i > 0.0) curve.segments.push_back({0.0, t_i, 0.0, 0.0});
    curve.segments.push_back({t_i, t_a, 0.0, gains.fcr_capacity()});
    curve.tail_value = gains.fcr_capacity();
    return curve;
}

PiecewiseCurve build_vq_curve(const GainSpec& gains, double t_90, double t_100) {
    validate_gains(gains);
    if (!(t_90 > 0.0) || !(t_100 > t_90))
        throw std::invalid_argument("VQ curve needs 0 < t_90 < t_100");
    PiecewiseCurve curve;
    curve.label = "vq";
    curve.segments.push_back({0.0, t_90, 0.0, gains.q90_capacity()});
    curve.segments.push_back({t_90, t_100, gains.q90_capacity(), gains.q100_capacity()});
    curve.tail_value = gains.q100_capacity();
    return curve;
}

PiecewiseCurve build_ffr_curve(const GainSpec& gains, double t_a, double t_d, double t_r,
                               double peak) {
    validate_gains(gains);
    if (!(t_a > 0.0) || !(t_d > t_a) || !(t_r > t_d))
        throw std::invalid_argument("FFR curve needs 0 < t_a < t_d < t_r");
    const double capacity = gains.ffr_capacity();
    if (peak < capacity) throw std::invalid_argument("FFR peak below the FFR capacity");
    PiecewiseCurve curve;
    curve.label = "ffr";
    curve.segments.push_back({0.0, t_a, 0.0, peak});
    curve.segments.push_back({t_a, t_d, peak, capacity});
    curve.segments.push_back({t_d, t_r, capacity, 0.0});
    curve.tail_value = 0.0;
    return curve;
}

PiecewiseCurve build_step_curve(double value, double at, double rise_time) {
    if (at < 0.0 || !(rise_time > 0.0) || !std::isfinite(value))
        throw std::invalid_argument("step curve needs at >= 0 and rise_time > 0");
    PiecewiseCurve curve;
    curve.label = "step";
    if (at > 0.0) curve.segments.push_back({0.0, at, 0.0, 0.0});
    curve.segments.push_back({at, at + rise_time, 0.0, value});
    curve.tail_value = value;
    return curve;
}

PiecewiseCurve superimpose(const PiecewiseCurve& a, const PiecewiseCurve& b) {
    validate_curve(a);
    validate_curve(b);
    std::set<double> times{0.0};
    for (double t : a.kink_times()) times.insert(t);
    for (double t : b.kink_times()) times.insert(t);
    PiecewiseCurve curve;
    curve.label = a.label.empty() || b.label.empty() ? a.label + b.label : a.label + "+" + b.label;
    curve.tail_value = a.tail_value + b.tail_value;
    double prev_t = 0.0;
    double prev_y = curve_eval(a, 0.0) + curve_eval(b, 0.0);
    bool first = true;
    for (double t : times) {
        if (first) {
            first = false;
            continue;
        }
        const double y = curve_eval(a, t) + curve_eval(b, t);
        curve.segments.push_back({prev_t, t, prev_y, y});
        prev_t = t;
        prev_y = y;
    }
    return curve;
}

PiecewiseCurve scale_curve(const PiecewiseCurve& curve, double step) {
    if (!std::isfinite(step)) throw std::invalid_argument("scale factor not finite");
    const double k = std::abs(step);
    PiecewiseCurve out = curve;
    for (auto& seg : out.segments) {
        seg.y_start *= k;
        seg.y_end *= k;
    }
    out.tail_value *= k;
    return out;
}

}  // namespace gridtf

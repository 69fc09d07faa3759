#pragma once

#include "gridtf/curve.hpp"
#include "gridtf/rational.hpp"

#include <complex>
#include <random>
#include <vector>

namespace gridtf::testing {

/// Random continuous curve starting at 0: up to max_kinks positive kink
/// instants in (0, 40], values in [-30, 30], arbitrary tail hold.
inline PiecewiseCurve random_curve(std::mt19937& rng, int max_kinks = 4) {
    std::uniform_int_distribution<int> n_kinks(1, max_kinks);
    std::uniform_real_distribution<double> time_gap(0.3, 12.0);
    std::uniform_real_distribution<double> value(-30.0, 30.0);
    std::bernoulli_distribution hold_tail(0.5);

    const int m = n_kinks(rng);
    PiecewiseCurve curve;
    curve.label = "random";
    double t = 0.0, y = 0.0;
    for (int k = 0; k < m; ++k) {
        const double t_next = t + time_gap(rng);
        const double y_next = value(rng);
        curve.segments.push_back({t, t_next, y, y_next});
        t = t_next;
        y = y_next;
    }
    curve.tail_value = hold_tail(rng) ? y : 0.0;
    if (curve.tail_value != y) {
        // close the curve back to the tail value to stay continuous
        curve.segments.push_back({t, t + time_gap(rng), y, curve.tail_value});
    }
    return curve;
}

/// Direct pointwise evaluation of the synthesis target, no polynomial
/// expansion anywhere: sum over segments of (y_i + d/s) P_i - (y_j + d/s) P_j
/// plus tail * P_last, with P computed by complex powers.
inline std::complex<double> curve_tf_reference(const PiecewiseCurve& curve, int n,
                                               std::complex<double> s) {
    using cd = std::complex<double>;
    auto pade_at = [&](double t) -> cd {
        if (t == 0.0) return 1.0;
        const double a = t / (2.0 * n);
        return std::pow((1.0 - a * s) / (1.0 + a * s), n);
    };
    cd total = 0.0;
    for (const auto& seg : curve.segments) {
        const cd d = seg.slope();
        total += (seg.y_start + d / s) * pade_at(seg.t_start) -
                 (seg.y_end + d / s) * pade_at(seg.t_end);
    }
    if (!curve.segments.empty())
        total += curve.tail_value * pade_at(curve.segments.back().t_end);
    return total;
}

/// Taylor coefficients of num/den around s = 0 (den(0) != 0).
inline std::vector<double> taylor_of_rational(const RationalTF& tf, int terms) {
    std::vector<double> c(static_cast<std::size_t>(terms), 0.0);
    const double d0 = tf.den[0];
    for (int k = 0; k < terms; ++k) {
        double acc = tf.num[static_cast<std::size_t>(k)];
        for (int j = 1; j <= k; ++j) acc -= tf.den[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k - j)];
        c[static_cast<std::size_t>(k)] = acc / d0;
    }
    return c;
}

}  // namespace gridtf::testing

#include "gridtf/rational.hpp"

#include "gridtf/gridcode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace gridtf {

namespace {

constexpr double kStabilityTol = -1e-9;
constexpr double kOriginCancelTol = 1e-12;

struct PadeFactors {
    Polynomial num;  // (1 - t/(2n) s)^n
    Polynomial den;  // (1 + t/(2n) s)^n
};

PadeFactors pade_factors(double t, int n) {
    if (t == 0.0) return {Polynomial::constant(1.0), Polynomial::constant(1.0)};
    const double a = t / (2.0 * n);
    return {poly_pow(Polynomial({1.0, -a}), n), poly_pow(Polynomial({1.0, a}), n)};
}

void check_order(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("Pade order must be in [1, 10]");
}

/// Numerator of one segment over the common denominator s * D_i * D_j, with
/// the guaranteed zero constant term checked and the s factor cancelled.
Polynomial segment_numerator(const CurveSegment& seg, const PadeFactors& pi,
                             const PadeFactors& pj) {
    const double d = seg.slope();
    const Polynomial left = poly_mul(Polynomial({d, seg.y_start}), poly_mul(pi.num, pj.den));
    const Polynomial right = poly_mul(Polynomial({d, seg.y_end}), poly_mul(pj.num, pi.den));
    Polynomial full = poly_sub(left, right);
    const double c0 = full[0];
    if (std::abs(c0) > kOriginCancelTol * std::max(1.0, full.max_abs_coeff()))
        throw std::runtime_error("segment numerator constant term failed to cancel");
    if (full.is_zero()) return full;
    std::vector<double> shifted = full.coeffs();
    shifted[0] = 0.0;
    return poly_shift_down(Polynomial(std::move(shifted)));
}

}  // namespace

RationalTF RationalTF::make(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw std::invalid_argument("rational TF with zero denominator");
    const double lead = den.leading();
    num *= 1.0 / lead;
    den *= 1.0 / lead;
    return {std::move(num), std::move(den)};
}

std::complex<double> RationalTF::eval(std::complex<double> s) const {
    return num.eval(s) / den.eval(s);
}

RationalTF tf_add(const RationalTF& a, const RationalTF& b) {
    return RationalTF::make(poly_add(poly_mul(a.num, b.den), poly_mul(b.num, a.den)),
                            poly_mul(a.den, b.den));
}

RationalTF tf_scale(const RationalTF& tf, double k) {
    return {poly_scale(tf.num, k), tf.den};
}

RationalTF pade_delay(double t, int n) {
    check_order(n);
    if (t < 0.0) throw std::invalid_argument("Pade delay needs t >= 0");
    auto [num, den] = pade_factors(t, n);
    return RationalTF::make(std::move(num), std::move(den));
}

RationalTF segment_tf(const CurveSegment& seg, int n) {
    validate_segment(seg);
    check_order(n);
    const PadeFactors pi = pade_factors(seg.t_start, n);
    const PadeFactors pj = pade_factors(seg.t_end, n);
    return RationalTF::make(segment_numerator(seg, pi, pj), poly_mul(pi.den, pj.den));
}

RationalTF curve_to_tf(const PiecewiseCurve& curve, int n) {
    validate_curve(curve);
    check_order(n);

    // One Pade factor pair per distinct delay instant; t = 0 contributes the
    // trivial factor and is kept out of the common denominator.
    std::map<double, PadeFactors> factors;
    for (const auto& seg : curve.segments) {
        if (seg.t_start > 0.0) factors.try_emplace(seg.t_start, pade_factors(seg.t_start, n));
        factors.try_emplace(seg.t_end, pade_factors(seg.t_end, n));
    }

    Polynomial den = Polynomial::constant(1.0);
    for (const auto& [t, f] : factors) den = poly_mul(den, f.den);

    auto cofactor = [&](double skip_a, double skip_b) {
        Polynomial p = Polynomial::constant(1.0);
        for (const auto& [t, f] : factors)
            if (t != skip_a && t != skip_b) p = poly_mul(p, f.den);
        return p;
    };

    // Accumulate the numerator together with a per-position noise floor
    // (sum of addend magnitudes). The telescoping y_i terms cancel exactly in
    // real arithmetic at the top degrees; positions whose value sits at their
    // own rounding floor are that cancellation's dust, while genuinely small
    // high-order coefficients (products of fast delay factors) stay far above
    // their floor and must survive.
    std::vector<double> acc, acc_abs;
    auto add_into = [&](const Polynomial& p) {
        if (p.coeffs().size() > acc.size()) {
            acc.resize(p.coeffs().size(), 0.0);
            acc_abs.resize(p.coeffs().size(), 0.0);
        }
        for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
            acc[k] += p.coeffs()[k];
            acc_abs[k] += std::abs(p.coeffs()[k]);
        }
    };
    for (const auto& seg : curve.segments) {
        const PadeFactors pi = pade_factors(seg.t_start, n);
        const auto& pj = factors.at(seg.t_end);
        Polynomial seg_num = segment_numerator(seg, pi, pj);
        if (seg_num.is_zero()) continue;
        add_into(poly_mul(seg_num, cofactor(seg.t_start, seg.t_end)));
    }
    if (curve.tail_value != 0.0) {
        const double t_last = curve.segments.back().t_end;
        add_into(poly_mul(poly_scale(factors.at(t_last).num, curve.tail_value),
                          cofactor(t_last, t_last)));
    }
    constexpr double kNoise = 64.0 * std::numeric_limits<double>::epsilon();
    while (!acc.empty() && std::abs(acc.back()) <= kNoise * acc_abs.back()) {
        acc.pop_back();
        acc_abs.pop_back();
    }
    Polynomial num(std::move(acc));

    // A flat hold from t=0 reduces to a pure gain: num == c * den up to dust.
    if (num.degree() == den.degree() && !num.is_zero()) {
        const double c = num.leading() / den.leading();
        const Polynomial resid = poly_sub(num, poly_scale(den, c));
        if (resid.max_abs_coeff() <= 1e-12 * num.max_abs_coeff())
            return RationalTF::make(Polynomial::constant(c), Polynomial::constant(1.0));
    }

    return RationalTF::make(std::move(num), std::move(den));
}

std::vector<std::complex<double>> poles(const RationalTF& tf) { return poly_roots(tf.den); }

bool is_stable(const RationalTF& tf) {
    for (const auto& p : poles(tf))
        if (p.real() >= kStabilityTol) return false;
    return true;
}

double dc_gain(const RationalTF& tf) {
    const double d0 = tf.den[0];
    if (d0 == 0.0) throw std::domain_error("dc_gain: pole at the origin");
    return tf.num[0] / d0;
}

RationalTF minreal(const RationalTF& tf, double tol) {
    auto zs = poly_roots(tf.num);
    auto ps = poly_roots(tf.den);
    std::vector<bool> z_used(zs.size(), false);
    std::vector<bool> p_used(ps.size(), false);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = 0; j < zs.size(); ++j) {
            if (!z_used[j] && std::abs(ps[i] - zs[j]) <= tol) {
                p_used[i] = z_used[j] = true;
                break;
            }
        }
    }
    auto rebuild = [](const std::vector<std::complex<double>>& roots,
                      const std::vector<bool>& used, double lead) {
        Polynomial p = Polynomial::constant(lead);
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (used[i]) continue;
            if (roots[i].imag() > 0.0) continue;  // conjugate handled with its pair
            if (roots[i].imag() < 0.0) {
                const double re = roots[i].real(), im = roots[i].imag();
                p = poly_mul(p, Polynomial({re * re + im * im, -2.0 * re, 1.0}));
            } else {
                p = poly_mul(p, Polynomial({-roots[i].real(), 1.0}));
            }
        }
        return p;
    };
    return RationalTF::make(rebuild(zs, z_used, tf.num.leading()),
                            rebuild(ps, p_used, tf.den.leading()));
}

TdesMatrix build_tdes(const AlphaParams& alpha, const GainSpec& gains, int n) {
    validate_alpha_structure(alpha);
    const PiecewiseCurve fcr = build_fcr_curve(gains, alpha.t_i_fcr, alpha.t_a_fcr);
    const PiecewiseCurve ffr =
        build_ffr_curve(gains, alpha.t_a_ffr, alpha.t_d_ffr, alpha.t_r_ffr, alpha.p_ffr_peak);
    const PiecewiseCurve vq = build_vq_curve(gains, alpha.t_90_vq, alpha.t_100_vq);
    TdesMatrix tdes;
    tdes.fp = curve_to_tf(superimpose(fcr, ffr), n);
    tdes.vq = curve_to_tf(vq, n);
    return tdes;
}

}  // namespace gridtf

#include "gridtf/rational.hpp"

#include "gridtf/gridcode.hpp"
#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace gridtf;
using Catch::Approx;

namespace {
const GainSpec kGains{};

void check_tf_matches_reference(const PiecewiseCurve& curve, int n) {
    const RationalTF tf = curve_to_tf(curve, n);
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> re(-0.4, 0.4);
    std::uniform_real_distribution<double> im(0.02, 3.0);
    for (int k = 0; k < 30; ++k) {
        const std::complex<double> s(re(rng), im(rng));
        const auto lhs = tf.eval(s);
        const auto rhs = gridtf::testing::curve_tf_reference(curve, n, s);
        // Expanded-coefficient evaluation loses digits proportionally to its
        // condition number sum(|c_k| |s|^k) / |p(s)|; budget accordingly.
        auto cond = [&](const Polynomial& p) {
            double mag = 0.0, pw = 1.0;
            for (double c : p.coeffs()) {
                mag += std::abs(c) * pw;
                pw *= std::abs(s);
            }
            return mag / std::abs(p.eval(s));
        };
        const double tol = std::max(1e-11, 1e-13 * (cond(tf.num) + cond(tf.den)));
        REQUIRE(std::abs(lhs - rhs) <= tol * std::max(1.0, std::abs(rhs)));
    }
}
}  // namespace

TEST_CASE("pade_delay basics") {
    const RationalTF unit = pade_delay(0.0, 3);
    CHECK(unit.num.degree() == 0);
    CHECK(dc_gain(unit) == 1.0);

    const RationalTF p = pade_delay(30.0, 2);
    // (1 - 7.5 s)^2 / (1 + 7.5 s)^2, stored monic
    CHECK(p.num[2] / p.den[2] == Approx(1.0));
    CHECK(p.num[1] / p.num[2] == Approx(-15.0 / 56.25));
    CHECK(p.den[1] / p.den[2] == Approx(15.0 / 56.25));
    CHECK(dc_gain(p) == Approx(1.0));

    for (int n = 1; n <= 10; ++n)
        for (double t : {0.0, 0.5, 2.0, 30.0, 100.0})
            CHECK(dc_gain(pade_delay(t, n)) == Approx(1.0).margin(1e-12));

    CHECK_THROWS_AS(pade_delay(1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(pade_delay(1.0, 11), std::invalid_argument);
    CHECK_THROWS_AS(pade_delay(-1.0, 2), std::invalid_argument);
}

TEST_CASE("pade_delay matches the exponential series through second order") {
    // The repeated first-order form matches e^{-ts} through s^2 for every n;
    // the s^3 coefficient misses -t^3/6 by exactly t^3/(12 n^2).
    for (int n = 1; n <= 10; ++n) {
        for (double t : {0.7, 2.0, 30.0}) {
            const auto c = gridtf::testing::taylor_of_rational(pade_delay(t, n), 4);
            CHECK(c[0] == Approx(1.0).margin(1e-12));
            CHECK(c[1] == Approx(-t).epsilon(1e-12));
            CHECK(c[2] == Approx(t * t / 2.0).epsilon(1e-12));
            const double expected_err = std::pow(t, 3) / (12.0 * n * n);
            CHECK(c[3] - (-std::pow(t, 3) / 6.0) == Approx(-expected_err).epsilon(1e-9));
        }
    }
}

TEST_CASE("segment numerator constant term cancels exactly") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> times(0.0, 40.0);
    std::uniform_real_distribution<double> values(-30.0, 30.0);
    for (int k = 0; k < 200; ++k) {
        double t0 = times(rng), t1 = times(rng);
        if (t0 == t1) continue;
        if (t0 > t1) std::swap(t0, t1);
        const CurveSegment seg{t0, t1, values(rng), values(rng)};
        const int n = 1 + static_cast<int>(rng() % 10);
        // reconstruct the pre-cancellation numerator independently
        const double d = seg.slope();
        const auto pi = pade_delay(seg.t_start, n);
        const auto pj = pade_delay(seg.t_end, n);
        const Polynomial full =
            poly_sub(poly_mul(Polynomial({d, seg.y_start}), poly_mul(pi.num, pj.den)),
                     poly_mul(Polynomial({d, seg.y_end}), poly_mul(pj.num, pi.den)));
        REQUIRE(std::abs(full[0]) <= 1e-12 * std::max(1.0, full.max_abs_coeff()));
        CHECK_NOTHROW(segment_tf(seg, n));
    }
}

TEST_CASE("ramp-from-origin segment against its closed form") {
    // (0,0)->(30, c): T = c (1 - N_30) / D_30 for n = 2
    const double c = 1.0 / 0.06;
    const CurveSegment seg{0.0, 30.0, 0.0, c};
    const RationalTF tf = segment_tf(seg, 2);

    const Polynomial n30({1.0, -15.0, 56.25});
    const Polynomial d30({1.0, 15.0, 56.25});
    const RationalTF closed =
        RationalTF::make(poly_scale(poly_sub(Polynomial({1.0}), n30), c), d30);
    for (double w : {0.01, 0.1, 1.0, 10.0}) {
        const std::complex<double> s(0.0, w);
        CHECK(std::abs(tf.eval(s) - closed.eval(s)) <= 1e-12 * std::abs(closed.eval(s)));
    }
    // the segment alone removes its value at t_j: zero DC gain
    CHECK(dc_gain(tf) == Approx(0.0).margin(1e-12));

    // adding the terminal hold reproduces the reference block:
    // c / (1 + 7.5 s)^2 == monic 0.2963 / (s^2 + 0.2667 s + 0.01778)
    const RationalTF with_hold = tf_add(tf, tf_scale(pade_delay(30.0, 2), c));
    // repeated roots scatter like eps^(1/multiplicity); pair at 1e-3
    const RationalTF reduced = minreal(with_hold, 1e-3);
    REQUIRE(reduced.den.degree() == 2);
    CHECK(reduced.num[0] / reduced.den[2] == Approx(0.2963).epsilon(0.005));
    CHECK(reduced.den[1] / reduced.den[2] == Approx(0.2667).epsilon(0.005));
    CHECK(reduced.den[0] / reduced.den[2] == Approx(0.01778).epsilon(0.005));
}

TEST_CASE("delayed ramp segment carries the difference-of-powers slope term") {
    // (2,0)->(30,c), n=2: slope term d (28 - 105 s^2) / (D_2 D_30) via
    // A^2 - B^2 = (A - B)(A + B), A = (1 - 0.5 s)(1 + 7.5 s), B = (1 - 7.5 s)(1 + 0.5 s).
    const double c = 1.0 / 0.06;
    const CurveSegment seg{2.0, 30.0, 0.0, c};
    const double d = seg.slope();
    CHECK(d == Approx(0.59524).epsilon(1e-4));

    const Polynomial a = poly_mul(Polynomial({1.0, -0.5}), Polynomial({1.0, 7.5}));
    const Polynomial b = poly_mul(Polynomial({1.0, -7.5}), Polynomial({1.0, 0.5}));
    const Polynomial diff = poly_mul(poly_sub(a, b), poly_add(a, b));  // 28 s - 105 s^3
    CHECK(diff[1] == Approx(28.0));
    CHECK(diff[3] == Approx(-105.0));
    CHECK(diff[0] == 0.0);
    CHECK(diff[2] == 0.0);

    const Polynomial den =
        poly_mul(poly_pow(Polynomial({1.0, 0.5}), 2), poly_pow(Polynomial({1.0, 7.5}), 2));
    const RationalTF slope_term = RationalTF::make(poly_scale(poly_shift_down(diff), d), den);

    // full segment = -c P_30 + slope term
    const RationalTF expected = tf_add(tf_scale(pade_delay(30.0, 2), -c), slope_term);
    const RationalTF got = segment_tf(seg, 2);
    for (double w : {0.02, 0.3, 2.0, 20.0}) {
        const std::complex<double> s(0.0, w);
        CHECK(std::abs(got.eval(s) - expected.eval(s)) <=
              1e-10 * std::max(1.0, std::abs(expected.eval(s))));
    }
}

TEST_CASE("flat segments have zero DC gain") {
    const RationalTF tf = segment_tf({3.0, 8.0, 4.0, 4.0}, 3);
    CHECK(dc_gain(tf) == Approx(0.0).margin(1e-9));
}

TEST_CASE("FCR reference coefficients for n = 2") {
    const auto curve = build_fcr_curve(kGains, 0.0, 30.0);
    const RationalTF tf = curve_to_tf(curve, 2);
    REQUIRE(tf.den.degree() == 2);
    REQUIRE(tf.num.degree() == 0);
    CHECK(tf.den[2] == 1.0);
    CHECK(tf.num[0] == Approx(0.2963).epsilon(0.005));
    CHECK(tf.den[1] == Approx(0.2667).epsilon(0.005));
    CHECK(tf.den[0] == Approx(0.01778).epsilon(0.005));
    // exact fractions: 16.6667/56.25 and [1/56.25, 15/56.25]
    CHECK(tf.num[0] == Approx((1.0 / 0.06) / 56.25).epsilon(1e-12));
}

TEST_CASE("VQ reference coefficients for n = 2 against the telescoped oracle") {
    const auto curve = build_vq_curve(kGains, 5.0, 30.0);
    const RationalTF tf = curve_to_tf(curve, 2);

    // Independent route: slope terms only, since the level terms telescope
    // against the hold for a continuous curve:
    //   T = [d1 (D5 - N5) D30 + d2 (N5 D30 - N30 D5)] / (s D5 D30)
    const Polynomial n5 = poly_pow(Polynomial({1.0, -1.25}), 2);
    const Polynomial d5 = poly_pow(Polynomial({1.0, 1.25}), 2);
    const Polynomial n30 = poly_pow(Polynomial({1.0, -7.5}), 2);
    const Polynomial d30 = poly_pow(Polynomial({1.0, 7.5}), 2);
    const double d1 = (0.9 / 0.06) / 5.0;
    const double d2 = (0.1 / 0.06) / 25.0;
    const Polynomial num_s = poly_add(
        poly_scale(poly_mul(poly_sub(d5, n5), d30), d1),
        poly_scale(poly_sub(poly_mul(n5, d30), poly_mul(n30, d5)), d2));
    REQUIRE(std::abs(num_s[0]) <= 1e-12 * num_s.max_abs_coeff());
    const RationalTF oracle = RationalTF::make(poly_shift_down(num_s), poly_mul(d5, d30));

    REQUIRE(tf.den.degree() == 4);
    REQUIRE(tf.num.degree() == 2);
    for (int k = 0; k <= 4; ++k)
        CHECK(tf.den[static_cast<std::size_t>(k)] ==
              Approx(oracle.den[static_cast<std::size_t>(k)]).margin(1e-9));
    for (int k = 0; k <= 2; ++k)
        CHECK(tf.num[static_cast<std::size_t>(k)] ==
              Approx(oracle.num[static_cast<std::size_t>(k)]).margin(1e-9));

    // reference values, 0.5% relative
    CHECK(tf.num[2] == Approx(9.422).epsilon(0.005));
    CHECK(tf.num[1] == Approx(2.56).epsilon(0.005));
    CHECK(tf.num[0] == Approx(0.1897).epsilon(0.005));
    CHECK(tf.den[3] == Approx(1.867).epsilon(0.005));
    CHECK(tf.den[2] == Approx(1.084).epsilon(0.005));
    CHECK(tf.den[1] == Approx(0.1991).epsilon(0.005));
    CHECK(tf.den[0] == Approx(0.01137).epsilon(0.005));
}

TEST_CASE("FFR synthesis is strictly proper with zero DC gain") {
    const auto curve = build_ffr_curve(kGains, 2.0, 10.0, 20.0, 25.0);
    const RationalTF tf = curve_to_tf(curve, 2);
    CHECK(tf.den.degree() == 6);  // three distinct delay instants, n = 2
    CHECK(std::abs(dc_gain(tf)) < 1e-9);
    CHECK(is_stable(tf));
    CHECK(tf.num.degree() < tf.den.degree());
}

TEST_CASE("a flat hold from t = 0 collapses to a pure gain") {
    PiecewiseCurve flat;
    flat.segments.push_back({0.0, 4.0, 0.0, 0.0});
    flat.tail_value = 0.0;
    const RationalTF zero_tf = curve_to_tf(flat, 2);
    CHECK(dc_gain(zero_tf) == 0.0);

    // steep rise at t=0 then hold: still a proper TF with DC = tail
    const auto step = build_step_curve(3.0, 0.0, 1e-3);
    const RationalTF tf = curve_to_tf(step, 2);
    CHECK(dc_gain(tf) == Approx(3.0).epsilon(1e-9));
}

TEST_CASE("curve_to_tf agrees with direct pointwise evaluation") {
    check_tf_matches_reference(build_fcr_curve(kGains, 2.0, 30.0), 2);
    check_tf_matches_reference(build_vq_curve(kGains, 5.0, 60.0), 4);
    check_tf_matches_reference(build_ffr_curve(kGains, 2.0, 10.0, 20.0, 32.5), 3);

    std::mt19937 rng(13);
    for (int k = 0; k < 25; ++k) {
        const auto curve = gridtf::testing::random_curve(rng);
        const int n = 1 + static_cast<int>(rng() % 10);
        check_tf_matches_reference(curve, n);
    }
}

TEST_CASE("transform is linear over superposition") {
    const auto fcr = build_fcr_curve(kGains, 2.0, 30.0);
    const auto ffr = build_ffr_curve(kGains, 2.0, 10.0, 20.0, 25.0);
    const RationalTF combined = curve_to_tf(superimpose(fcr, ffr), 2);
    const RationalTF summed = tf_add(curve_to_tf(fcr, 2), curve_to_tf(ffr, 2));
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> w(0.01, 20.0);
    for (int k = 0; k < 50; ++k) {
        const std::complex<double> s(0.0, w(rng));
        const auto a = combined.eval(s);
        const auto b = summed.eval(s);
        CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)));
    }
}

TEST_CASE("synthesis is stable by construction") {
    std::mt19937 rng(2024);
    for (int k = 0; k < 100; ++k) {
        const auto curve = gridtf::testing::random_curve(rng);
        const int n = 1 + static_cast<int>(rng() % 10);
        const RationalTF tf = curve_to_tf(curve, n);
        CHECK(is_stable(tf));
        CHECK(dc_gain(tf) == Approx(curve.tail_value).margin(1e-9 * (1.0 + std::abs(curve.tail_value))));
    }
}

TEST_CASE("is_stable flags right-half-plane poles") {
    CHECK_FALSE(is_stable(RationalTF::make(Polynomial({1.0}), Polynomial({-1.0, 1.0}))));
    CHECK(is_stable(RationalTF::make(Polynomial({1.0}), Polynomial({1.0, 1.0}))));

    // synthesized FCR n=2 poles sit at -2n/t = -4/30 twice
    const RationalTF tf = curve_to_tf(build_fcr_curve(kGains, 0.0, 30.0), 2);
    const auto ps = poles(tf);
    REQUIRE(ps.size() == 2);
    CHECK(ps[0].real() == Approx(-2.0 * 2.0 / 30.0).margin(1e-6));
    CHECK(ps[1].real() == Approx(-1.0 / 7.5).margin(1e-6));
}

TEST_CASE("dc_gain rejects a pole at the origin") {
    CHECK_THROWS_AS(dc_gain(RationalTF::make(Polynomial({1.0}), Polynomial({0.0, 1.0}))),
                    std::domain_error);
    CHECK(dc_gain(RationalTF::make(Polynomial({1.0}), Polynomial({1.0}))) == 1.0);
}

TEST_CASE("minreal cancels coincident pairs only") {
    // (s+1) / ((s+1)(s+2))
    const RationalTF tf = RationalTF::make(Polynomial({1.0, 1.0}),
                                           poly_mul(Polynomial({1.0, 1.0}), Polynomial({2.0, 1.0})));
    const RationalTF reduced = minreal(tf, 1e-9);
    REQUIRE(reduced.den.degree() == 1);
    CHECK(dc_gain(reduced) == Approx(0.5));

    // distinct poles survive
    const RationalTF keep = minreal(RationalTF::make(Polynomial({1.0}), Polynomial({2.0, 3.0, 1.0})), 1e-9);
    CHECK(keep.den.degree() == 2);
}

TEST_CASE("build_tdes wires the channels together") {
    const GridCodeSpec gc;
    const DeviceLimits dev;
    const AlphaParams alpha = min_requirements_alpha(gc, kGains);
    const TdesMatrix tdes = build_tdes(alpha, kGains, 2);
    CHECK(dc_gain(tdes.fp) == Approx(1.0 / 0.06).epsilon(1e-9));  // FFR contributes 0 at DC
    CHECK(is_stable(tdes.fp));
    CHECK(is_stable(tdes.vq));
    CHECK(tdes.fp.is_proper());

    // the vq channel ignores the active-power parameters
    AlphaParams other = alpha;
    other.t_i_fcr = 0.5;
    other.t_a_fcr = 10.0;
    other.p_ffr_peak = 30.0;
    const TdesMatrix tdes2 = build_tdes(other, kGains, 2);
    for (int k = 0; k <= tdes.vq.den.degree(); ++k)
        CHECK(tdes.vq.den[static_cast<std::size_t>(k)] ==
              tdes2.vq.den[static_cast<std::size_t>(k)]);
}

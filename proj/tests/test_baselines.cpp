#include "gridtf/baselines.hpp"

#include "gridtf/compliance.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gridtf;
using Catch::Approx;

TEST_CASE("the comparison set holds exactly the two filter settings") {
    const auto specs = reference_baselines();
    REQUIRE(specs.size() == 2);
    CHECK(specs[0].tau_f == Approx(0.1));
    CHECK(specs[1].tau_f == Approx(2.0));
    for (const auto& s : specs) {
        CHECK(s.m == Approx(4.0));
        CHECK(dc_gain(baseline_tf(s, Channel::fp)) == Approx(1.0 / 0.06).epsilon(1e-9));
        CHECK(dc_gain(baseline_tf(s, Channel::vq)) == Approx(1.0 / 0.06).epsilon(1e-9));
    }
    CHECK(baseline_by_name("vi-fast").has_value());
    CHECK(baseline_by_name("vi-slow").has_value());
    CHECK_FALSE(baseline_by_name("nope").has_value());
}

TEST_CASE("baseline fp channels are stable and biproper after filtering") {
    for (const auto& s : reference_baselines()) {
        const RationalTF fp = baseline_tf(s, Channel::fp);
        CHECK(is_stable(fp));
        CHECK(fp.num.degree() == 1);
        CHECK(fp.den.degree() == 1);
    }
}

TEST_CASE("baselines pass the voltage check but miss the fp capability shape") {
    const GainSpec gains;
    const GridCodeSpec gc;
    const DeviceLimits dev;
    const ToleranceSpec tol;
    const AlphaParams alpha = min_requirements_alpha(gc, gains);

    for (const auto& s : reference_baselines()) {
        Trajectory dq = step_response(baseline_tf(s, Channel::vq), 0.05, 120.0, std::nullopt, "dq");
        CHECK(check_vq(dq, alpha, gains, gc, tol).pass);

        Trajectory dp = step_response(baseline_tf(s, Channel::fp), 0.01, 60.0, std::nullopt, "dp");
        const auto fcr = check_fcr(dp, alpha, gains, gc, tol, true);
        CHECK_FALSE(fcr.pass);
        bool corridor_failed = false;
        for (const auto& e : fcr.entries)
            if (e.id == "fcr.curve_corridor") corridor_failed = !e.pass;
        CHECK(corridor_failed);

        const auto ffr = check_ffr(ffr_residual(dp, alpha, gains), alpha, gains, gc, dev, tol);
        CHECK_FALSE(ffr.pass);
    }
}

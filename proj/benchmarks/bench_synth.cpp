#include "gridtf/gridcode.hpp"
#include "gridtf/rational.hpp"
#include "gridtf/simulate.hpp"

#include <benchmark/benchmark.h>

namespace {

const gridtf::GainSpec gains{};
const gridtf::GridCodeSpec gc{};

gridtf::PiecewiseCurve superimposed_min_req() {
    const auto alpha = gridtf::min_requirements_alpha(gc, gains);
    return gridtf::superimpose(
        gridtf::build_fcr_curve(gains, alpha.t_i_fcr, alpha.t_a_fcr),
        gridtf::build_ffr_curve(gains, alpha.t_a_ffr, alpha.t_d_ffr, alpha.t_r_ffr,
                                alpha.p_ffr_peak));
}

void BM_CurveToTf(benchmark::State& state) {
    const auto curve = superimposed_min_req();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gridtf::curve_to_tf(curve, n));
    }
}
BENCHMARK(BM_CurveToTf)->Arg(2)->Arg(6)->Arg(10);

void BM_StabilityCheck(benchmark::State& state) {
    const auto tf = gridtf::curve_to_tf(superimposed_min_req(), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gridtf::is_stable(tf));
    }
}
BENCHMARK(BM_StabilityCheck)->Arg(2)->Arg(10);

void BM_StepResponse(benchmark::State& state) {
    const auto tf = gridtf::curve_to_tf(superimposed_min_req(), static_cast<int>(state.range(0)));
    const auto ss = gridtf::to_state_space(tf);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gridtf::step_response(ss, 0.01, 60.0));
    }
}
BENCHMARK(BM_StepResponse)->Arg(2)->Arg(10);

void BM_TrackingLoop(benchmark::State& state) {
    const auto tf = gridtf::curve_to_tf(superimposed_min_req(), 2);
    const gridtf::DeviceModel dev{};
    for (auto _ : state) {
        benchmark::DoNotOptimize(gridtf::simulate_tracking_loop(tf, dev, 0.01, 40.0));
    }
}
BENCHMARK(BM_TrackingLoop);

}  // namespace

BENCHMARK_MAIN();

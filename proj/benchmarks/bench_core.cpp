#include <benchmark/benchmark.h>

#include "jamcov/area_metrics.hpp"
#include "jamcov/montecarlo.hpp"
#include "jamcov/optimizer.hpp"

namespace {

using namespace jamcov;

Scenario bench_scenario() {
    Scenario s;
    s.d_ab = 20;
    s.powers = {15, 15, 15};
    s.jammers = {14.0, 60.0, 60.0, 13.0, 13.0};
    return s;
}

void BM_LosProbability(benchmark::State& state) {
    const EnvConstants env;
    double r = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(los_probability(13.0, r, env));
        r += 0.1;
    }
}
BENCHMARK(BM_LosProbability);

void BM_A2gPathloss(benchmark::State& state) {
    const EnvConstants env;
    double r = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(a2g_pathloss(13.0, r, env));
        r += 0.1;
    }
}
BENCHMARK(BM_A2gPathloss);

void BM_SopClosedForm(benchmark::State& state) {
    const SnrCoefficients coeffs{9.0, 3.0, JammingMode::jamming};
    const SecrecyParams params{1.0, 2.45, 1.99};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sop_closed_form(coeffs, params));
    }
}
BENCHMARK(BM_SopClosedForm);

void BM_DeltaPoint(benchmark::State& state) {
    const Scenario s = bench_scenario();
    const DeltaEvaluator evaluator(s.layout(), s.powers, s.env, s.rate_rs, 0.5);
    double x = 3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluator.delta_at({x, 5.0}));
        x = x < 35.0 ? x + 0.01 : 3.0;
    }
}
BENCHMARK(BM_DeltaPoint);

void BM_DeltaField(benchmark::State& state) {
    Scenario s = bench_scenario();
    s.region.n_radial = static_cast<unsigned>(state.range(0));
    s.region.n_angular = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(delta_field(s, s.region, DeltaKind::delta, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}
BENCHMARK(BM_DeltaField)->Args({16, 36})->Args({64, 180})->Args({128, 360});

void BM_EmpiricalSop(benchmark::State& state) {
    const SnrCoefficients coeffs{9.0, 3.0, JammingMode::jamming};
    const SecrecyParams params{1.0, 2.45, 1.99};
    McConfig mc{static_cast<std::uint64_t>(state.range(0)), 7, 64, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(empirical_sop(coeffs, params, mc));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EmpiricalSop)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();

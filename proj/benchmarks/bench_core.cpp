#include <benchmark/benchmark.h>

#include "secradii/bounds.hpp"
#include "secradii/classg.hpp"
#include "secradii/radii.hpp"
#include "secradii/verify.hpp"

using namespace secradii;

namespace {

NormalizedSeries make_member(int order) {
    return random_member(GAlphaSpec(1.0), HerglotzSpec::from_seed(7), order);
}

void BM_SeriesMultiply(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const auto f = make_member(order);
    const auto g = make_member(order);
    for (auto _ : state) benchmark::DoNotOptimize(multiply(f, g, order));
}
BENCHMARK(BM_SeriesMultiply)->Arg(64)->Arg(256);

void BM_Exponential(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    for (int k = 1; k <= order; ++k) c[static_cast<std::size_t>(k)] = 1.0 / k;
    const ComplexSeries s(c);
    for (auto _ : state) benchmark::DoNotOptimize(exponential(s, order));
}
BENCHMARK(BM_Exponential)->Arg(64)->Arg(1024);

void BM_RandomMember(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(make_member(order));
}
BENCHMARK(BM_RandomMember)->Arg(64)->Arg(1024);

void BM_RadiusSolve(benchmark::State& state) {
    const Property prop = static_cast<Property>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_property_radius(0.7, 0.2, prop));
}
BENCHMARK(BM_RadiusSolve)->Arg(0)->Arg(1)->Arg(2);

void BM_MembershipSweep(benchmark::State& state) {
    const auto f = make_member(64);
    const DiskGrid grid(16, 64, 0.9);
    for (auto _ : state) benchmark::DoNotOptimize(membership_margin(f, 1.0, grid));
}
BENCHMARK(BM_MembershipSweep);

void BM_EmpiricalRadius(benchmark::State& state) {
    const auto f = make_member(64);
    for (auto _ : state)
        benchmark::DoNotOptimize(empirical_property_radius(f, 8, Property::StarlikeOrder, 0.0, 0.01));
}
BENCHMARK(BM_EmpiricalRadius);

void BM_Fig3Radius(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(fig3_radius(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Fig3Radius)->Arg(3)->Arg(40);

void BM_ThresholdScan(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(threshold_ctc());
        benchmark::DoNotOptimize(threshold_starlike());
    }
}
BENCHMARK(BM_ThresholdScan);

}  // namespace

BENCHMARK_MAIN();

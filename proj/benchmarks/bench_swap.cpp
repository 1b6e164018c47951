#include <benchmark/benchmark.h>

#include <qswap/qswap.hpp>

namespace {

using namespace qswap;

void BM_SwapGeneral(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto rho = isotropic_density(d, 0.9);
    for (auto _ : state) benchmark::DoNotOptimize(swap_general(rho, rho, WeylLabel{1, 0}));
}
BENCHMARK(BM_SwapGeneral)->DenseRange(2, 4);

void BM_SwapPure(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto p = SchmidtVector::uniform(d);
    for (auto _ : state) benchmark::DoNotOptimize(swap_outcome_distribution(p, p));
}
BENCHMARK(BM_SwapPure)->RangeMultiplier(2)->Range(2, 16);

void BM_NegativityDensity(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto rho = isotropic_density(d, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(negativity_density(rho));
}
BENCHMARK(BM_NegativityDensity)->DenseRange(2, 8, 2);

void BM_RealignmentWitness(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto rho = isotropic_density(d, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(realignment_witness(rho));
}
BENCHMARK(BM_RealignmentWitness)->DenseRange(2, 8, 2);

void BM_AverageClosedForms(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto p = SchmidtVector::uniform(d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(avg_iconcurrence(p, p));
        benchmark::DoNotOptimize(avg_negativity(p, p));
    }
}
BENCHMARK(BM_AverageClosedForms)->Arg(3)->Arg(20)->Arg(50);

void BM_TeleportAverage(benchmark::State& state) {
    const auto channel = isotropic_density(2, 0.81);
    for (auto _ : state) benchmark::DoNotOptimize(teleport_average_fidelity(channel, 1000, 42));
}
BENCHMARK(BM_TeleportAverage)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "catweak/catweak.hpp"

namespace {

const double kPhi = std::numbers::pi / 2.02;

void BM_WignerField(benchmark::State& st) {
    const auto s = catweak::CatState::from_phase(kPhi, 6.0, 0.01, 1.0);
    const auto n = static_cast<std::size_t>(st.range(0));
    const auto grid = catweak::default_phase_space_grid(s, n, n);
    for (auto _ : st) benchmark::DoNotOptimize(catweak::wigner_field(s, grid).min_value);
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(n * n));
}
BENCHMARK(BM_WignerField)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_FindZeros(benchmark::State& st) {
    const auto s = catweak::CatState::from_phase(kPhi, 6.0, 0.01, 1.0);
    for (auto _ : st) benchmark::DoNotOptimize(catweak::find_zeros(s, {0.0, 5.0}, 2000).zeros.size());
}
BENCHMARK(BM_FindZeros)->Unit(benchmark::kMillisecond);

void BM_OverlapQuadrature(benchmark::State& st) {
    const auto s = catweak::CatState::from_phase(kPhi, 6.0, 0.01, 1.0);
    for (auto _ : st) benchmark::DoNotOptimize(catweak::overlap_quadrature(s, 1.3));
}
BENCHMARK(BM_OverlapQuadrature)->Unit(benchmark::kMicrosecond);

void BM_WignerQuadrature(benchmark::State& st) {
    const auto s = catweak::CatState::from_phase(kPhi, 6.0, 0.01, 1.0);
    for (auto _ : st) benchmark::DoNotOptimize(catweak::wigner_quadrature(s, 0.3, 0.1));
}
BENCHMARK(BM_WignerQuadrature)->Unit(benchmark::kMicrosecond);

void BM_PositionPeak(benchmark::State& st) {
    const auto s = catweak::CatState::from_phase(kPhi, 1e-4, 1e-3, 1.0);
    for (auto _ : st) benchmark::DoNotOptimize(catweak::position_density_peak(s));
}
BENCHMARK(BM_PositionPeak)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "sympencil/canonical.hpp"
#include "sympencil/experiments.hpp"
#include "sympencil/extract.hpp"
#include "sympencil/geometry.hpp"

namespace sp = sympencil;

namespace {

// K_a with a = ⌊r/2⌋/2 under a random congruence, r = n−2.
sp::SymmetricPencil generic_sample(int n) {
    const sp::GenericComponent c(n, n - 2, (n - 2) / 4);
    const sp::SeededSampler sampler(1);
    auto rng = sampler.stream(0);
    const auto mus = sp::sample_distinct_points(c.eigenvalue_count(), 1e-3, rng);
    return sp::congruence(sp::descriptor_to_pencil(sp::generic_kcf(c, mus)), sampler.random_invertible(n, rng));
}

void BM_ExtractStructure(benchmark::State& state) {
    const auto s = generic_sample(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sp::extract_structure(s));
    }
}
BENCHMARK(BM_ExtractStructure)->DenseRange(4, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_ExtractJordanChains(benchmark::State& state) {
    const int l = static_cast<int>(state.range(0));
    const sp::Complex mu(0.3, -0.2);
    const sp::StructureDescriptor d({sp::JordanFinite{l, mu}, sp::JordanFinite{l, mu}, sp::MinimalPair{1}});
    const sp::SeededSampler sampler(2);
    auto rng = sampler.stream(0);
    const auto s = sp::congruence(sp::descriptor_to_pencil(d), sampler.random_invertible(d.size(), rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sp::extract_structure(s));
    }
}
BENCHMARK(BM_ExtractJordanChains)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_ToeplitzMinimalIndices(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto s = generic_sample(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sp::toeplitz_rank_counts(s, std::nullopt, n));
    }
}
BENCHMARK(BM_ToeplitzMinimalIndices)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);

void BM_CodimOrbitNumeric(benchmark::State& state) {
    const auto s = generic_sample(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sp::codim_orbit_numeric(s));
    }
}
BENCHMARK(BM_CodimOrbitNumeric)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);

void BM_GenericityTrial(benchmark::State& state) {
    const sp::GenericComponent c(5, 4, 1);
    const sp::SeededSampler sampler(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sp::genericity_trial(c, 100, sampler));
    }
}
BENCHMARK(BM_GenericityTrial)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

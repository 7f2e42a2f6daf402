#include <benchmark/benchmark.h>

#include "dcov/cover.hpp"
#include "dcov/discrepancy.hpp"
#include "dcov/probbounds.hpp"
#include "dcov/sampling.hpp"

namespace {

dcov::PointSet bench_points(int d, std::size_t n) {
    dcov::SamplerSpec spec;
    spec.kind = dcov::SamplerKind::MC;
    spec.d = d;
    spec.n = n;
    spec.seed = 42;
    return dcov::mc_sample(spec);
}

void BM_StarDiscSerial(benchmark::State& state) {
    const auto p = bench_points(2, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(dcov::serial_ref::star_disc_exact(p).value);
}
BENCHMARK(BM_StarDiscSerial)->Arg(128)->Arg(256);

void BM_StarDiscOmp(benchmark::State& state) {
    const auto p = bench_points(2, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(dcov::star_disc_exact(p).value);
}
BENCHMARK(BM_StarDiscOmp)->Arg(128)->Arg(256);

void BM_ValidateCoverSerial(benchmark::State& state) {
    const auto cover = dcov::build_cover_2d(0.02);
    for (auto _ : state) {
        auto rep = dcov::serial_ref::validate_cover(cover, 20000, 7);
        benchmark::DoNotOptimize(rep.uncovered);
    }
}
BENCHMARK(BM_ValidateCoverSerial);

void BM_ValidateCoverOmp(benchmark::State& state) {
    const auto cover = dcov::build_cover_2d(0.02);
    for (auto _ : state) {
        auto rep = dcov::validate_cover(cover, 20000, 7);
        benchmark::DoNotOptimize(rep.uncovered);
    }
}
BENCHMARK(BM_ValidateCoverOmp);

void BM_ReplicationsSerial(benchmark::State& state) {
    dcov::SamplerSpec spec;
    spec.d = 2;
    spec.n = 64;
    spec.seed = 1;
    for (auto _ : state) {
        auto v = dcov::serial_ref::run_replications(spec, 50);
        benchmark::DoNotOptimize(v.data());
    }
}
BENCHMARK(BM_ReplicationsSerial);

void BM_ReplicationsOmp(benchmark::State& state) {
    dcov::SamplerSpec spec;
    spec.d = 2;
    spec.n = 64;
    spec.seed = 1;
    for (auto _ : state) {
        auto v = dcov::run_replications(spec, 50);
        benchmark::DoNotOptimize(v.data());
    }
}
BENCHMARK(BM_ReplicationsOmp);

}  // namespace

BENCHMARK_MAIN();

// Microbenchmarks for the hot paths: characteristic-polynomial computation by
// each method, subspace enumeration, projectivization, weight distributions,
// and tuple counting.  Objects memoize ranks and flat lattices internally, so
// each iteration constructs a fresh instance to measure cold-path cost.

#include <benchmark/benchmark.h>

#include "qmatroids/codes.hpp"
#include "qmatroids/projectivize.hpp"

using namespace qmatroids;

namespace {

void bm_char_poly(benchmark::State& state, CharPolyMethod method) {
    auto f = Field::make(2);
    for (auto _ : state) {
        QMatroid m = QMatroid::uniform(f, 4, 2);
        benchmark::DoNotOptimize(char_poly(m, method));
    }
}

void BM_CharPolyDefinition(benchmark::State& state) {
    bm_char_poly(state, CharPolyMethod::definition);
}
void BM_CharPolyFlats(benchmark::State& state) { bm_char_poly(state, CharPolyMethod::flats); }
void BM_CharPolyRecursive(benchmark::State& state) {
    bm_char_poly(state, CharPolyMethod::recursive);
}

void BM_EnumerateSubspaces(benchmark::State& state) {
    auto f = Field::make(2);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_subspaces(f, n));
}

void BM_MobiusRecursive(benchmark::State& state) {
    auto f = Field::make(2);
    Subspace zero = Subspace::zero(f, 4), full = Subspace::full(f, 4);
    for (auto _ : state) benchmark::DoNotOptimize(mobius_subspace_recursive(zero, full));
}

void BM_ProjectivizeFlats(benchmark::State& state) {
    auto f = Field::make(2);
    for (auto _ : state) {
        Projectivization p(QMatroid::uniform(f, 4, 2));
        benchmark::DoNotOptimize(p.matroid().flats().size());
    }
}

void BM_WeightDistributionRank(benchmark::State& state) {
    auto ext = ExtField::make(Field::make(2), 2);
    Matrix<ExtField> g(ext, 2, 4, {1, 0, 2, 3, 0, 1, 1, 2});
    for (auto _ : state) {
        LinearCode c(g);
        benchmark::DoNotOptimize(weight_distribution(c, Metric::rank));
    }
}

void BM_CriticalCount(benchmark::State& state) {
    auto ext = ExtField::make(Field::make(2), 2);
    LinearCode c(Matrix<ExtField>(ext, 2, 3, {1, 0, 2, 0, 1, 3}));
    Subspace w = Subspace::full(c.base_field(), 3);
    const auto t = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(critical_count(c, w, t));
}

BENCHMARK(BM_CharPolyDefinition);
BENCHMARK(BM_CharPolyFlats);
BENCHMARK(BM_CharPolyRecursive);
BENCHMARK(BM_EnumerateSubspaces)->Arg(3)->Arg(4);
BENCHMARK(BM_MobiusRecursive);
BENCHMARK(BM_ProjectivizeFlats);
BENCHMARK(BM_WeightDistributionRank);
BENCHMARK(BM_CriticalCount)->Arg(1)->Arg(2);

} // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "ybh/cohomology.hpp"
#include "ybh/fixtures.hpp"
#include "ybh/random.hpp"

using namespace ybh;

namespace {

const char* const kNames[] = {"z2_adjoint", "trivial_dual", "z3_adjoint", "mcq_z2_z2", "heap_z2"};

void BM_AssembleD2(benchmark::State& state) {
    auto b = make_fixture(kNames[state.range(0)], FieldSpec::prime(101));
    for (auto _ : state) benchmark::DoNotOptimize(differential_matrix(b, 2));
    state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_AssembleD2)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_RankD2(benchmark::State& state) {
    auto k = state.range(1) ? FieldSpec::rational() : FieldSpec::prime(101);
    auto d2 = differential_matrix(make_fixture(kNames[state.range(0)], k), 2);
    for (auto _ : state) benchmark::DoNotOptimize(rank(d2));
    state.SetLabel(std::string(kNames[state.range(0)]) + " over " + k.name());
}
BENCHMARK(BM_RankD2)->ArgsProduct({{0, 2, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Delta3(benchmark::State& state) {
    auto k = FieldSpec::prime(101);
    auto b = make_fixture(kNames[state.range(0)], k);
    Delta3 d3(b);
    Rng rng(1);
    Vector v(Cochain3::size(b.dim()));
    for (auto& x : v) x = random_scalar(rng, k);
    auto x = Cochain3::unflatten(v, k, b.dim());
    for (auto _ : state) benchmark::DoNotOptimize(d3(x));
    state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_Delta3)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

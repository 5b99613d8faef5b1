#include <benchmark/benchmark.h>

#include <cmath>

#include "incgamma/coeffs.hpp"
#include "incgamma/expansions.hpp"
#include "incgamma/inversion.hpp"
#include "incgamma/oracle.hpp"

using namespace incgamma;

namespace {

void BM_HybridTransition(benchmark::State& state) {
    hybrid_q(100.0, 105.0); // warm the coefficient caches
    for (auto _ : state) benchmark::DoNotOptimize(hybrid_q(100.0, 105.0).value);
}
BENCHMARK(BM_HybridTransition);

void BM_HybridOuter(benchmark::State& state) {
    hybrid_q(100.0, 200.0);
    for (auto _ : state) benchmark::DoNotOptimize(hybrid_q(100.0, 200.0).value);
}
BENCHMARK(BM_HybridOuter);

void BM_ReferenceDouble(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(q_reference_double(100.0, 105.0));
}
BENCHMARK(BM_ReferenceDouble);

void BM_OracleQ(benchmark::State& state) {
    const BigFloat a(100.0), x(105.0);
    for (auto _ : state) benchmark::DoNotOptimize(oracle_q(a, x).to_double());
}
BENCHMARK(BM_OracleQ);

void BM_Quantile(benchmark::State& state) {
    quantile(1000.0, 0.1);
    for (auto _ : state) benchmark::DoNotOptimize(quantile(1000.0, 0.1).x);
}
BENCHMARK(BM_Quantile);

void BM_GenC(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gen_C(n).degree());
}
BENCHMARK(BM_GenC)->Arg(8)->Arg(20)->Arg(40);

void BM_GenD(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gen_d(10).degree());
}
BENCHMARK(BM_GenD);

} // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "qclaw/grading.hpp"
#include "qclaw/seedcore.hpp"
#include "qclaw/verify.hpp"

namespace {

using namespace qclaw;

CompatiblePair a3_principal() {
    const IntMat lambda{{0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1},
                        {1, 0, 0, 0, -1, 0}, {0, 1, 0, 1, 0, -1}, {0, 0, 1, 0, 1, 0}};
    const IntMat b_tilde{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    return check_compatible(lambda, b_tilde);
}

void BM_TorusMultiply(benchmark::State& state) {
    const CompatiblePair pair = a3_principal();
    QuantumSeed seed = QuantumSeed::initial(pair);
    for (int k : {0, 1, 2, 0, 1}) seed = mutate_quantum_seed(seed, k);
    const TorusElement& a = seed.vars[0];
    const TorusElement& b = seed.vars[1];
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_TorusMultiply);

void BM_ExactDivision(benchmark::State& state) {
    const CompatiblePair pair = a3_principal();
    QuantumSeed seed = QuantumSeed::initial(pair);
    for (int k : {0, 1, 2, 0, 1}) seed = mutate_quantum_seed(seed, k);
    const TorusElement prod = seed.vars[0] * seed.vars[1];
    for (auto _ : state) benchmark::DoNotOptimize(prod.try_left_divide(seed.vars[0]));
}
BENCHMARK(BM_ExactDivision);

void BM_QuantumMutation(benchmark::State& state) {
    const CompatiblePair pair = a3_principal();
    for (auto _ : state) {
        QuantumSeed seed = QuantumSeed::initial(pair);
        for (int k : {0, 1, 2, 0, 1, 2}) seed = mutate_quantum_seed(seed, k);
        benchmark::DoNotOptimize(seed);
    }
}
BENCHMARK(BM_QuantumMutation);

void BM_GradingLattice(benchmark::State& state) {
    const CompatiblePair pair = a3_principal();
    for (auto _ : state) benchmark::DoNotOptimize(grading_lattice(pair.b_tilde));
}
BENCHMARK(BM_GradingLattice);

void BM_ExchangeGraphDepth4(benchmark::State& state) {
    const CompatiblePair pair = a3_principal();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_exchange_graph(pair, 4));
}
BENCHMARK(BM_ExchangeGraphDepth4);

}  // namespace

BENCHMARK_MAIN();

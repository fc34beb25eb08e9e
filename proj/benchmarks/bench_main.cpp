#include "benchmark/benchmark.h"

#include "qalg/invariants.hpp"
#include "qalg/scenarios.hpp"

using namespace qalg;

static void BM_BuchbergerI2(benchmark::State& state) {
    Ideal ideal = builtin::ideal_i2();
    MonomialOrder order = builtin::order_mhnt();
    for (auto _ : state) {
        GroebnerBasis gb = buchberger(ideal, order);
        benchmark::DoNotOptimize(gb.size());
    }
}
BENCHMARK(BM_BuchbergerI2);

static void BM_HilbertMainRing(benchmark::State& state) {
    Ideal ideal = builtin::ideal_i2();
    MonomialOrder order = builtin::order_mhnt();
    const int bound = static_cast<int>(state.range(0));
    for (auto _ : state) {
        GradedDims dims = hilbert_function(ideal, order, bound);
        benchmark::DoNotOptimize(dims.dim(bound));
    }
}
BENCHMARK(BM_HilbertMainRing)->Arg(20)->Arg(40);

static void BM_FixedQuotientDims(benchmark::State& state) {
    Ideal ideal = builtin::ideal_i2();
    MonomialOrder order = builtin::order_mhnt();
    GroupAction group = builtin::action_c2c2();
    const int bound = static_cast<int>(state.range(0));
    for (auto _ : state) {
        GradedDims dims = fixed_quotient_dims(ideal, group, order, bound);
        benchmark::DoNotOptimize(dims.dim(0));
    }
}
BENCHMARK(BM_FixedQuotientDims)->Arg(20)->Arg(40);

static void BM_ScenarioRun(benchmark::State& state) {
    const auto& s = builtin::scenario(state.range(0) == 0 ? "point-over-torus" : "main");
    for (auto _ : state) {
        SpectralRun run = run_to_infinity(s.base, s.fiber, s.specs, 40);
        benchmark::DoNotOptimize(run.totals.dim(40));
    }
}
BENCHMARK(BM_ScenarioRun)->Arg(0)->Arg(1);

static void BM_RankOracleDegree(benchmark::State& state) {
    Ideal ideal = builtin::ideal_i2();
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(rank_oracle(ideal, degree));
}
BENCHMARK(BM_RankOracleDegree)->Arg(8)->Arg(16)->Arg(24);

BENCHMARK_MAIN();

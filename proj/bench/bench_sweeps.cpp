// Serial reference vs OpenMP sweeps over all coprime pairs with p <= N.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "twobridge/sweep.hpp"

using namespace twobridge;

namespace {

template <VerifyReport (*Run)(const VerifyOptions&)>
void BM_Verify(benchmark::State& state)
{
    VerifyOptions o;
    o.max_p = state.range(0);
    for (auto _ : state) {
        const VerifyReport rep = Run(o);
        if (!rep.ok()) state.SkipWithError("verification failed");
        benchmark::DoNotOptimize(rep.results.data());
    }
    state.counters["threads"] = omp_get_max_threads();
}

template <std::vector<TabulationRow> (*Run)(std::int64_t, bool)>
void BM_Tabulate(benchmark::State& state)
{
    for (auto _ : state) {
        auto rows = Run(state.range(0), true);
        benchmark::DoNotOptimize(rows.data());
    }
    state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_Verify<verify_serial>)->Name("verify/serial")->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Verify<verify_parallel>)->Name("verify/parallel")->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Tabulate<tabulate_serial>)->Name("tabulate/serial")->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Tabulate<tabulate_parallel>)->Name("tabulate/parallel")->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "amicable/aliquot_sieve.hpp"
#include "amicable/factor.hpp"
#include "amicable/int_math.hpp"
#include "amicable/search.hpp"

using namespace amicable;

namespace {

std::vector<u64> random_inputs(u64 lo, u64 hi, std::size_t count)
{
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<u64> dist(lo, hi);
    std::vector<u64> out(count);
    for (auto& v : out) {
        v = dist(rng);
    }
    return out;
}

void BM_FactorizeTable(benchmark::State& state)
{
    const auto inputs = random_inputs(2, 10'000'000, 4096);
    factorize(2);  // builds the shared table outside the timed loop
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(factorize(inputs[i++ & 4095]));
    }
}
BENCHMARK(BM_FactorizeTable);

// Above the SPF table: trial division by sieved primes, then the wheel.
void BM_FactorizeLarge(benchmark::State& state)
{
    const auto inputs = random_inputs(u64{1} << 40, u64{1} << 44, 256);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(factorize(inputs[i++ & 255]));
    }
}
BENCHMARK(BM_FactorizeLarge)->Unit(benchmark::kMicrosecond);

void BM_AliquotSum(benchmark::State& state)
{
    const auto inputs = random_inputs(2, 1'000'000'000, 4096);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(aliquot_sum(inputs[i++ & 4095]));
    }
}
BENCHMARK(BM_AliquotSum);

void BM_IsPrime(benchmark::State& state)
{
    const auto inputs = random_inputs(u64{1} << 50, u64{1} << 62, 4096);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_prime(inputs[i++ & 4095]));
    }
}
BENCHMARK(BM_IsPrime);

void BM_AliquotSieve(benchmark::State& state)
{
    const auto limit = static_cast<u64>(state.range(0));
    for (auto _ : state) {
        u64 acc = 0;
        for_each_aliquot_segment(limit, [&](u64, std::span<const u64> s) { acc += s.back(); });
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_AliquotSieve)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);

void BM_ConstrainedSearch(benchmark::State& state)
{
    const auto limit = static_cast<u64>(state.range(0));
    u64 examined = 0;
    for (auto _ : state) {
        const auto cp = run_constrained_search({0, 1, limit});
        examined = cp.candidates_examined;
        benchmark::DoNotOptimize(cp.pairs_found.data());
    }
    state.counters["candidates"] = static_cast<double>(examined);
}
BENCHMARK(BM_ConstrainedSearch)->Arg(1'000'000)->Arg(100'000'000)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveScan(benchmark::State& state)
{
    const auto limit = static_cast<u64>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_exhaustive_scan(limit).pairs_found.size());
    }
}
BENCHMARK(BM_ExhaustiveScan)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "towercut/class_number.hpp"
#include "towercut/cohomology.hpp"
#include "towercut/cyclotomic.hpp"

using namespace towercut;

namespace {

static void BM_RelativeClassNumber64(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(relative_class_number(64));
}
BENCHMARK(BM_RelativeClassNumber64);

static void BM_RelativeClassNumber125(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(relative_class_number(125));
}
BENCHMARK(BM_RelativeClassNumber125);

static void BM_RelativeClassNumberPrime(benchmark::State& state) {
    const unsigned long p = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(relative_class_number(p));
}
BENCHMARK(BM_RelativeClassNumberPrime)->Arg(23)->Arg(97)->Arg(199);

static void BM_MailletDeterminant(benchmark::State& state) {
    const unsigned long p = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(maillet_hminus(p));
}
BENCHMARK(BM_MailletDeterminant)->Arg(97)->Arg(199);

static void BM_CycloNorm(benchmark::State& state) {
    const unsigned long n = static_cast<unsigned long>(state.range(0));
    std::vector<Rat> coeffs(euler_phi(n));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs[i] = make_rat(static_cast<long>(3 * i + 1), static_cast<long>(i % 5 + 2));
    const CycloElement a(n, coeffs);
    for (auto _ : state) benchmark::DoNotOptimize(cyclo_norm(a));
}
BENCHMARK(BM_CycloNorm)->Arg(60)->Arg(100)->Arg(198);

static void BM_CertifiedPowCompareHuge(benchmark::State& state) {
    const Rat q = make_rat(289, 19106);
    const Int exponent = pow_int(Int(2), 4096);
    const Rat bound = make_rat(Int(1), pow2(512));
    for (auto _ : state)
        benchmark::DoNotOptimize(certified_pow_compare(q, exponent, bound));
}
BENCHMARK(BM_CertifiedPowCompareHuge);

static void BM_AnalyzeTowerZeta64Row(benchmark::State& state) {
    const FieldParams params(Int(2), 32, 1, Int(17));
    for (auto _ : state) benchmark::DoNotOptimize(analyze_tower(params));
}
BENCHMARK(BM_AnalyzeTowerZeta64Row);

}  // namespace

BENCHMARK_MAIN();

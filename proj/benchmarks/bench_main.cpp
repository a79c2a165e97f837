#include <benchmark/benchmark.h>

#include "rsz/analytic.hpp"
#include "rsz/chebotarev.hpp"
#include "rsz/rs_coefficients.hpp"
#include "rsz/symmetric.hpp"

using namespace rsz;

static void BM_SchurEval(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ComplexMultiset x;
    for (int i = 0; i < n; ++i) x.push_back(std::polar(1.0, 0.7 * i + 0.1));
    const auto parts = enumerate_partitions(n - 1, 8);
    for (auto _ : state)
        for (const auto& mu : parts) benchmark::DoNotOptimize(schur_eval(mu, x));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(parts.size()));
}
BENCHMARK(BM_SchurEval)->DenseRange(2, 5);

static void BM_RsCoeffPrimePower(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto pi = SatakeData::sample(n, 1, 30, SatakeSampler::Unitary, 1);
    const auto pi2 = match_central_character(SatakeData::sample(n, 1, 30, SatakeSampler::Grc, 2), pi);
    for (auto _ : state)
        for (int r = 0; r <= 8; ++r) benchmark::DoNotOptimize(rs_coeff_prime_power(pi, pi2, 7, r));
}
BENCHMARK(BM_RsCoeffPrimePower)->DenseRange(1, 4);

static void BM_SelbergSieve(benchmark::State& state) {
    const double z = static_cast<double>(state.range(0));
    for (auto _ : state) {
        SelbergSieve sv([](u64 p) { return 1.0 / static_cast<double>(p); }, z);
        benchmark::DoNotOptimize(sv.main_term_lhs());
    }
}
BENCHMARK(BM_SelbergSieve)->Arg(10)->Arg(30)->Arg(60);

static void BM_ClassCounts(benchmark::State& state) {
    const auto field = AbelianFieldSpec::cyclotomic(12);
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(class_counts(field, x).pi_x);
}
BENCHMARK(BM_ClassCounts)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

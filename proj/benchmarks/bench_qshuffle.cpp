#include <benchmark/benchmark.h>

#include <cstdint>

#include "qshuffle/distribution.hpp"
#include "qshuffle/enumerate.hpp"
#include "qshuffle/laws.hpp"
#include "qshuffle/permutation.hpp"
#include "qshuffle/rational.hpp"
#include "qshuffle/sampler.hpp"
#include "qshuffle/symfunc.hpp"
#include "qshuffle/walk.hpp"
#include "qshuffle/weights.hpp"

namespace {

using namespace qshuffle;

WeightVector three_letters() {
    return WeightVector::probabilities({Rational(1, 2), Rational(1, 3), Rational(1, 6)});
}

void BM_ProbOf(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    WeightVector x = three_letters();
    Permutation w = lehmer_unrank(n, factorial_u64(n) / 2);
    for (auto _ : state) benchmark::DoNotOptimize(prob_of(w, x));
}
BENCHMARK(BM_ProbOf)->Arg(4)->Arg(6)->Arg(8);

void BM_ExactDistribution(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    WeightVector x = three_letters();
    for (auto _ : state) benchmark::DoNotOptimize(exact_distribution(n, x));
}
BENCHMARK(BM_ExactDistribution)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_OracleDistribution(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    WeightVector x = three_letters();
    for (auto _ : state) benchmark::DoNotOptimize(oracle_distribution(n, x));
}
BENCHMARK(BM_OracleDistribution)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_TransitionMatrix(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    WeightVector x = three_letters();
    for (auto _ : state) benchmark::DoNotOptimize(transition_matrix(n, x));
}
BENCHMARK(BM_TransitionMatrix)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_BhrTransitionMatrix(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    WeightVector x = three_letters();
    for (auto _ : state) benchmark::DoNotOptimize(bhr_transition_matrix(n, x));
}
BENCHMARK(BM_BhrTransitionMatrix)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SpectralCheck(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    WeightVector x = three_letters();
    for (auto _ : state) benchmark::DoNotOptimize(spectral_check(n, x, 4));
}
BENCHMARK(BM_SpectralCheck)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Convolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    DistributionOnSn d1 = exact_distribution(n, WeightVector::uniform(2));
    DistributionOnSn d2 = exact_distribution(n, WeightVector::uniform(3));
    for (auto _ : state) benchmark::DoNotOptimize(convolve(d1, d2));
}
BENCHMARK(BM_Convolve)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_MajInvReport(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    WeightVector x = three_letters();
    for (auto _ : state) benchmark::DoNotOptimize(maj_inv_report(n, x));
}
BENCHMARK(BM_MajInvReport)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SchurEval(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    WeightVector x = three_letters();
    std::vector<Partition> shapes = partitions_of(n);
    Partition lambda = shapes[shapes.size() / 2];
    for (auto _ : state) benchmark::DoNotOptimize(schur_eval(lambda, x));
}
BENCHMARK(BM_SchurEval)->Arg(6)->Arg(10)->Arg(20);

void BM_F1Value(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(f1_value(n));
}
BENCHMARK(BM_F1Value)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_SamplerDraw(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Sampler s(WeightSpec::parse("x=1/2,1/3,1/6"), 1);
    for (auto _ : state) benchmark::DoNotOptimize(s.draw(n));
}
BENCHMARK(BM_SamplerDraw)->Arg(4)->Arg(8)->Arg(16);

void BM_SamplerDrawGeometric(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Sampler s(WeightSpec::geometric(Rational(1, 2)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(s.draw(n));
}
BENCHMARK(BM_SamplerDrawGeometric)->Arg(4)->Arg(8)->Arg(16);

void BM_LehmerRoundTrip(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t rank = factorial_u64(n) - 1;
    for (auto _ : state) {
        Permutation w = lehmer_unrank(n, rank);
        benchmark::DoNotOptimize(lehmer_rank(w));
    }
}
BENCHMARK(BM_LehmerRoundTrip)->Arg(8)->Arg(12)->Arg(16);

} // namespace

BENCHMARK_MAIN();

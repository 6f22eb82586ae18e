#include <benchmark/benchmark.h>

#include "lrc/construct.hpp"
#include "lrc/locality.hpp"
#include "lrc/rng.hpp"

namespace {

lrc::FieldMatrix random_matrix(const lrc::Field& f, std::size_t rows, std::size_t cols, std::uint64_t seed) {
    lrc::SplitMix64 rng(seed);
    lrc::FieldMatrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng.below(f.modulus()));
    return m;
}

void BM_rank(benchmark::State& state) {
    const lrc::Field f(50021);
    const auto size = static_cast<std::size_t>(state.range(0));
    const auto m = random_matrix(f, size, size, 1);
    for (auto _ : state) benchmark::DoNotOptimize(lrc::rank(m));
}
BENCHMARK(BM_rank)->Arg(16)->Arg(64)->Arg(128);

void BM_min_distance_words(benchmark::State& state) {
    const auto code = lrc::construct_square(2, 3, 131, 9, lrc::VerifyMode::none()).code;
    for (auto _ : state) benchmark::DoNotOptimize(lrc::min_distance_words(code));
}
BENCHMARK(BM_min_distance_words);

void BM_min_distance_rank(benchmark::State& state) {
    const auto code = lrc::construct_square(2, 3, 131, 9, lrc::VerifyMode::none()).code;
    for (auto _ : state) benchmark::DoNotOptimize(lrc::min_distance_rank(code));
}
BENCHMARK(BM_min_distance_rank);

void BM_certify_locality(benchmark::State& state) {
    const auto code = lrc::construct_square(3, 7, 50021, 9, lrc::VerifyMode::none()).code;
    for (auto _ : state) benchmark::DoNotOptimize(lrc::certify_locality(code, 0, 3, 3));
}
BENCHMARK(BM_certify_locality);

void BM_construct_theorem2(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(lrc::construct_theorem2(3, 2, 3, 10007, 1, lrc::VerifyMode::none()));
}
BENCHMARK(BM_construct_theorem2);

}  // namespace

BENCHMARK_MAIN();

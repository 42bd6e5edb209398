#include "mhgc/cograded.hpp"
#include "mhgc/duality.hpp"
#include "mhgc/examples.hpp"
#include "mhgc/parallel.hpp"
#include "mhgc/pipeline.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace mhgc;

namespace {

// Dense matrix with small random rational entries; fixed seed, so every run sees the same input.
Matrix random_matrix(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(num(rng), den(rng));
    for (std::size_t i = 0; i < n; ++i) m(i, i) += Scalar(static_cast<long>(10 * n));
    return m;
}

void BM_Rank(benchmark::State& state) {
    const Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(16)->Arg(36);

void BM_Invert(benchmark::State& state) {
    const Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(invert(m));
}
BENCHMARK(BM_Invert)->Arg(8)->Arg(16)->Arg(36);

void BM_VerifyComultiplicationS3(benchmark::State& state) {
    set_thread_count(static_cast<unsigned>(state.range(0)));
    const auto pc = function_algebra_example(FiniteGroup::symmetric3());
    for (auto _ : state) benchmark::DoNotOptimize(verify_comultiplication(pc).passed());
    set_thread_count(1);
}
BENCHMARK(BM_VerifyComultiplicationS3)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SolveInvariant(benchmark::State& state) {
    const auto pc = function_algebra_example(FiniteGroup::by_name(state.range(0) == 3 ? "Z3" : "S3"));
    for (auto _ : state) benchmark::DoNotOptimize(solve_invariant(pc, Side::Left).size());
}
BENCHMARK(BM_SolveInvariant)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_DeriveAntipodeS3(benchmark::State& state) {
    const auto pc = function_algebra_example(FiniteGroup::symmetric3());
    const auto inv = invert_canonical_maps(pc);
    const auto eps = derive_counit(pc, inv);
    for (auto _ : state) benchmark::DoNotOptimize(derive_antipode(pc, inv, eps).element_valued());
}
BENCHMARK(BM_DeriveAntipodeS3)->Unit(benchmark::kMillisecond);

void BM_CogradedRoundTrip(benchmark::State& state) {
    const auto pc = function_algebra_example(FiniteGroup::symmetric3());
    for (auto _ : state) benchmark::DoNotOptimize(from_cograded(to_cograded(pc)).order());
}
BENCHMARK(BM_CogradedRoundTrip)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "qmermin/ghz.hpp"
#include "qmermin/hv.hpp"
#include "qmermin/mermin.hpp"

namespace {

using namespace qmermin;

void BM_CyclotomicMultiply(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(-1000, 1000);
  Cyclotomic::Coeffs a{}, b{};
  for (auto& x : a) x = d(rng);
  for (auto& x : b) x = d(rng);
  const Cyclotomic x(a), y(b);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_CyclotomicMultiply);

void BM_ApplyWord(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Basis> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Basis>(i % 3);
  const ObservableWord word(labels);
  const BasisState s(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(applyWord(word, s));
}
BENCHMARK(BM_ApplyWord)->Arg(4)->Arg(16)->Arg(64);

void BM_EigencheckOperator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto op = merminOperator(n, 1);
  const auto ghz = ghzState(n, 1);
  for (auto _ : state) {
    for (const auto& t : op.terms()) benchmark::DoNotOptimize(eigencheck(t.word, t.weight, ghz));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(op.terms().size()));
}
BENCHMARK(BM_EigencheckOperator)->Arg(8)->Arg(12);

void BM_HvMaxBrute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(hvMaxBrute(n, 1, {.jobs = jobs}));
}
BENCHMARK(BM_HvMaxBrute)->Args({8, 1})->Args({11, 1})->Args({11, 4})->Unit(benchmark::kMillisecond);

void BM_HvMaxSymmetric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hvMaxSymmetric(n, theoremKSet(n).front()));
}
BENCHMARK(BM_HvMaxSymmetric)->Arg(13)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_HvMaxTheorem(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hvMaxTheorem(n, theoremKSet(n).front()));
}
BENCHMARK(BM_HvMaxTheorem)->Arg(13)->Arg(40);

}  // namespace

BENCHMARK_MAIN();

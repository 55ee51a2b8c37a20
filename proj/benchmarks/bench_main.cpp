#include <benchmark/benchmark.h>

#include "bwd/charsums.hpp"
#include "bwd/decompose.hpp"
#include "bwd/energy.hpp"
#include "bwd/sets.hpp"

namespace {

void BM_FieldMul(benchmark::State& state) {
  const auto f = bwd::Field::build(2, static_cast<std::uint32_t>(state.range(0)));
  bwd::Element acc{1};
  const bwd::Element g{2};
  for (auto _ : state) {
    acc = f.mul(acc, g);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(16)->Arg(20);

void BM_Energy(benchmark::State& state) {
  const auto f = bwd::Field::build(65537);
  const auto a = bwd::random_subset(f, static_cast<std::uint32_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(bwd::energy(f, a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Energy)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_SumS(benchmark::State& state, bwd::SumMethod method) {
  const auto f = bwd::Field::build(1009);
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto a = bwd::random_subset(f, n, 1), b = bwd::random_subset(f, n, 2),
             c = bwd::random_subset(f, n, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(bwd::sum_S(f, a, b, c, bwd::AdditiveCharacter{bwd::Element{1}}, method));
}
BENCHMARK_CAPTURE(BM_SumS, literal, bwd::SumMethod::kLiteral)->Arg(16)->Arg(64)->Arg(128);
BENCHMARK_CAPTURE(BM_SumS, convolution, bwd::SumMethod::kConvolution)->Arg(16)->Arg(64)->Arg(128);

void BM_Partition(benchmark::State& state) {
  const auto f = bwd::Field::build(4099);
  const auto a = bwd::random_subset(f, static_cast<std::uint32_t>(state.range(0)), 7);
  const auto inv = bwd::RationalFunction::inversion(f);
  bwd::PartitionOptions opts;
  opts.threshold = 0.25 * static_cast<double>(bwd::energy(f, a));
  for (auto _ : state) benchmark::DoNotOptimize(bwd::partition(f, a, inv, opts));
}
BENCHMARK(BM_Partition)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

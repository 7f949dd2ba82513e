#include <benchmark/benchmark.h>

#include "pvf/frames.hpp"
#include "pvf/morphism.hpp"
#include "pvf/random.hpp"
#include "pvf/vecfield.hpp"

namespace {

void BM_PolyMultiply(benchmark::State& state) {
  pvf::Generator gen(42);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = gen.poly(n, 6, 20);
  const auto b = gen.poly(n, 6, 20);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMultiply)->Arg(2)->Arg(3)->Arg(4);

void BM_Bracket(benchmark::State& state) {
  pvf::Generator gen(42);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto d = gen.field(n, 4, 6);
  const auto e = gen.field(n, 4, 6);
  for (auto _ : state) benchmark::DoNotOptimize(pvf::bracket(d, e));
}
BENCHMARK(BM_Bracket)->Arg(2)->Arg(3)->Arg(4);

void BM_Pullback(benchmark::State& state) {
  pvf::Generator gen(42);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto phi = pvf::materialize(gen.word(n, 4, 2));
  const auto d = gen.field(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(pvf::pullback(phi, d));
}
BENCHMARK(BM_Pullback)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_FrameAnalysis(benchmark::State& state) {
  pvf::Generator gen(42);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto phi = pvf::materialize(gen.word(n, 3, 2));
  std::vector<pvf::VectorField> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(pvf::pullback(phi, pvf::VectorField::coordinate(n, i)));
  const auto frame = pvf::Frame::make(std::move(xs));
  for (auto _ : state) benchmark::DoNotOptimize(pvf::equivalence_report(frame));
}
BENCHMARK(BM_FrameAnalysis)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_DerivedSpan(benchmark::State& state) {
  const auto d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pvf::derived_span_check(3, d, 3));
}
BENCHMARK(BM_DerivedSpan)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

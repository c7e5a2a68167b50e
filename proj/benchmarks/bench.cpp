#include <benchmark/benchmark.h>

#include "qcdesign/design.hpp"
#include "qcdesign/oracle.hpp"
#include "qcdesign/search.hpp"
#include "qcdesign/theory.hpp"

using namespace qcd;

namespace {

DesignMatrix design_for(int n) {
  // Balanced profile so every n gets a nontrivial spectrum.
  std::array<int, 10> l{};
  for (int i = 0; i < n; ++i) l[static_cast<std::size_t>(2 + i % 8)] += 1;
  return build_design(spec_from_lambda(Family::SixteenthEven, LambdaProfile(l)));
}

void BM_Build(benchmark::State& state) {
  const auto spec = spec_from_lambda(Family::SixteenthEven, LambdaProfile::parse("0011120000"));
  for (auto _ : state) benchmark::DoNotOptimize(build_design(spec));
}
BENCHMARK(BM_Build);

void BM_Transform(benchmark::State& state) {
  const auto d = design_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(j_characteristics(d));
  state.SetLabel("q=" + std::to_string(d.factors()));
}
BENCHMARK(BM_Transform)->DenseRange(2, 6);

void BM_TheorySpectrum(benchmark::State& state) {
  const auto l = LambdaProfile::parse("0020220000");
  for (auto _ : state) benchmark::DoNotOptimize(theory_spectrum(Family::EighthOdd, l, BranchPair{2, 0}));
}
BENCHMARK(BM_TheorySpectrum);

void BM_Projectivity(benchmark::State& state) {
  const auto d = design_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(projectivity(d));
}
BENCHMARK(BM_Projectivity)->DenseRange(2, 4);

void BM_Search(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(optimize(n, Family::SixteenthOdd, Criterion::MinAberration));
}
BENCHMARK(BM_Search)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

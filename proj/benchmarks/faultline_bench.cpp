#include <benchmark/benchmark.h>

#include <random>

#include "faultline/document.hpp"
#include "faultline/dpv.hpp"
#include "faultline/fault.hpp"
#include "faultline/render.hpp"
#include "faultline/selftest.hpp"
#include "faultline/smith.hpp"

namespace {

faultline::DPVSubstitution bundled(const std::string& name) {
  return faultline::build_dpv(faultline::parse_document(faultline::bundled_document(name).json));
}

void BM_BoundaryTrace(benchmark::State& state) {
  auto s1 = faultline::Substitution::from_strings({"a", "b"}, {"ba", "aaa"});
  auto s2 = faultline::Substitution::from_strings({"a", "b"}, {"ab", "aaa"});
  for (auto _ : state)
    benchmark::DoNotOptimize(faultline::boundary_trace(s1, s2, 0, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_BoundaryTrace)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> d(-50, 50);
  const size_t n = static_cast<size_t>(state.range(0));
  faultline::IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(faultline::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_Cohomology(benchmark::State& state) {
  auto d = bundled("six_tile_dpv");
  for (auto _ : state) benchmark::DoNotOptimize(faultline::cohomology(d));
}
BENCHMARK(BM_Cohomology)->Unit(benchmark::kMillisecond);

void BM_RenderPatch(benchmark::State& state) {
  auto d = bundled("simple_dpv");
  for (auto _ : state)
    benchmark::DoNotOptimize(faultline::emit_svg(faultline::generate_patch(d, 0, static_cast<unsigned>(state.range(0)))));
}
BENCHMARK(BM_RenderPatch)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

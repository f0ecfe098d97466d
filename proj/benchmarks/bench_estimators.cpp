#include <benchmark/benchmark.h>

#include "copula_transport/baselines.hpp"
#include "copula_transport/dependence.hpp"
#include "copula_transport/synth.hpp"

namespace copula_transport {
namespace {

Panel noisy(PatternKind kind, std::size_t n) {
  PatternSpec spec;
  spec.kind = kind;
  spec.noise_level = 1.0;
  spec.sample_size = n;
  spec.seed = 3;
  return generate_pattern(spec);
}

void BM_Tdc(benchmark::State& state) {
  const Panel p = noisy(PatternKind::kCircle, static_cast<std::size_t>(state.range(0)));
  const auto specs = pattern_target_specs(PatternKind::kCircle);
  const TargetSet targets = build_target_set(specs, 16, 0);
  const Panel x = p.columns(0, 1), y = p.columns(1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(tdc(x, y, targets, 16).value);
}
BENCHMARK(BM_Tdc)->Arg(100)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_Dcor(benchmark::State& state) {
  const Panel p = noisy(PatternKind::kQuadratic, static_cast<std::size_t>(state.range(0)));
  const Panel x = p.columns(0, 1), y = p.columns(1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(dcor(x, y));
}
BENCHMARK(BM_Dcor)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_Rdc(benchmark::State& state) {
  const Panel p = noisy(PatternKind::kQuadratic, static_cast<std::size_t>(state.range(0)));
  const Panel x = p.columns(0, 1), y = p.columns(1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rdc(x, y, {}, 1));
}
BENCHMARK(BM_Rdc)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_IntraMatrix(benchmark::State& state) {
  std::vector<Panel> panels;
  for (std::uint64_t s = 0; s < 10; ++s) {
    panels.push_back(generate_gaussian_panel(500, 2, 0.1 * static_cast<double>(s), s, 0));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(distance_matrix(panels, IntraMode{}, 16, {}, 1));
  }
}
BENCHMARK(BM_IntraMatrix)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace copula_transport

#include <benchmark/benchmark.h>

#include "copula_transport/copula.hpp"
#include "copula_transport/synth.hpp"
#include "copula_transport/transport.hpp"

namespace copula_transport {
namespace {

Signature sample_copula(std::size_t resolution, std::uint64_t seed) {
  PatternSpec spec;
  spec.kind = PatternKind::kSineHigh;
  spec.noise_level = 1.0;
  spec.seed = seed;
  return bin_copula(empirical_copula_transform(generate_pattern(spec)), resolution);
}

// Independence copula against a noisy sample on an m x m grid; the shape of
// the dominant EMD inside TDC.
void BM_ExactAgainstIndependence(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Signature ind = independence_signature(2, m);
  const Signature sample = sample_copula(m, 1);
  for (auto _ : state) benchmark::DoNotOptimize(emd(ind, sample));
  state.counters["atoms"] = static_cast<double>(ind.size() + sample.size());
}
BENCHMARK(BM_ExactAgainstIndependence)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ExactSampleToSample(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Signature a = sample_copula(m, 1);
  const Signature b = sample_copula(m, 2);
  for (auto _ : state) benchmark::DoNotOptimize(emd(a, b));
}
BENCHMARK(BM_ExactSampleToSample)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Sinkhorn(benchmark::State& state) {
  const Signature a = sample_copula(8, 1);
  const Signature b = sample_copula(8, 2);
  SinkhornOptions opts;
  opts.epsilon = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(emd_sinkhorn(a, b, opts).cost);
}
BENCHMARK(BM_Sinkhorn)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_BinCopula(benchmark::State& state) {
  PatternSpec spec;
  spec.kind = PatternKind::kCircle;
  spec.noise_level = 0.5;
  spec.sample_size = static_cast<std::size_t>(state.range(0));
  const Panel panel = generate_pattern(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bin_copula(empirical_copula_transform(panel), 16));
  }
}
BENCHMARK(BM_BinCopula)->Arg(500)->Arg(5000);

}  // namespace
}  // namespace copula_transport

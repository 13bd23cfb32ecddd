#include <benchmark/benchmark.h>

#include <memory>

#include "eucgraph/spectrum.hpp"

using namespace eucgraph;

namespace {

ColoredCayleyGraph make_graph(std::uint32_t p, std::uint32_t r, std::uint32_t d) {
  auto f = std::make_shared<Field>(make_field(p, r));
  return ColoredCayleyGraph(QuadraticSpace(QuadraticForm::identity(f, d)));
}

void BM_SpectrumNaive(benchmark::State& state) {
  auto g = make_graph(13, 1, std::uint32_t(state.range(0)));
  for (auto _ : state) {
    auto sums = character_sums(g.field(), g.dim(), g.sphere(1).points,
                               SpectrumMethod::kCharacterSum);
    benchmark::DoNotOptimize(sums);
  }
  state.SetItemsProcessed(state.iterations() * std::int64_t(g.vertex_count()));
}

void BM_SpectrumDft(benchmark::State& state) {
  auto g = make_graph(13, 1, std::uint32_t(state.range(0)));
  for (auto _ : state) {
    auto sums = character_sums(g.field(), g.dim(), g.sphere(1).points, SpectrumMethod::kDft);
    benchmark::DoNotOptimize(sums);
  }
  state.SetItemsProcessed(state.iterations() * std::int64_t(g.vertex_count()));
}

void BM_SpectrumDftExtensionField(benchmark::State& state) {
  auto g = make_graph(3, 4, 2);  // F_81^2, 6561 vertices, 8 base-3 axes
  for (auto _ : state) {
    auto sums = character_sums(g.field(), g.dim(), g.sphere(1).points, SpectrumMethod::kDft);
    benchmark::DoNotOptimize(sums);
  }
  state.SetItemsProcessed(state.iterations() * std::int64_t(g.vertex_count()));
}

void BM_Certificate(benchmark::State& state) {
  auto g = make_graph(13, 1, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_spectrum(g, 1).max_nontrivial);
  }
}

}  // namespace

BENCHMARK(BM_SpectrumNaive)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectrumDft)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectrumDftExtensionField)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Certificate)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

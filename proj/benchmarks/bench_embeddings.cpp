#include <benchmark/benchmark.h>

#include <memory>
#include <numeric>

#include "eucgraph/embeddings.hpp"
#include "eucgraph/rng.hpp"

using namespace eucgraph;

namespace {

ColoredCayleyGraph make_graph(std::uint32_t q, std::uint32_t d) {
  auto f = std::make_shared<Field>(make_field(q, 1));
  return ColoredCayleyGraph(QuadraticSpace(QuadraticForm::identity(f, d)));
}

void BM_TriangleFullSpace(benchmark::State& state) {
  auto g = make_graph(std::uint32_t(state.range(0)), 2);
  std::vector<std::uint64_t> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  ColoredPattern tri = ColoredPattern::triangle(1, 1, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_embeddings(g, all, tri).ordered);
  }
}

void BM_TriangleSubset(benchmark::State& state) {
  auto g = make_graph(13, 2);
  SplitMix64 rng(1);
  auto subset = sample_without_replacement(g.vertex_count(), std::uint64_t(state.range(0)), rng);
  ColoredPattern tri = ColoredPattern::triangle(1, 2, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_embeddings(g, subset, tri).ordered);
  }
}

void BM_NaiveOracle(benchmark::State& state) {
  auto g = make_graph(7, 2);
  SplitMix64 rng(2);
  auto subset = sample_without_replacement(g.vertex_count(), 20, rng);
  ColoredPattern tri = ColoredPattern::triangle(1, 1, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(naive_count_oracle(g, subset, tri));
  }
}

}  // namespace

BENCHMARK(BM_TriangleFullSpace)->Arg(7)->Arg(13)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TriangleSubset)->Arg(40)->Arg(120)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_NaiveOracle)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();

#ifndef EUCGRAPH_PSEUDORANDOM_HPP
#define EUCGRAPH_PSEUDORANDOM_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eucgraph/cayley.hpp"
#include "eucgraph/embeddings.hpp"
#include "eucgraph/spectrum.hpp"

namespace eucgraph {

// Ordered pairs (u, v) with u in B, v in C and Q(u - v) = color. Exact,
// O(|B| * valency + n). B and C need not be disjoint or sorted; duplicate
// vertices are rejected.
std::uint64_t count_bipartite_edges(const ColoredCayleyGraph& graph, std::uint32_t color,
                                    std::span<const std::uint64_t> b,
                                    std::span<const std::uint64_t> c);

struct MixingCheck {
  std::uint64_t size_b = 0, size_c = 0;
  std::uint64_t edges = 0;
  double predicted = 0.0;   // (valency / n) |B| |C|
  double bound = 0.0;       // lambda sqrt(|B| |C|)
  double defect = 0.0;      // |edges - predicted|
  bool ok = false;          // defect <= bound
};

MixingCheck mixing_check(const ColoredCayleyGraph& graph, std::uint32_t color,
                         std::span<const std::uint64_t> b, std::span<const std::uint64_t> c,
                         double lambda);

struct MixingRun {
  std::uint32_t color = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double lambda = 0.0;
  std::uint64_t violations = 0;
  double worst_excess = 0.0;   // max over checks of defect - bound
  std::vector<MixingCheck> checks;
};

// Draws `samples` pairs of uniform random subsets and tests the mixing
// inequality on each. size_b / size_c of 0 mean "draw the size uniformly
// from [1, n] per sample". The subset stream depends only on (seed, sizes,
// n), never on lambda, so reruns with a different lambda see identical
// subsets.
MixingRun run_mixing(const ColoredCayleyGraph& graph, std::uint32_t color,
                     std::uint64_t samples, std::uint64_t seed, double lambda,
                     std::uint64_t size_b = 0, std::uint64_t size_c = 0);

struct ColorSpectrumStat {
  std::uint32_t color = 0;
  std::uint64_t valency = 0;
  double max_nontrivial = 0.0;
  bool ramanujan_ok = false;
};

// Spectral certificate over all q-1 color classes.
struct RCCertificate {
  std::uint64_t n = 0;
  std::vector<ColorSpectrumStat> per_color;
  std::uint64_t d_min = 0, d_max = 0;
  double lambda_max = 0.0;
  bool all_regular = false;    // every sphere closed under negation
  bool ramanujan_all = false;
  bool rc_ok = false;          // all_regular and lambda_max < d_min
};

RCCertificate certify_rc(const ColoredCayleyGraph& graph,
                         SpectrumMethod method = SpectrumMethod::kAuto);

// The four global kaleidoscope statistics: color classes partition almost
// all pairs (defect = share of pairs at distance 0), class sizes are within
// a constant factor of each other, and subsets above the threshold size
// should contain every pattern.
struct KaleidoReport {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> color_edges;   // unordered edge count per color 1..q-1
  std::uint64_t zero_pairs = 0;             // unordered pairs x != y with Q(x-y) = 0
  double ratio_max = 0.0;                   // max |E^i| / |E^j|
  double completeness_defect = 0.0;         // zero_pairs / C(n, 2)
  std::uint32_t k = 0;
  std::uint32_t pattern_edges = 0;
  double constant = 0.0;
  double threshold_size = 0.0;              // C n^{(k-1)/k} (q-1)^{#edges/k}
};

KaleidoReport kaleido_conditions(const ColoredCayleyGraph& graph, std::uint32_t k,
                                 std::uint32_t pattern_edges, double constant);

struct ContainmentCheck {
  std::string name;
  std::uint64_t subset_size = 0;
  std::uint64_t count = 0;
  bool found = false;
};

// Samples one subset of the threshold size per pattern (seeded, capped at n)
// and counts that pattern inside it.
std::vector<ContainmentCheck> kaleido_containment(
    const ColoredCayleyGraph& graph,
    const std::vector<std::pair<std::string, ColoredPattern>>& patterns, double constant,
    std::uint64_t seed);

}  // namespace eucgraph

#endif

#ifndef EUCGRAPH_EMBEDDINGS_HPP
#define EUCGRAPH_EMBEDDINGS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "eucgraph/cayley.hpp"

namespace eucgraph {

// Pattern graph on vertices 0..k-1 with colored edges. Edges are stored
// i < j, duplicates rejected, colors nonzero (0 is the non-edge marker in
// the host graph). Isolated pattern vertices are fine.
class ColoredPattern {
 public:
  struct Edge {
    std::uint32_t i, j, color;
  };

  ColoredPattern(std::uint32_t k, std::vector<Edge> edges);

  std::uint32_t k() const noexcept { return k_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::uint32_t edge_count() const noexcept { return std::uint32_t(edges_.size()); }
  // color of {i, j}, 0 if not an edge
  std::uint32_t color_between(std::uint32_t i, std::uint32_t j) const;

  static ColoredPattern single_edge(std::uint32_t color);
  static ColoredPattern path2(std::uint32_t c1, std::uint32_t c2);  // 0-1-2
  static ColoredPattern triangle(std::uint32_t c01, std::uint32_t c02, std::uint32_t c12);

 private:
  std::uint32_t k_;
  std::vector<Edge> edges_;
};

// Color-preserving automorphisms of the pattern, counted by enumerating all
// k! vertex permutations. Refuses k > 10 (3.6M permutations is the limit of
// sane; the counting formulas only need small patterns).
std::uint64_t aut_c(const ColoredPattern& pattern);

struct EmbeddingCount {
  std::uint64_t subset_size = 0;
  std::uint64_t ordered = 0;      // injective color-preserving maps V(H) -> E
  std::uint64_t unordered = 0;    // ordered / |Aut_c(H)|
  std::uint64_t aut = 1;
  double predicted_main = 0.0;    // |E|^k q^{-#edges}, the ordered-count target
  double predicted_tool3 = 0.0;   // (|E|^k / aut) prod_e valency(c_e)/n, unordered target
  bool in_theorem_range = false;  // k >= 2 and k-1 <= #edges <= d
  bool threshold_met = false;     // |E| >= C q^{(d-1)/2 + k - 1}
};

// Counts injective, color-preserving (not induced) embeddings of the pattern
// into the subset E of vertices. E must be ascending and duplicate-free;
// indices out of the vertex range raise SubsetOutOfRange. Backtracking over
// pattern vertices, most-constrained first, with isolated vertices folded
// into one falling-factorial term. constant_C feeds only threshold_met.
EmbeddingCount count_embeddings(const ColoredCayleyGraph& graph,
                                std::span<const std::uint64_t> subset,
                                const ColoredPattern& pattern, double constant_C = 1.0);

// Plain nested enumeration of all |E|^(k) injective tuples. Exponential;
// refuses when |E|^k > cap. Exists to check count_embeddings, nothing else.
std::uint64_t naive_count_oracle(const ColoredCayleyGraph& graph,
                                 std::span<const std::uint64_t> subset,
                                 const ColoredPattern& pattern,
                                 std::uint64_t cap = 10000000);

struct PredictionReport {
  double ratio_main = 0.0;          // ordered / predicted_main
  double ratio_tool3 = 0.0;         // unordered / predicted_tool3
  double lambda = 0.0;
  double tool3_requirement = 0.0;   // lambda * (n / d_min)^{max pattern degree}
  bool tool3_size_ok = false;       // subset_size >= tool3_requirement
  bool in_theorem_range = false;
  bool threshold_met = false;
};

// How the measured counts sit against both predictions; lambda and d_min
// come from a spectral certificate of the host graph.
PredictionReport prediction_report(const EmbeddingCount& count, const ColoredPattern& pattern,
                                   const ColoredCayleyGraph& graph, double lambda,
                                   std::uint64_t d_min);

}  // namespace eucgraph

#endif

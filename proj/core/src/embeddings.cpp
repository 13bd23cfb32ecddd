#include "eucgraph/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace eucgraph {

ColoredPattern::ColoredPattern(std::uint32_t k, std::vector<Edge> edges)
    : k_(k), edges_(std::move(edges)) {
  if (k_ < 1) raise(errc::config_error, "pattern needs at least one vertex");
  for (auto& e : edges_) {
    if (e.i > e.j) std::swap(e.i, e.j);
    if (e.i == e.j) raise(errc::config_error, "pattern has a loop");
    if (e.j >= k_) raise(errc::index_out_of_range, "pattern edge endpoint out of range");
    if (e.color == 0) raise(errc::color_zero, "pattern edge colored 0");
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (std::size_t t = 1; t < edges_.size(); ++t)
    if (edges_[t - 1].i == edges_[t].i && edges_[t - 1].j == edges_[t].j)
      raise(errc::config_error, "pattern has a duplicate edge");
}

std::uint32_t ColoredPattern::color_between(std::uint32_t i, std::uint32_t j) const {
  if (i > j) std::swap(i, j);
  for (const auto& e : edges_)
    if (e.i == i && e.j == j) return e.color;
  return 0;
}

ColoredPattern ColoredPattern::single_edge(std::uint32_t color) {
  return ColoredPattern(2, {{0, 1, color}});
}

ColoredPattern ColoredPattern::path2(std::uint32_t c1, std::uint32_t c2) {
  return ColoredPattern(3, {{0, 1, c1}, {1, 2, c2}});
}

ColoredPattern ColoredPattern::triangle(std::uint32_t c01, std::uint32_t c02, std::uint32_t c12) {
  return ColoredPattern(3, {{0, 1, c01}, {0, 2, c02}, {1, 2, c12}});
}

std::uint64_t aut_c(const ColoredPattern& pattern) {
  const std::uint32_t k = pattern.k();
  if (k > 10) raise(errc::pattern_too_large, "automorphism enumeration capped at 10 vertices");
  std::vector<std::vector<std::uint32_t>> color(k, std::vector<std::uint32_t>(k, 0));
  for (const auto& e : pattern.edges()) {
    color[e.i][e.j] = e.color;
    color[e.j][e.i] = e.color;
  }
  std::vector<std::uint32_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::uint32_t i = 0; i < k && ok; ++i)
      for (std::uint32_t j = i + 1; j < k && ok; ++j)
        if (color[perm[i]][perm[j]] != color[i][j]) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

namespace {

void check_subset(const ColoredCayleyGraph& graph, std::span<const std::uint64_t> subset) {
  std::uint64_t prev = 0;
  bool first = true;
  for (std::uint64_t v : subset) {
    if (v >= graph.vertex_count())
      raise(errc::subset_out_of_range, "subset member out of the vertex range");
    if (!first && v <= prev)
      raise(errc::config_error, "subset must be strictly ascending");
    prev = v;
    first = false;
  }
}

// Placement order: positive-degree vertices first, each step picking the
// unplaced vertex with the most already-placed neighbors (ties: higher
// degree, then lower index); isolated vertices are a pure falling-factorial
// tail and go last.
std::vector<std::uint32_t> placement_order(const ColoredPattern& pattern) {
  const std::uint32_t k = pattern.k();
  std::vector<std::uint32_t> degree(k, 0);
  for (const auto& e : pattern.edges()) {
    ++degree[e.i];
    ++degree[e.j];
  }
  std::vector<std::uint32_t> order;
  std::vector<bool> placed(k, false);
  order.reserve(k);
  for (;;) {
    std::int64_t best = -1;
    std::uint64_t best_key = 0;
    for (std::uint32_t v = 0; v < k; ++v) {
      if (placed[v] || degree[v] == 0) continue;
      std::uint32_t back = 0;
      for (const auto& e : pattern.edges()) {
        if (e.i == v && placed[e.j]) ++back;
        if (e.j == v && placed[e.i]) ++back;
      }
      std::uint64_t key = (std::uint64_t(back) << 40) | (std::uint64_t(degree[v]) << 20) |
                          (k - v);
      if (std::int64_t(key) > std::int64_t(best_key) || best < 0) {
        best = v;
        best_key = key;
      }
    }
    if (best < 0) break;
    placed[best] = true;
    order.push_back(std::uint32_t(best));
  }
  for (std::uint32_t v = 0; v < k; ++v)
    if (!placed[v]) order.push_back(v);
  return order;
}

struct BackEdge {
  std::uint32_t pos;      // earlier placement position
  std::uint32_t color;
};

struct Counter {
  const ColoredCayleyGraph& graph;
  std::span<const std::uint64_t> subset;
  std::uint32_t k;
  std::uint32_t first_isolated;             // positions >= this have no edges at all
  std::vector<std::vector<BackEdge>> back;  // per position
  std::vector<bool> in_subset;
  std::vector<bool> used;
  std::vector<std::uint64_t> assigned;
  std::uint64_t total = 0;

  void run(std::uint32_t t) {
    if (t == first_isolated) {
      std::uint64_t ways = 1;
      const std::uint64_t m = subset.size();
      for (std::uint32_t i = t; i < k; ++i) ways *= m - i;
      total += ways;
      return;
    }
    const auto& edges = back[t];
    if (edges.empty()) {
      for (std::uint64_t v : subset) {
        if (used[v]) continue;
        used[v] = true;
        assigned[t] = v;
        run(t + 1);
        used[v] = false;
      }
      return;
    }
    // expand from the anchor with the smallest sphere, verify the rest
    std::size_t a = 0;
    for (std::size_t i = 1; i < edges.size(); ++i)
      if (graph.valency(edges[i].color) < graph.valency(edges[a].color)) a = i;
    const std::uint64_t u = assigned[edges[a].pos];
    for (std::uint64_t s : graph.sphere(edges[a].color).points) {
      std::uint64_t v = graph.translate(u, s);
      if (!in_subset[v] || used[v]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < edges.size() && ok; ++i) {
        if (i == a) continue;
        if (graph.color_of(assigned[edges[i].pos], v) != edges[i].color) ok = false;
      }
      if (!ok) continue;
      used[v] = true;
      assigned[t] = v;
      run(t + 1);
      used[v] = false;
    }
  }
};

}  // namespace

EmbeddingCount count_embeddings(const ColoredCayleyGraph& graph,
                                std::span<const std::uint64_t> subset,
                                const ColoredPattern& pattern, double constant_C) {
  check_subset(graph, subset);
  for (const auto& e : pattern.edges()) graph.require_color(e.color);

  const std::uint32_t k = pattern.k();
  const std::uint64_t m = subset.size();

  EmbeddingCount out;
  out.subset_size = m;
  out.aut = aut_c(pattern);

  auto order = placement_order(pattern);
  std::vector<std::uint32_t> pos_of(k);
  for (std::uint32_t t = 0; t < k; ++t) pos_of[order[t]] = t;

  std::vector<std::uint32_t> degree(k, 0);
  for (const auto& e : pattern.edges()) {
    ++degree[e.i];
    ++degree[e.j];
  }
  std::uint32_t first_isolated = k;
  for (std::uint32_t t = 0; t < k; ++t)
    if (degree[order[t]] == 0) { first_isolated = t; break; }

  if (m >= k) {
    Counter counter{graph, subset, k, first_isolated, {}, {}, {}, {}, 0};
    counter.back.resize(k);
    for (const auto& e : pattern.edges()) {
      std::uint32_t ti = pos_of[e.i], tj = pos_of[e.j];
      if (ti > tj) std::swap(ti, tj);
      counter.back[tj].push_back({ti, e.color});
    }
    counter.in_subset.assign(graph.vertex_count(), false);
    for (std::uint64_t v : subset) counter.in_subset[v] = true;
    counter.used.assign(graph.vertex_count(), false);
    counter.assigned.assign(k, 0);
    counter.run(0);
    out.ordered = counter.total;
  }

  if (out.ordered % out.aut != 0)
    raise(errc::internal_error, "ordered count not divisible by the automorphism count");
  out.unordered = out.ordered / out.aut;

  const double q = double(graph.field().q());
  const double n = double(graph.vertex_count());
  out.predicted_main = std::pow(double(m), double(k)) * std::pow(q, -double(pattern.edge_count()));
  double tool3 = std::pow(double(m), double(k)) / double(out.aut);
  for (const auto& e : pattern.edges()) tool3 *= double(graph.valency(e.color)) / n;
  out.predicted_tool3 = tool3;

  const double dd = double(graph.dim());
  out.threshold_met =
      double(m) >= constant_C * std::pow(q, (dd - 1.0) / 2.0 + double(k) - 1.0);
  out.in_theorem_range =
      k >= 2 && (k - 1) <= pattern.edge_count() && pattern.edge_count() <= graph.dim();
  return out;
}

std::uint64_t naive_count_oracle(const ColoredCayleyGraph& graph,
                                 std::span<const std::uint64_t> subset,
                                 const ColoredPattern& pattern, std::uint64_t cap) {
  check_subset(graph, subset);
  for (const auto& e : pattern.edges()) graph.require_color(e.color);

  const std::uint32_t k = pattern.k();
  const std::uint64_t m = subset.size();
  double tuples = std::pow(double(m), double(k));
  if (tuples > double(cap))
    raise(errc::too_large, "naive enumeration would exceed the tuple cap");

  std::vector<std::uint64_t> pick(k, 0);
  std::vector<bool> used(m, false);
  std::uint64_t count = 0;

  // plain depth-first over index tuples into the subset
  std::vector<std::size_t> choice(k, 0);
  std::uint32_t depth = 0;
  choice[0] = 0;
  while (true) {
    if (choice[depth] == m) {
      if (depth == 0) break;
      --depth;
      used[choice[depth]] = false;
      ++choice[depth];
      continue;
    }
    const std::size_t c = choice[depth];
    if (used[c]) { ++choice[depth]; continue; }
    pick[depth] = subset[c];
    bool ok = true;
    for (const auto& e : pattern.edges()) {
      if (e.i > depth || e.j > depth) continue;
      if (graph.color_of(pick[e.i], pick[e.j]) != e.color) { ok = false; break; }
    }
    if (!ok) { ++choice[depth]; continue; }
    if (depth + 1 == k) {
      ++count;
      ++choice[depth];
      continue;
    }
    used[c] = true;
    ++depth;
    choice[depth] = 0;
  }
  return count;
}

PredictionReport prediction_report(const EmbeddingCount& count, const ColoredPattern& pattern,
                                   const ColoredCayleyGraph& graph, double lambda,
                                   std::uint64_t d_min) {
  PredictionReport rep;
  auto ratio = [](double actual, double predicted) {
    if (predicted == 0.0)
      return actual == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    return actual / predicted;
  };
  rep.ratio_main = ratio(double(count.ordered), count.predicted_main);
  rep.ratio_tool3 = ratio(double(count.unordered), count.predicted_tool3);
  rep.lambda = lambda;

  std::vector<std::uint32_t> degree(pattern.k(), 0);
  for (const auto& e : pattern.edges()) {
    ++degree[e.i];
    ++degree[e.j];
  }
  std::uint32_t max_degree = 0;
  for (std::uint32_t v : degree) max_degree = std::max(max_degree, v);

  if (d_min == 0) raise(errc::config_error, "d_min must be positive");
  rep.tool3_requirement =
      lambda * std::pow(double(graph.vertex_count()) / double(d_min), double(max_degree));
  rep.tool3_size_ok = double(count.subset_size) >= rep.tool3_requirement;
  rep.in_theorem_range = count.in_theorem_range;
  rep.threshold_met = count.threshold_met;
  return rep;
}

}  // namespace eucgraph

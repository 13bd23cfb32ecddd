#include "eucgraph/pseudorandom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eucgraph/rng.hpp"

namespace eucgraph {
namespace {

void check_subset_members(const ColoredCayleyGraph& graph, std::span<const std::uint64_t> s) {
  std::vector<bool> seen(graph.vertex_count(), false);
  for (std::uint64_t v : s) {
    if (v >= graph.vertex_count())
      raise(errc::subset_out_of_range, "subset member out of the vertex range");
    if (seen[v]) raise(errc::config_error, "subset has a duplicate vertex");
    seen[v] = true;
  }
}

}  // namespace

std::uint64_t count_bipartite_edges(const ColoredCayleyGraph& graph, std::uint32_t color,
                                    std::span<const std::uint64_t> b,
                                    std::span<const std::uint64_t> c) {
  graph.require_color(color);
  check_subset_members(graph, b);
  check_subset_members(graph, c);
  std::vector<bool> in_c(graph.vertex_count(), false);
  for (std::uint64_t v : c) in_c[v] = true;
  std::uint64_t count = 0;
  const auto& sphere = graph.sphere(color).points;
  for (std::uint64_t u : b)
    for (std::uint64_t s : sphere)
      if (in_c[graph.translate(u, s)]) ++count;
  return count;
}

MixingCheck mixing_check(const ColoredCayleyGraph& graph, std::uint32_t color,
                         std::span<const std::uint64_t> b, std::span<const std::uint64_t> c,
                         double lambda) {
  MixingCheck check;
  check.size_b = b.size();
  check.size_c = c.size();
  check.edges = count_bipartite_edges(graph, color, b, c);
  const double n = double(graph.vertex_count());
  check.predicted = double(graph.valency(color)) / n * double(b.size()) * double(c.size());
  check.bound = lambda * std::sqrt(double(b.size()) * double(c.size()));
  check.defect = std::abs(double(check.edges) - check.predicted);
  check.ok = check.defect <= check.bound;
  return check;
}

MixingRun run_mixing(const ColoredCayleyGraph& graph, std::uint32_t color,
                     std::uint64_t samples, std::uint64_t seed, double lambda,
                     std::uint64_t size_b, std::uint64_t size_c) {
  graph.require_color(color);
  const std::uint64_t n = graph.vertex_count();
  if (size_b > n || size_c > n)
    raise(errc::subset_out_of_range, "requested subset size exceeds the vertex count");

  MixingRun run;
  run.color = color;
  run.samples = samples;
  run.seed = seed;
  run.lambda = lambda;

  SplitMix64 rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::uint64_t mb = size_b ? size_b : 1 + rng.below(n);
    const std::uint64_t mc = size_c ? size_c : 1 + rng.below(n);
    auto b = sample_without_replacement(n, mb, rng);
    auto c = sample_without_replacement(n, mc, rng);
    MixingCheck check = mixing_check(graph, color, b, c, lambda);
    if (!check.ok) ++run.violations;
    run.worst_excess = std::max(run.worst_excess, check.defect - check.bound);
    run.checks.push_back(check);
  }
  return run;
}

RCCertificate certify_rc(const ColoredCayleyGraph& graph, SpectrumMethod method) {
  RCCertificate cert;
  cert.n = graph.vertex_count();
  cert.all_regular = true;
  cert.ramanujan_all = true;

  const std::uint32_t q = graph.field().q();
  for (std::uint32_t a = 1; a < q; ++a) {
    const auto& pts = graph.sphere(a).points;
    for (std::uint64_t v : pts) {
      std::uint64_t neg = graph.negate_vertex(v);
      if (!std::binary_search(pts.begin(), pts.end(), neg)) {
        cert.all_regular = false;
        break;
      }
    }
    SpectrumReport rep = full_spectrum(graph, a, method);
    cert.per_color.push_back({a, rep.valency, rep.max_nontrivial, rep.ramanujan_ok});
    cert.ramanujan_all = cert.ramanujan_all && rep.ramanujan_ok;
  }

  cert.d_min = cert.per_color.front().valency;
  cert.d_max = cert.per_color.front().valency;
  cert.lambda_max = 0.0;
  for (const auto& stat : cert.per_color) {
    cert.d_min = std::min(cert.d_min, stat.valency);
    cert.d_max = std::max(cert.d_max, stat.valency);
    cert.lambda_max = std::max(cert.lambda_max, stat.max_nontrivial);
  }
  // strict inequality with a hair of slack so an exact tie (disconnected
  // color class) never sneaks through as rc_ok on rounding
  cert.rc_ok = cert.all_regular && cert.lambda_max < double(cert.d_min) - 1e-6;
  return cert;
}

KaleidoReport kaleido_conditions(const ColoredCayleyGraph& graph, std::uint32_t k,
                                 std::uint32_t pattern_edges, double constant) {
  if (k < 1) raise(errc::config_error, "pattern size must be >= 1");
  KaleidoReport rep;
  rep.n = graph.vertex_count();
  rep.k = k;
  rep.pattern_edges = pattern_edges;
  rep.constant = constant;

  const std::uint32_t q = graph.field().q();
  std::uint64_t vmin = 0, vmax = 0;
  for (std::uint32_t a = 1; a < q; ++a) {
    std::uint64_t deg = graph.valency(a);
    // n odd and |S_a| even (S_a = -S_a, 0 not on it), so n*deg/2 is exact
    rep.color_edges.push_back(rep.n * deg / 2);
    if (a == 1 || deg < vmin) vmin = deg;
    if (a == 1 || deg > vmax) vmax = deg;
  }
  rep.zero_pairs = rep.n * (graph.sphere(0).points.size() - 1) / 2;
  rep.ratio_max = vmin == 0 ? std::numeric_limits<double>::infinity()
                            : double(vmax) / double(vmin);
  const double pairs = double(rep.n) * double(rep.n - 1) / 2.0;
  rep.completeness_defect = double(rep.zero_pairs) / pairs;
  rep.threshold_size = constant * std::pow(double(rep.n), (double(k) - 1.0) / double(k)) *
                       std::pow(double(q - 1), double(pattern_edges) / double(k));
  return rep;
}

std::vector<ContainmentCheck> kaleido_containment(
    const ColoredCayleyGraph& graph,
    const std::vector<std::pair<std::string, ColoredPattern>>& patterns, double constant,
    std::uint64_t seed) {
  std::vector<ContainmentCheck> out;
  SplitMix64 rng(seed);
  const std::uint64_t n = graph.vertex_count();
  for (const auto& [name, pattern] : patterns) {
    KaleidoReport rep =
        kaleido_conditions(graph, pattern.k(), pattern.edge_count(), constant);
    std::uint64_t size = std::uint64_t(std::ceil(rep.threshold_size));
    size = std::min(size, n);
    auto subset = sample_without_replacement(n, size, rng);
    EmbeddingCount count = count_embeddings(graph, subset, pattern, constant);
    out.push_back({name, size, count.unordered, count.unordered > 0});
  }
  return out;
}

}  // namespace eucgraph

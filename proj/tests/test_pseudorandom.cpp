#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <memory>
#include <numeric>

#include "eucgraph/pseudorandom.hpp"
#include "eucgraph/rng.hpp"

using namespace eucgraph;

namespace {

ColoredCayleyGraph graph_of(std::uint32_t p, std::uint32_t r, std::uint32_t d,
                            bool nonres = false) {
  auto f = std::make_shared<Field>(make_field(p, r));
  auto form = nonres ? QuadraticForm::nonresidue(f, d) : QuadraticForm::identity(f, d);
  return ColoredCayleyGraph(QuadraticSpace(std::move(form)));
}

std::vector<std::uint64_t> all_vertices(const ColoredCayleyGraph& g) {
  std::vector<std::uint64_t> v(g.vertex_count());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("bipartite edge counts") {
  auto g = graph_of(5, 1, 2);
  auto all = all_vertices(g);
  for (std::uint32_t c = 1; c < 5; ++c) {
    CHECK_EQ(count_bipartite_edges(g, c, all, all), g.vertex_count() * g.valency(c));
    std::vector<std::uint64_t> one{7};
    CHECK_EQ(count_bipartite_edges(g, c, one, all), g.valency(c));
    // singleton against singleton is the color indicator
    std::uint64_t hits = 0;
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
      std::vector<std::uint64_t> self{v};
      hits += count_bipartite_edges(g, c, one, self);
    }
    CHECK_EQ(hits, g.valency(c));
  }
}

TEST_CASE("bipartite counts match the double loop") {
  auto g = graph_of(5, 1, 2);
  SplitMix64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto b = sample_without_replacement(g.vertex_count(), 1 + rng.below(20), rng);
    auto c = sample_without_replacement(g.vertex_count(), 1 + rng.below(20), rng);
    std::uint32_t color = 1 + std::uint32_t(rng.below(4));
    std::uint64_t direct = 0;
    for (std::uint64_t u : b)
      for (std::uint64_t v : c)
        if (g.color_of(u, v) == color) ++direct;
    CHECK_EQ(count_bipartite_edges(g, color, b, c), direct);
  }
}

TEST_CASE("bipartite input validation") {
  auto g = graph_of(3, 1, 2);
  std::vector<std::uint64_t> ok{0, 1};
  std::vector<std::uint64_t> dup{1, 1};
  std::vector<std::uint64_t> oor{9};
  CHECK_THROWS_AS(count_bipartite_edges(g, 1, dup, ok), Error);
  CHECK_THROWS_AS(count_bipartite_edges(g, 1, ok, oor), Error);
  CHECK_THROWS_AS(count_bipartite_edges(g, 0, ok, ok), Error);
  try {
    count_bipartite_edges(g, 1, ok, oor);
  } catch (const Error& e) {
    CHECK_EQ(e.code(), errc::subset_out_of_range);
  }
}

TEST_CASE("whole space mixes exactly") {
  auto g = graph_of(5, 1, 2);
  auto all = all_vertices(g);
  MixingCheck check = mixing_check(g, 2, all, all, 0.0);
  CHECK_EQ(check.edges, g.vertex_count() * g.valency(2));
  CHECK_EQ(check.defect, doctest::Approx(0.0));
  CHECK(check.ok);  // zero defect passes even with lambda = 0
}

TEST_CASE("mixing runs are deterministic and lambda independent") {
  auto g = graph_of(5, 1, 2);
  MixingRun a = run_mixing(g, 1, 30, 99, 5.0);
  MixingRun b = run_mixing(g, 1, 30, 99, 5.0);
  MixingRun c = run_mixing(g, 1, 30, 99, 0.5);
  REQUIRE_EQ(a.checks.size(), 30u);
  REQUIRE_EQ(c.checks.size(), 30u);
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK_EQ(a.checks[i].size_b, b.checks[i].size_b);
    CHECK_EQ(a.checks[i].edges, b.checks[i].edges);
    // different lambda, same subset stream
    CHECK_EQ(a.checks[i].size_b, c.checks[i].size_b);
    CHECK_EQ(a.checks[i].size_c, c.checks[i].size_c);
    CHECK_EQ(a.checks[i].edges, c.checks[i].edges);
    CHECK_EQ(a.checks[i].defect, c.checks[i].defect);
  }
  CHECK_EQ(a.violations, b.violations);
}

TEST_CASE("certified lambda yields no violations, lambda 0 does") {
  auto g = graph_of(5, 1, 2);
  RCCertificate cert = certify_rc(g);
  MixingRun good = run_mixing(g, 1, 200, 31, cert.per_color[0].max_nontrivial + 1e-6);
  CHECK_EQ(good.violations, 0u);
  CHECK(good.worst_excess <= 0.0);

  MixingRun bad = run_mixing(g, 1, 200, 31, 0.0);
  CHECK(bad.violations > 0u);
  CHECK(bad.worst_excess > 0.0);
  std::uint64_t recount = 0;
  double worst = 0.0;
  for (const auto& check : bad.checks) {
    if (!check.ok) ++recount;
    worst = std::max(worst, check.defect - check.bound);
  }
  CHECK_EQ(recount, bad.violations);
  CHECK_EQ(worst, bad.worst_excess);
}

TEST_CASE("fixed subset sizes are honored") {
  auto g = graph_of(3, 1, 2);
  MixingRun run = run_mixing(g, 1, 10, 4, 3.0, 5, 7);
  for (const auto& check : run.checks) {
    CHECK_EQ(check.size_b, 5u);
    CHECK_EQ(check.size_c, 7u);
  }
  CHECK_THROWS_AS(run_mixing(g, 1, 1, 4, 3.0, 10, 0), Error);  // n = 9
}

TEST_CASE("spectral certificate for the 3x3 torus") {
  auto g = graph_of(3, 1, 2);
  RCCertificate cert = certify_rc(g);
  CHECK_EQ(cert.n, 9u);
  REQUIRE_EQ(cert.per_color.size(), 2u);
  CHECK_EQ(cert.per_color[0].valency, 4u);
  CHECK_EQ(cert.per_color[1].valency, 4u);
  CHECK_EQ(cert.d_min, 4u);
  CHECK_EQ(cert.d_max, 4u);
  CHECK_EQ(cert.lambda_max, doctest::Approx(2.0));
  CHECK(cert.all_regular);
  CHECK(cert.ramanujan_all);
  CHECK(cert.rc_ok);
}

TEST_CASE("certificate rejects a disconnected color class") {
  // Q = x^2 + 2y^2 over F_3: both spheres are 2-point axis pairs, so every
  // color class is a disjoint union of triangles and lambda_max equals the
  // valency
  auto f = std::make_shared<Field>(make_field(3, 1));
  ColoredCayleyGraph g{QuadraticSpace(QuadraticForm::diagonal(f, {1, 2}))};
  RCCertificate cert = certify_rc(g);
  CHECK_EQ(cert.per_color[0].valency, 2u);
  CHECK_EQ(cert.per_color[1].valency, 2u);
  CHECK_EQ(cert.lambda_max, doctest::Approx(2.0));
  CHECK(cert.all_regular);
  CHECK(cert.ramanujan_all);
  CHECK_FALSE(cert.rc_ok);
}

TEST_CASE("kaleidoscope statistics in the plane") {
  auto g = graph_of(5, 1, 2);
  KaleidoReport rep = kaleido_conditions(g, 3, 3, 1.0);
  CHECK_EQ(rep.n, 25u);
  REQUIRE_EQ(rep.color_edges.size(), 4u);
  for (std::uint64_t e : rep.color_edges) CHECK_EQ(e, 50u);
  CHECK_EQ(rep.zero_pairs, 100u);
  CHECK_EQ(rep.ratio_max, doctest::Approx(1.0));
  CHECK_EQ(rep.completeness_defect, doctest::Approx(1.0 / 3.0));
  CHECK_EQ(rep.threshold_size,
           doctest::Approx(std::pow(25.0, 2.0 / 3.0) * std::pow(4.0, 1.0)));
  std::uint64_t covered = rep.zero_pairs;
  for (std::uint64_t e : rep.color_edges) covered += e;
  CHECK_EQ(covered, 300u);  // C(25, 2)
}

TEST_CASE("kaleidoscope statistics in 3-space") {
  auto g = graph_of(5, 1, 3);
  KaleidoReport rep = kaleido_conditions(g, 3, 3, 1.0);
  CHECK_EQ(rep.n, 125u);
  CHECK_EQ(rep.zero_pairs, 1500u);  // null sphere has exactly q^2 points
  CHECK_EQ(rep.ratio_max, doctest::Approx(1.5));
  CHECK_EQ(rep.completeness_defect, doctest::Approx(1500.0 / 7750.0));
  CHECK_EQ(rep.threshold_size, doctest::Approx(100.0));  // 125^(2/3) * 4
  CHECK_THROWS_AS(kaleido_conditions(g, 0, 3, 1.0), Error);
}

TEST_CASE("edge counts plus zero pairs cover every pair") {
  for (auto [p, d] : {std::pair{3u, 2u}, {5u, 2u}, {7u, 2u}, {3u, 3u}}) {
    for (bool nonres : {false, true}) {
      auto g = graph_of(p, 1, d, nonres);
      KaleidoReport rep = kaleido_conditions(g, 2, 1, 1.0);
      std::uint64_t covered = rep.zero_pairs;
      for (std::uint64_t e : rep.color_edges) covered += e;
      CHECK_EQ(covered, rep.n * (rep.n - 1) / 2);
    }
  }
}

TEST_CASE("threshold subsets contain the small patterns") {
  auto g = graph_of(5, 1, 2);
  std::vector<std::pair<std::string, ColoredPattern>> patterns;
  patterns.emplace_back("edge", ColoredPattern::single_edge(1));
  patterns.emplace_back("path", ColoredPattern::path2(1, 2));
  patterns.emplace_back("triangle", ColoredPattern::triangle(1, 1, 1));
  auto checks = kaleido_containment(g, patterns, 1.0, 7);
  REQUIRE_EQ(checks.size(), 3u);
  CHECK_EQ(checks[0].name, "edge");
  CHECK((checks[0].subset_size == 10 || checks[0].subset_size == 11));  // sqrt(25*4)
  CHECK_EQ(checks[1].subset_size, 22u);   // ceil(25^(2/3) 4^(2/3))
  CHECK_EQ(checks[2].subset_size, 25u);   // threshold 35 capped at n
  CHECK(checks[0].found);
  CHECK(checks[1].found);
  // the unit circle in the plane over F_5 has no 3-term zero sums, so the
  // monochromatic triangle class is empty even in the whole space
  CHECK_FALSE(checks[2].found);
  for (const auto& check : checks) CHECK_EQ(check.found, check.count > 0);
}

TEST_CASE("threshold grows with the field") {
  double prev = 0.0;
  for (std::uint32_t q : {3u, 5u, 7u, 11u}) {
    auto g = graph_of(q, 1, 2);
    KaleidoReport rep = kaleido_conditions(g, 3, 3, 1.0);
    CHECK(rep.threshold_size > prev);
    prev = rep.threshold_size;
  }
}

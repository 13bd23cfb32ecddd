// End-to-end acceptance: one line per criterion, exit code = number of
// failures. Every check here is against a stated tolerance; nothing is
// tuned to the implementation.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "eucgraph/config.hpp"
#include "eucgraph/pseudorandom.hpp"
#include "eucgraph/rng.hpp"

using namespace eucgraph;

namespace {

constexpr std::uint32_t kGridQ[] = {3, 5, 7, 9, 11, 13};

std::pair<std::uint32_t, std::uint32_t> pr_of(std::uint32_t q) {
  if (q == 9) return {3, 2};
  return {q, 1};
}

ColoredCayleyGraph graph_of(std::uint32_t q, std::uint32_t d, bool nonres) {
  auto [p, r] = pr_of(q);
  auto f = std::make_shared<Field>(make_field(p, r));
  auto form = nonres ? QuadraticForm::nonresidue(f, d) : QuadraticForm::identity(f, d);
  return ColoredCayleyGraph(QuadraticSpace(std::move(form)));
}

unsigned long long ull(std::uint64_t v) { return static_cast<unsigned long long>(v); }

// 1. every nontrivial eigenvalue obeys 2 q^{(d-1)/2} + 1e-6
bool criterion1() {
  std::uint64_t classes = 0;
  double worst_margin = 1e30;
  std::string worst;
  bool ok = true;
  for (std::uint32_t q : kGridQ) {
    for (std::uint32_t d : {2u, 3u}) {
      for (bool nonres : {false, true}) {
        auto g = graph_of(q, d, nonres);
        for (std::uint32_t a = 1; a < q; ++a) {
          SpectrumReport rep = full_spectrum(g, a);
          ++classes;
          double margin = rep.bound + 1e-6 - rep.max_nontrivial;
          if (margin < worst_margin) {
            worst_margin = margin;
            worst = "q=" + std::to_string(q) + " d=" + std::to_string(d) +
                    (nonres ? " nonresidue" : " identity") + " a=" + std::to_string(a);
          }
          if (!rep.ramanujan_ok) ok = false;
        }
      }
    }
  }
  std::printf("[%s] criterion 1: eigenvalue bound on %llu color classes, tightest margin %.6f (%s)\n",
              ok ? "PASS" : "FAIL", ull(classes), worst_margin, worst.c_str());
  return ok;
}

// 2. character sums vs dense eigensolver, q^d <= 729
bool criterion2() {
  std::uint64_t classes = 0;
  double worst = 0.0;
  bool ok = true;
  for (std::uint32_t q : kGridQ) {
    for (std::uint32_t d : {2u, 3u}) {
      double n = std::pow(double(q), double(d));
      if (n > 729.0) continue;
      for (bool nonres : {false, true}) {
        auto g = graph_of(q, d, nonres);
        for (std::uint32_t a = 1; a < q; ++a) {
          SpectrumReport rep = full_spectrum(g, a);
          auto dense = dense_spectrum_oracle(g, a);
          ++classes;
          for (std::size_t i = 0; i < dense.size(); ++i) {
            double diff = std::abs(dense[i] - rep.eigenvalues[i]);
            worst = std::max(worst, diff);
            if (diff > 1e-6) ok = false;
          }
        }
      }
    }
  }
  std::printf("[%s] criterion 2: dense eigensolver agreement on %llu spectra, worst gap %.3g\n",
              ok ? "PASS" : "FAIL", ull(classes), worst);
  return ok;
}

// 3. valency band q^{d-1} +- 2 q^{(d-1)/2}; d=2 sizes are exactly q -+ 1
bool criterion3() {
  bool ok = true;
  std::string detail;
  for (std::uint32_t q : kGridQ) {
    for (std::uint32_t d : {2u, 3u}) {
      std::vector<std::uint64_t> flat_sizes;
      for (bool nonres : {false, true}) {
        auto g = graph_of(q, d, nonres);
        const double target = std::pow(double(q), double(d) - 1.0);
        const double band = 2.0 * std::pow(double(q), (double(d) - 1.0) / 2.0);
        std::uint64_t first = g.valency(1);
        for (std::uint32_t a = 1; a < q; ++a) {
          if (std::abs(double(g.valency(a)) - target) > band) {
            ok = false;
            detail = " (band miss at q=" + std::to_string(q) + " d=" + std::to_string(d) + ")";
          }
          if (d == 2 && (g.valency(a) != first || (first != q - 1 && first != q + 1))) {
            ok = false;
            detail = " (d=2 sizes not q+-1 at q=" + std::to_string(q) + ")";
          }
        }
        flat_sizes.push_back(first);
      }
      // the two standard forms realize both q-1 and q+1 in the plane
      if (d == 2 && flat_sizes[0] + flat_sizes[1] != 2 * std::uint64_t(q)) {
        ok = false;
        detail = " (forms do not split q+-1 at q=" + std::to_string(q) + ")";
      }
    }
  }
  std::printf("[%s] criterion 3: sphere sizes within 2 q^((d-1)/2) of q^(d-1), exact q+-1 in the plane%s\n",
              ok ? "PASS" : "FAIL", detail.c_str());
  return ok;
}

// 4. pair counts: band for t != 0 (all d) and t = 0 (d = 3); exact at d=2, t=0
bool criterion4() {
  bool ok = true;
  double worst_dev = 0.0;
  for (std::uint32_t q : kGridQ) {
    for (std::uint32_t d : {2u, 3u}) {
      for (bool nonres : {false, true}) {
        auto g = graph_of(q, d, nonres);
        const auto& space = g.space();
        const double band = 2.0 * std::pow(double(q), -(double(d) - 1.0) / 2.0);
        for (std::uint32_t t = 0; t < q; ++t) {
          PairCountReport rep = space.pair_count_report(t);
          if (t == 0 && d == 2) {
            if (rep.count != std::uint64_t(q) * q * rep.sphere_size) ok = false;
            continue;
          }
          double dev = std::abs(rep.ratio_q2d1 - 1.0);
          worst_dev = std::max(worst_dev, dev / band);
          if (dev > band) ok = false;
        }
      }
    }
  }
  std::printf("[%s] criterion 4: pair-count ratios within 2 q^(-(d-1)/2) of 1, worst at %.3f of band\n",
              ok ? "PASS" : "FAIL", worst_dev);
  return ok;
}

// 5. mixing inequality: 1000 seeded pairs per (q, a), none violated at the
// certified lambda; the lambda/10 control trips somewhere on the same draws
bool criterion5() {
  std::uint64_t violations_at_certified = 0, violations_at_control = 0, checks = 0;
  for (std::uint32_t q : {5u, 7u}) {
    auto g = graph_of(q, 2, false);
    for (std::uint32_t a = 1; a < q; ++a) {
      const std::uint64_t seed = 500 + 100ull * q + a;
      double lambda = full_spectrum(g, a).max_nontrivial + 1e-6;
      MixingRun pos = run_mixing(g, a, 1000, seed, lambda);
      MixingRun neg = run_mixing(g, a, 1000, seed, lambda / 10.0);
      violations_at_certified += pos.violations;
      violations_at_control += neg.violations;
      checks += pos.samples;
    }
  }
  bool ok = violations_at_certified == 0 && violations_at_control >= 1;
  std::printf("[%s] criterion 5: %llu mixing checks, %llu violations at certified lambda, %llu at lambda/10\n",
              ok ? "PASS" : "FAIL", ull(checks), ull(violations_at_certified),
              ull(violations_at_control));
  return ok;
}

// 6. backtracking counter vs naive tuple enumeration, 100 seeded instances
bool criterion6() {
  auto g = graph_of(5, 2, false);
  SplitMix64 rng(600);
  std::uint64_t mismatches = 0, nonzero = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t m = 4 + rng.below(22);  // |E| <= 25 < 30
    auto subset = sample_without_replacement(g.vertex_count(), m, rng);
    const std::uint32_t k = 2 + std::uint32_t(rng.below(3));
    std::vector<ColoredPattern::Edge> edges;
    for (std::uint32_t i = 0; i < k && edges.size() < 4; ++i)
      for (std::uint32_t j = i + 1; j < k && edges.size() < 4; ++j)
        if (rng.below(2) == 0) edges.push_back({i, j, 1 + std::uint32_t(rng.below(4))});
    ColoredPattern pattern(k, std::move(edges));
    EmbeddingCount fast = count_embeddings(g, subset, pattern);
    std::uint64_t oracle = naive_count_oracle(g, subset, pattern);
    if (fast.ordered != oracle) ++mismatches;
    if (oracle > 0) ++nonzero;
  }
  bool ok = mismatches == 0 && nonzero > 0;
  std::printf("[%s] criterion 6: 100 counting instances against the oracle, %llu mismatches, %llu nonzero\n",
              ok ? "PASS" : "FAIL", ull(mismatches), ull(nonzero));
  return ok;
}

// 7. full-space ordered counts against |E|^k q^{-edges} within
// (1 + 2 q^{-(d-1)/2})^edges - 1 + k^2 / q^d
bool criterion7() {
  struct Shape {
    const char* name;
    ColoredPattern pattern;
  };
  const std::vector<Shape> shapes{
      {"edge", ColoredPattern::single_edge(1)},
      {"path-11", ColoredPattern::path2(1, 1)},
      {"path-12", ColoredPattern::path2(1, 2)},
      {"triangle-111", ColoredPattern::triangle(1, 1, 1)},
  };
  bool ok = true;
  std::uint64_t cells = 0, misses = 0;
  std::string details;
  for (std::uint32_t q : {5u, 9u, 13u}) {
    for (std::uint32_t d : {2u, 3u}) {
      auto g = graph_of(q, d, false);
      std::vector<std::uint64_t> all(g.vertex_count());
      for (std::uint64_t v = 0; v < all.size(); ++v) all[v] = v;
      for (const auto& shape : shapes) {
        EmbeddingCount count = count_embeddings(g, all, shape.pattern);
        const double e = double(shape.pattern.edge_count());
        const double k = double(shape.pattern.k());
        const double dev = std::abs(double(count.ordered) / count.predicted_main - 1.0);
        const double band = std::pow(1.0 + 2.0 * std::pow(double(q), -(double(d) - 1.0) / 2.0), e) -
                            1.0 + k * k / std::pow(double(q), double(d));
        ++cells;
        if (dev > band) {
          ok = false;
          ++misses;
          char line[160];
          std::snprintf(line, sizeof line, "       q=%u d=%u %s: dev=%.6f band=%.6f\n", q, d,
                        shape.name, dev, band);
          details += line;
        }
      }
    }
  }
  std::printf("[%s] criterion 7: full-space count bands, %llu of %llu cells out of band\n",
              ok ? "PASS" : "FAIL", ull(misses), ull(cells));
  if (!details.empty()) std::fputs(details.c_str(), stdout);
  return ok;
}

// 8. 20 seeded 120-vertex subsets of F_13^2: per color, mean edge-count ratio
// in [0.5, 1.5] and the C = 2.5 threshold flag set
bool criterion8() {
  auto g = graph_of(13, 2, false);
  bool ok = true;
  double lo = 1e30, hi = 0.0;
  for (std::uint32_t color = 1; color < 13; ++color) {
    double sum = 0.0;
    for (int i = 0; i < 20; ++i) {
      SplitMix64 rng(900 + i);
      auto subset = sample_without_replacement(g.vertex_count(), 120, rng);
      EmbeddingCount count =
          count_embeddings(g, subset, ColoredPattern::single_edge(color), 2.5);
      if (!count.threshold_met) ok = false;
      sum += double(count.ordered) / count.predicted_main;
    }
    double mean = sum / 20.0;
    lo = std::min(lo, mean);
    hi = std::max(hi, mean);
    if (mean < 0.5 || mean > 1.5) ok = false;
  }
  std::printf("[%s] criterion 8: subset edge-count ratio means in [%.4f, %.4f], threshold C=2.5 met\n",
              ok ? "PASS" : "FAIL", lo, hi);
  return ok;
}

// 9. plane statistics across q: balanced classes, small defect, growing n
bool criterion9() {
  bool ok = true;
  std::uint64_t prev_n = 0;
  for (std::uint32_t q : {5u, 7u, 9u, 11u, 13u}) {
    auto g = graph_of(q, 2, false);
    KaleidoReport rep = kaleido_conditions(g, 2, 1, 1.0);
    if (rep.ratio_max > 1.5) ok = false;
    if (rep.completeness_defect > 2.0 / double(q)) ok = false;
    if (rep.n <= prev_n) ok = false;
    prev_n = rep.n;
  }
  std::printf("[%s] criterion 9: ratio_max <= 1.5, completeness defect <= 2/q, vertex counts increasing\n",
              ok ? "PASS" : "FAIL");
  return ok;
}

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(EUCGRAPH_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

// 10. identical invocations produce identical bytes
bool criterion10() {
  {
    std::ofstream f("/tmp/eucg_acc_pattern.json", std::ios::binary);
    f << R"({"k":3,"edges":[[0,1,1],[1,2,2]]})";
  }
  const std::vector<std::string> commands{
      "sphere --p 5 --d 2 --format csv",
      "spectrum --p 3 --r 2 --d 2 --color 2",
      "certify --p 7 --d 2",
      "mixing --p 5 --d 2 --color 1 --samples 25 --seed 11",
      "kaleido --p 5 --d 2 --containment --seed 9",
      "count --p 5 --d 2 --pattern /tmp/eucg_acc_pattern.json --subset-size 15 --seed 13 --verify",
      "fdist --p 7 --d 2 --expr sum-cubes --j 1",
  };
  bool ok = true;
  for (const auto& cmd : commands) {
    CliResult a = run_cli(cmd);
    CliResult b = run_cli(cmd);
    if (a.code != b.code || a.out != b.out || a.out.empty() || a.code != 0) {
      ok = false;
      std::printf("       unstable or failing: %s (codes %d/%d)\n", cmd.c_str(), a.code, b.code);
    }
  }
  std::printf("[%s] criterion 10: %zu commands rerun byte-identically\n", ok ? "PASS" : "FAIL",
              commands.size());
  return ok;
}

}  // namespace

int main() {
  int failures = 0;
  bool (*criteria[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                          criterion6, criterion7, criterion8, criterion9, criterion10};
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    try {
      if (!criteria[i]()) ++failures;
    } catch (const std::exception& e) {
      std::printf("[FAIL] criterion %zu threw: %s\n", i + 1, e.what());
      ++failures;
    }
    std::fflush(stdout);
  }
  if (failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criteria failed\n", failures);
  return failures;
}

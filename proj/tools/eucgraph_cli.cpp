// eucgraph: exact spectra, mixing certificates and colored-pattern counts
// for distance-colored graphs over F_q^d.
//
// Exit codes: 0 success, 2 configuration or input error, 3 a verified
// quantity violated its certified bound.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "eucgraph/config.hpp"
#include "eucgraph/rng.hpp"

using namespace eucgraph;

namespace {

struct CommonOpts {
  RunConfig cfg;
  std::string modulus_text;
  std::string method_text = "auto";
  std::string q_grid;          // comma list of prime powers; overrides p/r
  std::string out;             // write the report here instead of stdout
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_grid) {
  cmd->add_option("--p", o.cfg.p, "field characteristic, an odd prime");
  cmd->add_option("--r", o.cfg.r, "extension degree");
  cmd->add_option("--modulus", o.modulus_text,
                  "modulus coefficients c0,...,cr (constant first, monic)");
  cmd->add_option("--d", o.cfg.d, "dimension of the point space");
  cmd->add_option("--form", o.cfg.form,
                  "identity | nonresidue | diag:a,b,... | @form.json");
  cmd->add_option("--seed", o.cfg.seed, "seed for every random draw in this run");
  cmd->add_option("--format", o.cfg.format, "json | csv");
  cmd->add_option("--method", o.method_text, "auto | naive | dft");
  cmd->add_option("--out", o.out, "write the report to this file");
  if (with_grid)
    cmd->add_option("--q-grid", o.q_grid, "comma list of prime powers to sweep (overrides --p/--r)");
}

SpectrumMethod parse_method(const std::string& text) {
  if (text == "auto") return SpectrumMethod::kAuto;
  if (text == "naive") return SpectrumMethod::kCharacterSum;
  if (text == "dft") return SpectrumMethod::kDft;
  raise(errc::config_error, "method must be auto, naive or dft");
}

void finish_common(CommonOpts& o) {
  if (!o.modulus_text.empty())
    o.cfg.modulus = parse_index_list(o.modulus_text, "modulus coefficient");
  if (o.cfg.format != "json" && o.cfg.format != "csv")
    raise(errc::config_error, "format must be json or csv");
  parse_method(o.method_text);
}

// (p, r) for each prime power in the grid; q must be a proper prime power.
std::vector<std::pair<std::uint32_t, std::uint32_t>> parse_q_grid(const std::string& text) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t q : parse_index_list(text, "grid entry")) {
    if (q < 3) raise(errc::config_error, "grid entries must be odd prime powers >= 3");
    std::uint32_t p = q;
    for (std::uint32_t f = 2; f * f <= q; ++f)
      if (q % f == 0) { p = f; break; }
    std::uint32_t r = 0;
    std::uint64_t acc = 1;
    while (acc < q) { acc *= p; ++r; }
    if (acc != q) raise(errc::config_error, std::to_string(q) + " is not a prime power");
    out.push_back({p, r});
  }
  return out;
}

// Each (field, form) the command should run over: one entry normally, one
// per q in grid mode. Configs come back resolved.
std::vector<std::pair<RunConfig, std::shared_ptr<const Field>>> resolve_targets(
    const CommonOpts& o) {
  std::vector<std::pair<RunConfig, std::shared_ptr<const Field>>> out;
  if (o.q_grid.empty()) {
    RunConfig cfg = o.cfg;
    auto field = resolve_field(cfg);
    out.push_back({std::move(cfg), std::move(field)});
    return out;
  }
  for (auto [p, r] : parse_q_grid(o.q_grid)) {
    RunConfig cfg = o.cfg;
    cfg.p = p;
    cfg.r = r;
    cfg.modulus.reset();
    auto field = resolve_field(cfg);
    out.push_back({std::move(cfg), std::move(field)});
  }
  return out;
}

int emit(const std::string& text, const CommonOpts& o) {
  if (o.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) raise(errc::config_error, "cannot write to " + o.out);
  f << text;
  return 0;
}

int emit_json(const json& j, const CommonOpts& o) { return emit(j.dump(2) + "\n", o); }

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------- sphere --

struct SphereOpts {
  CommonOpts common;
  std::string colors = "all";  // radii; "all" includes 0 here
  bool points = false;
};

int cmd_sphere(SphereOpts& o) {
  finish_common(o.common);
  json out = json::array();
  std::string csv = "q,d,radius,size,pair_count,ratio_q2d1\n";
  for (auto& [cfg, field] : resolve_targets(o.common)) {
    QuadraticSpace space(resolve_form(cfg, field));
    std::vector<std::uint32_t> radii;
    if (o.colors == "all") {
      for (std::uint32_t t = 0; t < field->q(); ++t) radii.push_back(t);
    } else {
      radii = parse_index_list(o.colors, "radius");
    }
    for (std::uint32_t t : radii) {
      Sphere sphere = space.sphere(t);
      PairCountReport pc = space.pair_count_report(t);
      json j = sphere_to_json(space, sphere, o.points);
      j["pair_count"] = pc.count;
      j["ratio_q2d1"] = pc.ratio_q2d1;
      out.push_back(std::move(j));
      csv += std::to_string(field->q()) + "," + std::to_string(space.dim()) + "," +
             std::to_string(t) + "," + std::to_string(sphere.points.size()) + "," +
             std::to_string(pc.count) + "," + fmt_double(pc.ratio_q2d1) + "\n";
    }
  }
  if (o.common.cfg.format == "csv") return emit(csv, o.common);
  return emit_json(out.size() == 1 ? out[0] : out, o.common);
}

// -------------------------------------------------------------- spectrum --

struct SpectrumOpts {
  CommonOpts common;
  std::string colors = "all";
};

int cmd_spectrum(SpectrumOpts& o) {
  finish_common(o.common);
  SpectrumMethod method = parse_method(o.common.method_text);
  json out = json::array();
  std::string csv = "q,d,form,color,valency,max_nontrivial,bound,ramanujan_ok\n";
  bool all_ok = true;
  for (auto& [cfg, field] : resolve_targets(o.common)) {
    cfg.colors = o.colors;
    ColoredCayleyGraph graph(QuadraticSpace(resolve_form(cfg, field)));
    for (std::uint32_t a : resolve_colors(cfg, *field)) {
      SpectrumReport rep = full_spectrum(graph, a, method);
      all_ok = all_ok && rep.ramanujan_ok;
      out.push_back(spectrum_report_to_json(graph.space(), rep));
      csv += std::to_string(field->q()) + "," + std::to_string(cfg.d) + "," + cfg.form +
             "," + std::to_string(a) + "," + std::to_string(rep.valency) + "," +
             fmt_double(rep.max_nontrivial) + "," + fmt_double(rep.bound) + "," +
             (rep.ramanujan_ok ? "true" : "false") + "\n";
    }
  }
  int rc = 0;
  if (o.common.cfg.format == "csv")
    rc = emit(csv, o.common);
  else
    rc = emit_json(out.size() == 1 ? out[0] : out, o.common);
  return all_ok ? rc : 3;
}

// --------------------------------------------------------------- certify --

struct CertifyOpts {
  CommonOpts common;
};

int cmd_certify(CertifyOpts& o) {
  finish_common(o.common);
  SpectrumMethod method = parse_method(o.common.method_text);
  json out = json::array();
  std::string csv = "q,d,color,valency,max_nontrivial,ramanujan_ok\n";
  bool sound = true;
  for (auto& [cfg, field] : resolve_targets(o.common)) {
    ColoredCayleyGraph graph(QuadraticSpace(resolve_form(cfg, field)));
    RCCertificate cert = certify_rc(graph, method);
    sound = sound && cert.all_regular && cert.ramanujan_all;
    out.push_back(certificate_to_json(graph.space(), cert));
    for (const auto& s : cert.per_color)
      csv += std::to_string(field->q()) + "," + std::to_string(cfg.d) + "," +
             std::to_string(s.color) + "," + std::to_string(s.valency) + "," +
             fmt_double(s.max_nontrivial) + "," + (s.ramanujan_ok ? "true" : "false") + "\n";
  }
  int rc = 0;
  if (o.common.cfg.format == "csv")
    rc = emit(csv, o.common);
  else
    rc = emit_json(out.size() == 1 ? out[0] : out, o.common);
  // regularity and the eigenvalue bound are guaranteed; a miss is a defect,
  // not a report
  return sound ? rc : 3;
}

// ---------------------------------------------------------------- mixing --

struct MixingOpts {
  CommonOpts common;
  std::uint32_t color = 1;
  std::uint64_t samples = 200;
  std::uint64_t subset_size = 0;  // 0: random sizes per sample
  double lambda = -1.0;           // <0: use the certified value
  bool no_checks = false;
};

int cmd_mixing(MixingOpts& o) {
  finish_common(o.common);
  SpectrumMethod method = parse_method(o.common.method_text);
  RunConfig cfg = o.common.cfg;
  auto field = resolve_field(cfg);
  ColoredCayleyGraph graph(QuadraticSpace(resolve_form(cfg, field)));

  bool overridden = o.lambda >= 0.0;
  double lambda = o.lambda;
  if (!overridden) lambda = full_spectrum(graph, o.color, method).max_nontrivial;

  MixingRun run = run_mixing(graph, o.color, o.samples, cfg.seed, lambda, o.subset_size,
                             o.subset_size);
  json j = mixing_run_to_json(graph.space(), run, !o.no_checks);
  j["lambda_source"] = overridden ? "override" : "certified";

  int rc;
  if (o.common.cfg.format == "csv") {
    std::string csv = "q,d,color,lambda,sample,size_b,size_c,edges,predicted,bound,defect,ok\n";
    for (std::size_t i = 0; i < run.checks.size(); ++i) {
      const auto& c = run.checks[i];
      csv += std::to_string(field->q()) + "," + std::to_string(cfg.d) + "," +
             std::to_string(o.color) + "," + fmt_double(lambda) + "," + std::to_string(i) +
             "," + std::to_string(c.size_b) + "," + std::to_string(c.size_c) + "," +
             std::to_string(c.edges) + "," + fmt_double(c.predicted) + "," +
             fmt_double(c.bound) + "," + fmt_double(c.defect) + "," +
             (c.ok ? "true" : "false") + "\n";
    }
    rc = emit(csv, o.common);
  } else {
    rc = emit_json(j, o.common);
  }
  // a violation against the certified eigenvalue breaks a theorem; one
  // against a hand-supplied lambda is just a measurement
  return (!overridden && run.violations > 0) ? 3 : rc;
}

// --------------------------------------------------------------- kaleido --

struct KaleidoOpts {
  CommonOpts common;
  std::uint32_t k = 3;
  std::uint32_t edges = 3;
  double constant_c = 1.0;
  bool containment = false;
};

int cmd_kaleido(KaleidoOpts& o) {
  finish_common(o.common);
  json out = json::array();
  std::string csv =
      "q,d,n,zero_pairs,ratio_max,completeness_defect,k,pattern_edges,constant,threshold_size\n";
  for (auto& [cfg, field] : resolve_targets(o.common)) {
    ColoredCayleyGraph graph(QuadraticSpace(resolve_form(cfg, field)));
    KaleidoReport rep = kaleido_conditions(graph, o.k, o.edges, o.constant_c);
    json j = kaleido_to_json(graph.space(), rep);
    if (o.containment) {
      auto colors = resolve_colors(cfg, *field);
      std::uint32_t c1 = colors.front();
      std::uint32_t c2 = colors.size() > 1 ? colors[1] : colors.front();
      std::vector<std::pair<std::string, ColoredPattern>> patterns;
      patterns.emplace_back("edge", ColoredPattern::single_edge(c1));
      patterns.emplace_back("path-11", ColoredPattern::path2(c1, c1));
      if (c2 != c1) patterns.emplace_back("path-12", ColoredPattern::path2(c1, c2));
      patterns.emplace_back("triangle-111", ColoredPattern::triangle(c1, c1, c1));
      auto checks = kaleido_containment(graph, patterns, o.constant_c, cfg.seed);
      j["containment"] = containment_to_json(checks);
    }
    out.push_back(std::move(j));
    csv += std::to_string(field->q()) + "," + std::to_string(cfg.d) + "," +
           std::to_string(rep.n) + "," + std::to_string(rep.zero_pairs) + "," +
           fmt_double(rep.ratio_max) + "," + fmt_double(rep.completeness_defect) + "," +
           std::to_string(rep.k) + "," + std::to_string(rep.pattern_edges) + "," +
           fmt_double(rep.constant) + "," + fmt_double(rep.threshold_size) + "\n";
  }
  if (o.common.cfg.format == "csv") return emit(csv, o.common);
  return emit_json(out.size() == 1 ? out[0] : out, o.common);
}

// ----------------------------------------------------------------- count --

struct CountOpts {
  CommonOpts common;
  std::string pattern_file;
  std::string subset_file;
  std::uint64_t subset_size = 0;  // 0: the whole vertex set
  double constant_c = 1.0;
  bool verify = false;
};

int cmd_count(CountOpts& o) {
  finish_common(o.common);
  SpectrumMethod method = parse_method(o.common.method_text);
  if (o.common.cfg.format == "csv")
    raise(errc::config_error, "count reports are json only");
  if (o.pattern_file.empty()) raise(errc::config_error, "--pattern is required");

  RunConfig cfg = o.common.cfg;
  auto field = resolve_field(cfg);
  ColoredCayleyGraph graph(QuadraticSpace(resolve_form(cfg, field)));
  ColoredPattern pattern = pattern_from_json(*field, load_json_file(o.pattern_file));

  std::vector<std::uint64_t> subset;
  if (!o.subset_file.empty()) {
    subset = subset_from_json(graph.space(), load_json_file(o.subset_file));
  } else if (o.subset_size > 0) {
    SplitMix64 rng(cfg.seed);
    subset = sample_without_replacement(graph.vertex_count(), o.subset_size, rng);
  } else {
    subset.resize(graph.vertex_count());
    for (std::uint64_t v = 0; v < subset.size(); ++v) subset[v] = v;
  }

  EmbeddingCount count = count_embeddings(graph, subset, pattern, o.constant_c);
  RCCertificate cert = certify_rc(graph, method);
  PredictionReport pred =
      prediction_report(count, pattern, graph, cert.lambda_max, cert.d_min);

  json j;
  j["q"] = field->q();
  j["d"] = cfg.d;
  j["form"] = form_to_json(graph.space().form());
  j["pattern"] = pattern_to_json(pattern);
  j["count"] = embedding_count_to_json(count);
  j["prediction"] = prediction_to_json(pred);

  bool mismatch = false;
  if (o.verify) {
    std::uint64_t oracle = naive_count_oracle(graph, subset, pattern, cfg.oracle_cap);
    mismatch = oracle != count.ordered;
    json v;
    v["ordered"] = oracle;
    v["match"] = !mismatch;
    j["oracle"] = std::move(v);
  }
  int rc = emit_json(j, o.common);
  return mismatch ? 3 : rc;
}

// ----------------------------------------------------------------- fdist --

struct FdistOpts {
  CommonOpts common;
  std::string table_file;
  std::string expr;
  std::uint32_t j_value = 1;
};

int cmd_fdist(FdistOpts& o) {
  finish_common(o.common);
  SpectrumMethod method = parse_method(o.common.method_text);
  if (o.common.cfg.format == "csv")
    raise(errc::config_error, "fdist reports are json only");
  if (o.table_file.empty() == o.expr.empty())
    raise(errc::config_error, "exactly one of --table and --expr is required");

  RunConfig cfg = o.common.cfg;
  auto field = resolve_field(cfg);

  std::vector<std::uint32_t> table;
  if (!o.expr.empty()) {
    table = value_table_from_expression(*field, cfg.d, o.expr);
  } else {
    json j = load_json_file(o.table_file);
    if (!j.contains("table") || !j["table"].is_array())
      raise(errc::file_format_error, "table file needs a \"table\" array");
    for (const auto& e : j["table"]) table.push_back(element_from_json(*field, e));
  }

  FDistanceReport rep = f_distance_spectrum(*field, cfg.d, table, o.j_value, method);
  return emit_json(fdistance_report_to_json(*field, cfg.d, rep), o.common);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distance-colored graphs over F_q^d: spectra, mixing, pattern counts"};
  app.require_subcommand(1);

  SphereOpts sphere_opts;
  auto* sphere_cmd = app.add_subcommand("sphere", "sphere sizes and pair counts per radius");
  add_common(sphere_cmd, sphere_opts.common, true);
  sphere_cmd->add_option("--color", sphere_opts.colors, "radii to list, or all (0 included)");
  sphere_cmd->add_flag("--points", sphere_opts.points, "include the point lists");

  SpectrumOpts spectrum_opts;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "exact color-class spectra");
  add_common(spectrum_cmd, spectrum_opts.common, true);
  spectrum_cmd->add_option("--color", spectrum_opts.colors, "colors to solve, or all");

  CertifyOpts certify_opts;
  auto* certify_cmd =
      app.add_subcommand("certify", "spectral certificate over every color class");
  add_common(certify_cmd, certify_opts.common, true);

  MixingOpts mixing_opts;
  auto* mixing_cmd =
      app.add_subcommand("mixing", "edge-distribution checks on random subset pairs");
  add_common(mixing_cmd, mixing_opts.common, false);
  mixing_cmd->add_option("--color", mixing_opts.color, "color class to test");
  mixing_cmd->add_option("--samples", mixing_opts.samples, "number of subset pairs");
  mixing_cmd->add_option("--subset-size", mixing_opts.subset_size,
                         "fixed subset size (0: random per sample)");
  mixing_cmd->add_option("--lambda", mixing_opts.lambda,
                         "override the certified eigenvalue bound");
  mixing_cmd->add_flag("--no-checks", mixing_opts.no_checks,
                       "omit the per-sample array from the report");

  KaleidoOpts kaleido_opts;
  auto* kaleido_cmd =
      app.add_subcommand("kaleido", "partition, balance and threshold statistics");
  add_common(kaleido_cmd, kaleido_opts.common, true);
  kaleido_cmd->add_option("--k", kaleido_opts.k, "pattern vertex count for the threshold");
  kaleido_cmd->add_option("--edges", kaleido_opts.edges, "pattern edge count for the threshold");
  kaleido_cmd->add_option("--constant-C", kaleido_opts.constant_c, "threshold constant");
  kaleido_cmd->add_flag("--containment", kaleido_opts.containment,
                        "count standard patterns in one threshold-sized sample");
  kaleido_cmd->add_option("--color", kaleido_opts.common.cfg.colors,
                          "colors for the containment patterns");

  CountOpts count_opts;
  auto* count_cmd = app.add_subcommand("count", "colored pattern embeddings in a subset");
  add_common(count_cmd, count_opts.common, false);
  count_cmd->add_option("--pattern", count_opts.pattern_file, "pattern JSON file");
  count_cmd->add_option("--subset-file", count_opts.subset_file,
                        "subset JSON file (ids, points, or a sample request)");
  count_cmd->add_option("--subset-size", count_opts.subset_size,
                        "draw a seeded sample of this size (0: whole space)");
  count_cmd->add_option("--constant-C", count_opts.constant_c, "threshold constant");
  count_cmd->add_option("--oracle-cap", count_opts.common.cfg.oracle_cap,
                        "tuple budget for --verify");
  count_cmd->add_flag("--verify", count_opts.verify,
                      "recount by plain enumeration and compare");

  FdistOpts fdist_opts;
  auto* fdist_cmd =
      app.add_subcommand("fdist", "spectrum of a general distance-function graph");
  add_common(fdist_cmd, fdist_opts.common, false);
  fdist_cmd->add_option("--table", fdist_opts.table_file, "value table JSON file");
  fdist_cmd->add_option("--expr", fdist_opts.expr,
                        "built-in table: norm | sum-cubes | constant:<k>");
  fdist_cmd->add_option("--j", fdist_opts.j_value, "target value (element index)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    json err;
    err["error"] = {{"code", "ConfigError"}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 2;
  }

  auto started = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (app.got_subcommand(sphere_cmd)) rc = cmd_sphere(sphere_opts);
    else if (app.got_subcommand(spectrum_cmd)) rc = cmd_spectrum(spectrum_opts);
    else if (app.got_subcommand(certify_cmd)) rc = cmd_certify(certify_opts);
    else if (app.got_subcommand(mixing_cmd)) rc = cmd_mixing(mixing_opts);
    else if (app.got_subcommand(kaleido_cmd)) rc = cmd_kaleido(kaleido_opts);
    else if (app.got_subcommand(count_cmd)) rc = cmd_count(count_opts);
    else if (app.got_subcommand(fdist_cmd)) rc = cmd_fdist(fdist_opts);
  } catch (const Error& e) {
    json err;
    err["error"] = {{"code", e.code_name()}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    rc = (e.code() == errc::non_real_eigenvalue || e.code() == errc::internal_error) ? 3 : 2;
  }

  // timing goes to stderr so reports stay byte-stable
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  std::fprintf(stderr, "# elapsed_ms=%" PRId64 "\n", std::int64_t(elapsed));
  return rc;
}

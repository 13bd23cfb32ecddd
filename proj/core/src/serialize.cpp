#include "eucgraph/serialize.hpp"

#include <algorithm>
#include <fstream>

#include "eucgraph/rng.hpp"

namespace eucgraph {
namespace {

std::uint64_t get_uint(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    raise(errc::file_format_error, std::string("expected unsigned integer field \"") + key + "\"");
  return j[key].get<std::uint64_t>();
}

}  // namespace

json field_to_json(const Field& field) {
  json j;
  j["p"] = field.p();
  j["r"] = field.r();
  if (field.r() >= 2) j["modulus"] = field.modulus();
  return j;
}

std::shared_ptr<const Field> field_from_json(const json& j) {
  std::uint64_t p = get_uint(j, "p");
  std::uint64_t r = get_uint(j, "r");
  std::optional<std::vector<std::uint32_t>> modulus;
  if (j.contains("modulus") && !j["modulus"].is_null()) {
    if (!j["modulus"].is_array())
      raise(errc::file_format_error, "modulus must be a coefficient array");
    modulus.emplace();
    for (const auto& c : j["modulus"]) {
      if (!c.is_number_unsigned()) raise(errc::file_format_error, "modulus coefficients must be unsigned");
      modulus->push_back(c.get<std::uint32_t>());
    }
  }
  return std::make_shared<Field>(
      make_field(std::uint32_t(p), std::uint32_t(r), std::move(modulus)));
}

json element_to_json(const Field& field, std::uint32_t index) {
  return json(field.coeffs_of(index));
}

std::uint32_t element_from_json(const Field& field, const json& j) {
  if (j.is_number_unsigned() && field.r() == 1) {
    std::uint64_t v = j.get<std::uint64_t>();
    if (v >= field.q()) raise(errc::index_out_of_range, "element value out of range");
    return std::uint32_t(v);
  }
  if (!j.is_array() || j.size() != field.r())
    raise(errc::file_format_error, "element must be a coefficient array of length r");
  std::vector<std::uint32_t> coeffs;
  for (const auto& c : j) {
    if (!c.is_number_unsigned()) raise(errc::file_format_error, "element coefficients must be unsigned");
    coeffs.push_back(c.get<std::uint32_t>());
  }
  return field.index_of(coeffs);
}

json form_to_json(const QuadraticForm& form) {
  json j;
  j["dim"] = form.dim();
  json gram = json::array();
  for (std::uint32_t i = 0; i < form.dim(); ++i) {
    json row = json::array();
    for (std::uint32_t k = 0; k < form.dim(); ++k)
      row.push_back(element_to_json(form.field(), form.gram(i, k)));
    gram.push_back(std::move(row));
  }
  j["gram"] = std::move(gram);
  return j;
}

QuadraticForm form_from_json(std::shared_ptr<const Field> field, const json& j) {
  std::uint64_t dim = get_uint(j, "dim");
  if (!j.contains("gram") || !j["gram"].is_array() || j["gram"].size() != dim)
    raise(errc::file_format_error, "gram must be a dim x dim matrix");
  std::vector<std::uint32_t> entries;
  for (const auto& row : j["gram"]) {
    if (!row.is_array() || row.size() != dim)
      raise(errc::file_format_error, "gram must be a dim x dim matrix");
    for (const auto& e : row) entries.push_back(element_from_json(*field, e));
  }
  return QuadraticForm(std::move(field), std::uint32_t(dim), std::move(entries));
}

json point_to_json(const QuadraticSpace& space, std::uint64_t v) {
  std::vector<std::uint32_t> c(space.dim());
  space.decode(v, c);
  json j = json::array();
  for (std::uint32_t idx : c) j.push_back(element_to_json(space.field(), idx));
  return j;
}

std::uint64_t point_from_json(const QuadraticSpace& space, const json& j) {
  if (!j.is_array() || j.size() != space.dim())
    raise(errc::file_format_error, "point must be an array of d elements");
  std::vector<std::uint32_t> coords;
  for (const auto& e : j) coords.push_back(element_from_json(space.field(), e));
  return space.vertex_index(coords);
}

std::vector<std::uint64_t> subset_from_json(const QuadraticSpace& space, const json& j) {
  std::vector<std::uint64_t> out;
  if (j.is_array()) {
    for (const auto& entry : j) {
      if (entry.is_number_unsigned()) {
        std::uint64_t v = entry.get<std::uint64_t>();
        if (v >= space.vertex_count())
          raise(errc::subset_out_of_range, "vertex id out of range");
        out.push_back(v);
      } else if (entry.is_array()) {
        out.push_back(point_from_json(space, entry));
      } else {
        raise(errc::file_format_error, "subset entries must be vertex ids or points");
      }
    }
  } else if (j.is_object() && j.contains("sample")) {
    const json& s = j["sample"];
    std::uint64_t size = get_uint(s, "size");
    std::uint64_t seed = get_uint(s, "seed");
    SplitMix64 rng(seed);
    return sample_without_replacement(space.vertex_count(), size, rng);
  } else {
    raise(errc::file_format_error, "subset must be an array or {\"sample\": {...}}");
  }
  std::sort(out.begin(), out.end());
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] == out[i - 1]) raise(errc::config_error, "subset has a duplicate vertex");
  return out;
}

json sphere_to_json(const QuadraticSpace& space, const Sphere& sphere, bool include_points) {
  json j;
  j["q"] = space.field().q();
  j["d"] = space.dim();
  j["radius"] = element_to_json(space.field(), sphere.radius);
  j["size"] = sphere.points.size();
  if (include_points) {
    json pts = json::array();
    for (std::uint64_t v : sphere.points) pts.push_back(point_to_json(space, v));
    j["points"] = std::move(pts);
  }
  return j;
}

json pair_count_to_json(const QuadraticSpace& space, const PairCountReport& rep) {
  json j;
  j["q"] = space.field().q();
  j["d"] = space.dim();
  j["t"] = element_to_json(space.field(), rep.t);
  j["sphere_size"] = rep.sphere_size;
  j["count"] = rep.count;
  j["ratio_q2d1"] = rep.ratio_q2d1;
  return j;
}

json spectrum_report_to_json(const QuadraticSpace& space, const SpectrumReport& rep) {
  json j;
  j["q"] = space.field().q();
  j["d"] = space.dim();
  j["form"] = form_to_json(space.form());
  j["color"] = element_to_json(space.field(), rep.color);
  j["valency"] = rep.valency;
  j["eigenvalues"] = rep.eigenvalues;
  j["max_nontrivial"] = rep.max_nontrivial;
  j["bound"] = rep.bound;
  j["ramanujan_ok"] = rep.ramanujan_ok;
  return j;
}

json fdistance_report_to_json(const Field& field, std::uint32_t d, const FDistanceReport& rep) {
  json j;
  j["q"] = field.q();
  j["d"] = d;
  j["j"] = element_to_json(field, rep.j);
  j["set_size"] = rep.set_size;
  j["directed"] = rep.directed;
  j["values"] = rep.values;
  j["max_nontrivial"] = rep.max_nontrivial;
  j["c1"] = rep.c1;
  j["c2"] = rep.c2;
  j["bound"] = rep.bound;
  j["ramanujan_ok"] = rep.ramanujan_ok;
  return j;
}

json mixing_run_to_json(const QuadraticSpace& space, const MixingRun& run, bool include_checks) {
  json j;
  j["q"] = space.field().q();
  j["d"] = space.dim();
  j["color"] = element_to_json(space.field(), run.color);
  j["lambda"] = run.lambda;
  j["samples"] = run.samples;
  j["seed"] = run.seed;
  j["violations"] = run.violations;
  j["worst_excess"] = run.worst_excess;
  if (include_checks) {
    json checks = json::array();
    for (const auto& c : run.checks) {
      json e;
      e["size_b"] = c.size_b;
      e["size_c"] = c.size_c;
      e["edges"] = c.edges;
      e["predicted"] = c.predicted;
      e["bound"] = c.bound;
      e["defect"] = c.defect;
      e["ok"] = c.ok;
      checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
  }
  return j;
}

json certificate_to_json(const QuadraticSpace& space, const RCCertificate& cert) {
  json j;
  j["q"] = space.field().q();
  j["d"] = space.dim();
  j["n"] = cert.n;
  j["d_min"] = cert.d_min;
  j["d_max"] = cert.d_max;
  j["lambda_max"] = cert.lambda_max;
  j["all_regular"] = cert.all_regular;
  j["ramanujan_all"] = cert.ramanujan_all;
  j["rc_ok"] = cert.rc_ok;
  json per = json::array();
  for (const auto& s : cert.per_color) {
    json e;
    e["color"] = element_to_json(space.field(), s.color);
    e["valency"] = s.valency;
    e["max_nontrivial"] = s.max_nontrivial;
    e["ramanujan_ok"] = s.ramanujan_ok;
    per.push_back(std::move(e));
  }
  j["per_color"] = std::move(per);
  return j;
}

json kaleido_to_json(const QuadraticSpace& space, const KaleidoReport& rep) {
  json j;
  j["q"] = space.field().q();
  j["d"] = space.dim();
  j["n"] = rep.n;
  j["color_edges"] = rep.color_edges;
  j["zero_pairs"] = rep.zero_pairs;
  j["ratio_max"] = rep.ratio_max;
  j["completeness_defect"] = rep.completeness_defect;
  j["k"] = rep.k;
  j["pattern_edges"] = rep.pattern_edges;
  j["constant"] = rep.constant;
  j["threshold_size"] = rep.threshold_size;
  return j;
}

json containment_to_json(std::span<const ContainmentCheck> checks) {
  json arr = json::array();
  for (const auto& c : checks) {
    json e;
    e["pattern"] = c.name;
    e["subset_size"] = c.subset_size;
    e["count"] = c.count;
    e["found"] = c.found;
    arr.push_back(std::move(e));
  }
  return arr;
}

json pattern_to_json(const ColoredPattern& pattern) {
  json j;
  j["k"] = pattern.k();
  json edges = json::array();
  for (const auto& e : pattern.edges())
    edges.push_back(json::array({e.i, e.j, e.color}));
  j["edges"] = std::move(edges);
  return j;
}

ColoredPattern pattern_from_json(const Field& field, const json& j) {
  std::uint64_t k = get_uint(j, "k");
  if (!j.contains("edges") || !j["edges"].is_array())
    raise(errc::file_format_error, "pattern needs an edges array");
  std::vector<ColoredPattern::Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3)
      raise(errc::file_format_error, "pattern edges are [i, j, color] triples");
    if (!e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      raise(errc::file_format_error, "pattern edge endpoints must be unsigned");
    std::uint32_t color = e[2].is_number_unsigned() && e[2].get<std::uint64_t>() < field.q()
                              ? std::uint32_t(e[2].get<std::uint64_t>())
                              : element_from_json(field, e[2]);
    edges.push_back({e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>(), color});
  }
  return ColoredPattern(std::uint32_t(k), std::move(edges));
}

json embedding_count_to_json(const EmbeddingCount& count) {
  json j;
  j["subset_size"] = count.subset_size;
  j["ordered"] = count.ordered;
  j["unordered"] = count.unordered;
  j["aut"] = count.aut;
  j["predicted_main"] = count.predicted_main;
  j["predicted_tool3"] = count.predicted_tool3;
  j["in_theorem_range"] = count.in_theorem_range;
  j["threshold_met"] = count.threshold_met;
  return j;
}

json prediction_to_json(const PredictionReport& rep) {
  json j;
  j["ratio_main"] = rep.ratio_main;
  j["ratio_tool3"] = rep.ratio_tool3;
  j["lambda"] = rep.lambda;
  j["tool3_requirement"] = rep.tool3_requirement;
  j["tool3_size_ok"] = rep.tool3_size_ok;
  j["in_theorem_range"] = rep.in_theorem_range;
  j["threshold_met"] = rep.threshold_met;
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::file_format_error, "cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    raise(errc::file_format_error, "invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace eucgraph

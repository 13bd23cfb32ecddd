#include "eucgraph/config.hpp"

#include <charconv>

namespace eucgraph {

std::vector<std::uint32_t> parse_index_list(const std::string& text, const char* what) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      raise(errc::config_error, std::string("cannot parse ") + what + ": \"" + tok + "\"");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

json RunConfig::to_json() const {
  json j;
  j["p"] = p;
  j["r"] = r;
  if (modulus) j["modulus"] = *modulus;
  j["d"] = d;
  j["form"] = form;
  j["colors"] = colors;
  j["seed"] = seed;
  j["format"] = format;
  j["oracle_cap"] = oracle_cap;
  return j;
}

RunConfig RunConfig::from_json(const json& j) {
  RunConfig cfg;
  auto take = [&](const char* key, auto& slot) {
    if (!j.contains(key)) return;
    try {
      j[key].get_to(slot);
    } catch (const nlohmann::json::exception&) {
      raise(errc::file_format_error, std::string("bad value for config field \"") + key + "\"");
    }
  };
  take("p", cfg.p);
  take("r", cfg.r);
  if (j.contains("modulus") && !j["modulus"].is_null()) {
    std::vector<std::uint32_t> m;
    take("modulus", m);
    cfg.modulus = std::move(m);
  }
  take("d", cfg.d);
  take("form", cfg.form);
  take("colors", cfg.colors);
  take("seed", cfg.seed);
  take("format", cfg.format);
  take("oracle_cap", cfg.oracle_cap);
  if (cfg.format != "json" && cfg.format != "csv")
    raise(errc::config_error, "format must be json or csv");
  return cfg;
}

std::shared_ptr<const Field> resolve_field(RunConfig& cfg) {
  auto field = std::make_shared<Field>(make_field(cfg.p, cfg.r, cfg.modulus));
  cfg.modulus = field->r() >= 2 ? std::optional(field->modulus()) : std::nullopt;
  return field;
}

QuadraticForm resolve_form(const RunConfig& cfg, std::shared_ptr<const Field> field) {
  if (cfg.d < 1) raise(errc::config_error, "dimension must be >= 1");
  if (cfg.form == "identity") return QuadraticForm::identity(std::move(field), cfg.d);
  if (cfg.form == "nonresidue") return QuadraticForm::nonresidue(std::move(field), cfg.d);
  if (cfg.form.rfind("diag:", 0) == 0) {
    auto diag = parse_index_list(cfg.form.substr(5), "diagonal entry");
    if (diag.size() != cfg.d)
      raise(errc::config_error, "diagonal form must list exactly d entries");
    return QuadraticForm::diagonal(std::move(field), std::move(diag));
  }
  if (cfg.form.rfind("@", 0) == 0) {
    json j = load_json_file(cfg.form.substr(1));
    QuadraticForm form = form_from_json(std::move(field), j);
    if (form.dim() != cfg.d)
      raise(errc::config_error, "form file dimension does not match d");
    return form;
  }
  raise(errc::config_error, "unknown form: " + cfg.form);
}

std::vector<std::uint32_t> resolve_colors(const RunConfig& cfg, const Field& field) {
  std::vector<std::uint32_t> out;
  if (cfg.colors == "all") {
    for (std::uint32_t a = 1; a < field.q(); ++a) out.push_back(a);
    return out;
  }
  out = parse_index_list(cfg.colors, "color");
  for (std::uint32_t a : out) {
    if (a == 0) raise(errc::color_zero, "0 is not an edge color");
    if (a >= field.q()) raise(errc::index_out_of_range, "color out of range");
  }
  return out;
}

}  // namespace eucgraph

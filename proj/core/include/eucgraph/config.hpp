#ifndef EUCGRAPH_CONFIG_HPP
#define EUCGRAPH_CONFIG_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eucgraph/serialize.hpp"

namespace eucgraph {

// Everything a run needs to be reproduced. A resolved config (modulus filled
// in) round-trips through JSON byte-identically.
struct RunConfig {
  std::uint32_t p = 3;
  std::uint32_t r = 1;
  std::optional<std::vector<std::uint32_t>> modulus;
  std::uint32_t d = 2;
  std::string form = "identity";   // identity | nonresidue | diag:a,b,... | @file.json
  std::string colors = "all";      // all | comma-separated element indices
  std::uint64_t seed = 0;
  std::string format = "json";     // json | csv
  std::uint64_t oracle_cap = 10000000;  // tuple budget for the counting oracle

  json to_json() const;
  static RunConfig from_json(const json& j);
};

// "3,1,4" -> {3, 1, 4}; rejects anything that is not a plain unsigned list.
std::vector<std::uint32_t> parse_index_list(const std::string& text, const char* what);

// Builds the field and writes the modulus actually used back into the
// config, so the emitted config names the field unambiguously.
std::shared_ptr<const Field> resolve_field(RunConfig& cfg);

QuadraticForm resolve_form(const RunConfig& cfg, std::shared_ptr<const Field> field);

// The color list a command iterates: "all" is every nonzero element.
std::vector<std::uint32_t> resolve_colors(const RunConfig& cfg, const Field& field);

}  // namespace eucgraph

#endif

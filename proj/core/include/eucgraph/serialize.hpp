#ifndef EUCGRAPH_SERIALIZE_HPP
#define EUCGRAPH_SERIALIZE_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "eucgraph/embeddings.hpp"
#include "eucgraph/pseudorandom.hpp"
#include "eucgraph/quadratic.hpp"
#include "eucgraph/spectrum.hpp"

namespace eucgraph {

// Key order is part of the output contract (reports must be byte-stable),
// hence ordered_json throughout.
using json = nlohmann::ordered_json;

// {"p": .., "r": .., "modulus": [c0..cr]}; modulus omitted when r = 1.
json field_to_json(const Field& field);
std::shared_ptr<const Field> field_from_json(const json& j);

// Elements travel as coefficient arrays [c0,...,c_{r-1}]; a bare integer is
// accepted on input when r = 1.
json element_to_json(const Field& field, std::uint32_t index);
std::uint32_t element_from_json(const Field& field, const json& j);

// {"dim": d, "gram": [[e,...],...]} with elements as above.
json form_to_json(const QuadraticForm& form);
QuadraticForm form_from_json(std::shared_ptr<const Field> field, const json& j);

// A point is an array of d elements; subsets are arrays of vertex ids or
// points, or {"sample": {"size": m, "seed": s}} for a seeded draw.
json point_to_json(const QuadraticSpace& space, std::uint64_t v);
std::uint64_t point_from_json(const QuadraticSpace& space, const json& j);
std::vector<std::uint64_t> subset_from_json(const QuadraticSpace& space, const json& j);

json sphere_to_json(const QuadraticSpace& space, const Sphere& sphere, bool include_points);
json pair_count_to_json(const QuadraticSpace& space, const PairCountReport& rep);

json spectrum_report_to_json(const QuadraticSpace& space, const SpectrumReport& rep);
json fdistance_report_to_json(const Field& field, std::uint32_t d, const FDistanceReport& rep);

json mixing_run_to_json(const QuadraticSpace& space, const MixingRun& run, bool include_checks);
json certificate_to_json(const QuadraticSpace& space, const RCCertificate& cert);
json kaleido_to_json(const QuadraticSpace& space, const KaleidoReport& rep);
json containment_to_json(std::span<const ContainmentCheck> checks);

// {"k": .., "edges": [[i, j, color],...]} with colors as element indices.
json pattern_to_json(const ColoredPattern& pattern);
ColoredPattern pattern_from_json(const Field& field, const json& j);

json embedding_count_to_json(const EmbeddingCount& count);
json prediction_to_json(const PredictionReport& rep);

json load_json_file(const std::string& path);

}  // namespace eucgraph

#endif

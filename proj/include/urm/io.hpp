#pragma once

// Structured interchange for everything the CLI reads or writes. Key order
// is fixed so that parse -> serialize is the identity on normalized
// documents.

#include <string>

#include <nlohmann/json.hpp>

#include "urm/bounds.hpp"
#include "urm/oracle.hpp"
#include "urm/zebra.hpp"

namespace urm::io {

using json = nlohmann::ordered_json;

/// json::parse with failures rethrown as malformed_input_error.
[[nodiscard]] json parse_document(const std::string& text);

[[nodiscard]] std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Two-space indent plus trailing newline; the normalized on-disk form.
[[nodiscard]] std::string render(const json& doc);

[[nodiscard]] json multiset_to_json(const Multiset& ms);
[[nodiscard]] Multiset multiset_from_json(const json& doc);

[[nodiscard]] json partition_to_json(const Partition& p);
[[nodiscard]] Partition partition_from_json(const json& doc);

[[nodiscard]] json instance_to_json(const constructions::ConstructedInstance& inst);
[[nodiscard]] constructions::ConstructedInstance instance_from_json(const json& doc);

/// Classes rendered as element lists, one array per component.
[[nodiscard]] json canonical_partition_to_json(const CanonicalPartition& cp);

[[nodiscard]] json report_to_json(const ResolutionReport& report);

[[nodiscard]] json bounds_to_json(const bounds::BoundsReport& report);

[[nodiscard]] json exact_to_json(const oracle::ExactResult& result);

[[nodiscard]] json puzzle_to_json(const zebra::Puzzle& pz);
[[nodiscard]] zebra::Puzzle puzzle_from_json(const json& doc);

/// People keyed by category name, values by name, alongside the raw index
/// matrix.
[[nodiscard]] json solution_to_json(const zebra::PuzzleSolution& sol, const zebra::Puzzle& pz);

} // namespace urm::io

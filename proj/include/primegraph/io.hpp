#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "primegraph/classify.hpp"
#include "primegraph/enumerate.hpp"
#include "primegraph/graph.hpp"

namespace primegraph {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kToolName = "primegraph";
inline constexpr std::string_view kToolVersion = "1.0.0";

/// One graph6 record. An optional ">>graph6<<" header and a trailing newline
/// are accepted. Padding bits must be zero, so every accepted string is the
/// serialization of the graph it parses to.
/// Throws MALFORMED_INPUT (ParseError with byte offset), SIZE_EXCEEDED past
/// 64 vertices.
SimpleGraph parse_graph6(std::string_view text);

/// Size header is one byte up to 62 vertices, '~' plus three bytes above.
std::string serialize_graph6(const SimpleGraph& g);

/// Newline-delimited records; blank lines are skipped. Offsets in errors are
/// relative to the start of `text`.
std::vector<SimpleGraph> parse_graph6_lines(std::string_view text);

/// Unstyled undirected DOT with vertices 0..n-1.
std::string to_dot(const SimpleGraph& g, std::string_view name = "G");

Json classification_json(const SimpleGraph& g, const Classification& c);
Json enumeration_report_json(const EnumerationReport& report);

/// Wraps a payload with schema version, tool, and command. Seed is null when
/// the command draws no random numbers; runtime is only written when given.
Json make_document(std::string_view command, Json payload, std::optional<std::uint64_t> seed = std::nullopt,
                   std::optional<double> runtime_seconds = std::nullopt);

/// Two-space indentation plus a trailing newline.
std::string dump_document(const Json& doc);

}  // namespace primegraph

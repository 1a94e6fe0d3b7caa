#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "isk4col/coloring.hpp"
#include "isk4col/cutsets.hpp"
#include "isk4col/graph.hpp"
#include "isk4col/patterns.hpp"
#include "isk4col/pipeline.hpp"
#include "isk4col/recognition.hpp"

namespace isk4col {

enum class GraphFormat { dimacs, json };

/// DIMACS edge format: `p edge n m`, `e u v` with 1-based ids (stored
/// 0-based), `c` comment lines. Raises MalformedInput.
Graph read_dimacs(std::istream& in);
/// Needs ids 0..n-1.
void write_dimacs(std::ostream& out, const Graph& g);

/// {"n": int, "edges": [[u, v], ...]} with 0-based ids.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

/// `.json` means JSON, anything else DIMACS, unless `format` says otherwise.
Graph read_graph_file(const std::string& path, std::optional<GraphFormat> format = std::nullopt);
std::optional<GraphFormat> format_from_string(const std::string& name);

nlohmann::json to_json(const VertexColoring& c);
nlohmann::json to_json(const PatternWitness& w);
nlohmann::json to_json(const MembershipReport& r);
nlohmann::json to_json(const BasicVerdict& v);
nlohmann::json to_json(const CliqueCutsetTree& t);
nlohmann::json to_json(const ColoringCertificate& c);

/// Raises MalformedInput on anything that does not match the certificate layout.
ColoringCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace isk4col

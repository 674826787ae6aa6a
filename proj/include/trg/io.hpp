#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "trg/core.hpp"
#include "trg/explorer.hpp"
#include "trg/graph.hpp"
#include "trg/rowgraph.hpp"

namespace trg::io {

using Json = nlohmann::ordered_json;

// --- specs --------------------------------------------------------------------

/// {"n":6,"alpha":[1,3],"beta":[2,5]}
Json spec_to_json(const ToeplitzSpec& spec);
/// Inverse of spec_to_json; validates through parse_spec. Throws ParseError
/// for malformed JSON or missing fields.
ToeplitzSpec spec_from_json(const Json& json);
ToeplitzSpec spec_from_json_text(const std::string& text);

/// "1,3" -> {1,3}; "" -> {}. Whitespace around items is ignored. Throws
/// ParseError for anything that is not a comma-separated integer list.
std::vector<int> parse_int_list(const std::string& text);
/// {1,3} -> "1,3"
std::string join_ints(const std::vector<int>& values, const char* separator = ",");

// --- graphs -------------------------------------------------------------------

/// {"n":6,"edges":[[1,4],[1,6],...]} with the canonical sorted edge list.
Json graph_to_json(const Graph& graph);
/// Inverse of graph_to_json. Throws ParseError for malformed input and the
/// Graph constructor's errors for bad endpoints.
Graph graph_from_json(const Json& json);
Graph graph_from_json_text(const std::string& text);

/// Undirected DOT: one node statement per vertex 1..n, then one edge
/// statement per canonical pair.
std::string graph_to_dot(const Graph& graph, const std::string& name = "RG");

/// "1 4\n1 6\n..." one canonical pair per line.
std::string edges_to_text(const Graph& graph);

// --- summaries and reports --------------------------------------------------------

Json summary_to_json(const StructureSummary& summary);
/// Multi-line human description: encoding, triangle flag, one line per component.
std::string summary_to_text(const StructureSummary& summary);

Json report_to_json(const TheoremReport& report);
/// Aligned "key : value" lines followed by any counterexamples.
std::string report_to_text(const TheoremReport& report);

// --- catalog ------------------------------------------------------------------

/// n,alpha,beta,in_T_le2,triangle_free,components,gamma
std::string catalog_csv_header();
/// Lists are quoted ("1,3"), booleans are true/false.
std::string catalog_csv_line(const CatalogRow& row);

}  // namespace trg::io

#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "invgraph/graph.hpp"

namespace invgraph {

// Edge-list text: first line `n`, then one `u v [mult]` line per edge
// (1-based, mult defaults to 1; repeated pairs accumulate).
Graph parse_edge_list(std::istream& in);
std::string to_edge_list(const Graph& g);

// JSON form: {"schema": 1, "n": int, "edges": [[u, v, mult], ...]}.
// The schema field is optional on input and two-element edge entries
// default the multiplicity to 1. Loop entries [v, v, m] are accepted so
// inverse graphs round-trip.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// DOT export with vertex labels 1..n and one edge line per
// multiplicity unit.
std::string to_dot(const Graph& g);

// Reads a graph file, sniffing JSON (leading '{') versus edge list.
Graph read_graph_file(const std::string& path);

} // namespace invgraph

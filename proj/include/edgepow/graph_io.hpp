#pragma once

// Graph file formats.
//
// Text:  first line `n m`, then m lines `i j` (1-based). Blank lines and
//        lines starting with '#' are skipped.
// JSON:  {"n": int, "edges": [[i, j], ...]}
//
// Both parsers throw InputError whose message names the offending line.

#include <string>
#include <string_view>

#include "edgepow/graph.hpp"

namespace edgepow {

Graph parse_graph_text(std::string_view text);
Graph parse_graph_json(std::string_view text);
/// Dispatches on the first non-blank character ('{' means JSON).
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

/// Inline edge list such as "1-2,2-3,3-1"; n defaults to the largest label.
Graph parse_edge_list(std::string_view spec, int n = 0);

std::string to_text(const Graph& g);
std::string to_json_string(const Graph& g);

}  // namespace edgepow

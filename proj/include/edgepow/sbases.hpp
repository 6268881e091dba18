#pragma once

// s-bases: strongly non-bipartite graphs with μ* = s, and the catalog of
// minimal ones (no proper spanning subgraph is again an s-base).

#include <optional>
#include <vector>

#include "edgepow/graph.hpp"

namespace edgepow {

struct SBase {
  Graph graph;  // canonical form
  int s = 0;
  bool minimal = false;
};

bool is_sbase(const Graph& g, int s);
/// Checks every proper spanning subgraph. Throws ResourceError above 24 edges.
bool is_minimal_sbase(const Graph& g, int s);

/// Minimal s-bases on at most n_max vertices (default 3s, enough for all of
/// them), sorted by (vertex count, edge count, canonical adjacency).
/// Candidates are the (2s+1)-cycle, connected minimal r-bases (r < s) with
/// one ear of length 2(s-r) or 2(s-r)+1 through new vertices, and disjoint
/// unions of connected minimal bases; each candidate is verified directly.
std::vector<SBase> enumerate_minimal_sbases(int s, std::optional<int> n_max = std::nullopt);

}  // namespace edgepow

#pragma once

// Canonical labeling, isomorphism classes and graph catalogs.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "edgepow/graph.hpp"

namespace edgepow {

struct CanonicalForm {
  Graph graph;                  // relabeled copy
  std::vector<int> position;    // position[v - 1] = canonical label of input vertex v
};

/// Canonical relabeling via equitable refinement plus exhaustive
/// individualization. Deterministic; isomorphic inputs give equal `graph`.
CanonicalForm canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// Hex FNV-1a-64 digest of the canonical edge list.
std::string canonical_hash(const Graph& g);

/// Every graph on exactly n vertices up to isomorphism, canonical, sorted by
/// (edge count, adjacency). Memoized; practical for n <= 8.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> connected_graphs(int n);
/// Graphs with no isolated vertex (possibly disconnected).
std::vector<Graph> graphs_without_isolated_vertices(int n);

/// Random connected graph on n vertices: draws G(n, 1/2) with edges decided
/// in lexicographic pair order by the top bit of successive mt19937_64
/// outputs, rejecting until connected. Reproducible from the seed.
Graph random_connected_graph(int n, std::mt19937_64& rng);

Graph cycle_graph(int length);
Graph path_graph(int vertices);
Graph complete_graph(int n);
/// Disjoint union; vertices of b are shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace edgepow

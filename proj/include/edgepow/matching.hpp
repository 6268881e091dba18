#pragma once

// Vertex-weighted graphs Γ_a, their polarizations, matching numbers and the
// matching-critical / factor-critical predicates.
//
// A matching of Γ_a is a multiset of edges of Γ in which vertex i occurs at
// most a_i times; edges touching a zero-weight vertex can never occur. All
// matching numbers are computed on the polarization p(Γ_a) with Edmonds'
// blossom algorithm.

#include <compare>
#include <vector>

#include "edgepow/graph.hpp"

namespace edgepow {

/// Heaviest total weight accepted by polarization-based operations.
inline constexpr int kMaxTotalWeight = 64;

class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<int> weights);

  static WeightVector ones(int n) { return WeightVector(std::vector<int>(n, 1)); }
  static WeightVector zeros(int n) { return WeightVector(std::vector<int>(n, 0)); }

  int size() const { return static_cast<int>(w_.size()); }
  /// Weight of the 1-based vertex `label`.
  int operator[](int label) const { return w_[label - 1]; }
  int total() const;
  VertexSet support() const;
  const std::vector<int>& values() const { return w_; }

  WeightVector plus_unit(int label) const;
  WeightVector minus_unit(int label) const;

  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<int> w_;
};

class WeightedGraph {
 public:
  /// Throws InputError when the weight vector length differs from n.
  WeightedGraph(Graph base, WeightVector weights);

  const Graph& base() const { return base_; }
  const WeightVector& weights() const { return weights_; }
  VertexSet support() const { return weights_.support(); }
  /// Γ_{V(a)}.
  InducedSubgraph base_graph() const { return induced_subgraph(base_, support()); }
  /// Some support vertex has no neighbor inside the support.
  bool has_isolated_vertex() const;
  /// Γ_{V(a)} is connected (the zero vector counts as disconnected).
  bool is_connected() const;

  WeightedGraph with_weights(WeightVector w) const { return WeightedGraph(base_, std::move(w)); }

 private:
  Graph base_;
  WeightVector weights_;
};

struct Polarization {
  Graph graph;
  /// projection[k - 1] = original vertex of polarized vertex k. Copies of a
  /// vertex are consecutive and ordered by original label.
  std::vector<int> projection;
};

/// Throws ResourceError when |a| exceeds kMaxTotalWeight.
Polarization polarize(const WeightedGraph& wg);

/// Maximum-cardinality matching of a simple graph (Edmonds' blossom).
std::vector<Edge> maximum_matching(const Graph& g);

/// A matching of Γ_a as a sorted edge multiset with per-vertex usage.
struct Matching {
  std::vector<Edge> edges;
  std::vector<int> usage;  // usage[i - 1] = occurrences of vertex i
  int size() const { return static_cast<int>(edges.size()); }
};

Matching maximum_matching(const WeightedGraph& wg);
int matching_number(const WeightedGraph& wg);
/// Same as above without building a WeightedGraph; used by inner loops.
int matching_number(const Graph& g, const std::vector<int>& weights);

/// x^a ∈ I^t, i.e. ν(Γ_a) >= t. Requires t >= 1.
bool monomial_in_power(const WeightedGraph& wg, int t);
/// Some matching uses every vertex i exactly a_i times.
bool has_perfect_matching(const WeightedGraph& wg);
/// ν(Γ_{a-e_i}) = ν(Γ_a) for every i in V(a). True for a = 0.
bool is_matching_critical(const WeightedGraph& wg);
/// Γ_{a-e_i} has a perfect matching for every i in V(a).
bool is_factor_critical(const WeightedGraph& wg);

/// Γ_{a+e_i+e_j} for an edge {i,j} inside V(a). Throws PreconditionError
/// when {i,j} is not an edge of Γ_{V(a)}.
WeightedGraph augment_weights(const WeightedGraph& wg, int i, int j);

}  // namespace edgepow

#pragma once

// Simple undirected graphs on vertices 1..n together with the cover,
// neighborhood and core machinery used throughout the library.
//
// Vertex labels are 1-based at every public boundary. Internally vertex
// `v` is bit `v - 1` of a 64-bit mask, which caps graphs at 64 vertices.

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace edgepow {

inline constexpr int kMaxVertices = 64;

using Mask = std::uint64_t;

inline constexpr Mask bit_of(int label) { return Mask{1} << (label - 1); }
inline constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// A subset of {1..64}. Ordering is lexicographic on the sorted member list.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> labels);

  static VertexSet from_labels(const std::vector<int>& labels);
  static constexpr VertexSet range(int n) { return VertexSet(full_mask(n)); }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int label) const {
    return label >= 1 && label <= kMaxVertices && (bits_ & bit_of(label)) != 0;
  }
  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  /// Largest member label, 0 when empty.
  constexpr int max_label() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

  void insert(int label);
  void erase(int label);

  /// Sorted 1-based labels.
  std::vector<int> members() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
  friend std::strong_ordering operator<=>(VertexSet a, VertexSet b);

 private:
  Mask bits_ = 0;
};

std::string to_string(VertexSet s);

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on 1..n. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  /// Build from 1-based edges. Throws InputError on loops, duplicates, or
  /// out-of-range endpoints.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  /// Build from adjacency masks; the caller guarantees symmetry and no loops.
  static Graph from_adjacency(std::vector<Mask> adjacency);

  int n() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::range(n()); }

  bool adjacent(int u, int v) const { return (adj_[u - 1] & bit_of(v)) != 0; }
  Mask neighbor_mask(int v) const { return adj_[v - 1]; }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v - 1]); }
  int degree(int v) const { return std::popcount(adj_[v - 1]); }

  /// Sorted edge list.
  std::vector<Edge> edges() const;
  const std::vector<Mask>& adjacency() const { return adj_; }

  Graph with_edge_removed(int u, int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Mask> adj_;
};

/// Γ_U relabeled to 1..|U| in increasing label order.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> labels;  // labels[k - 1] = original label of local vertex k

  int original(int local) const { return labels[local - 1]; }
  VertexSet lift(VertexSet local) const;
  /// Original-label set -> local-label set; members outside the subgraph are dropped.
  VertexSet restrict(VertexSet original) const;
};

void require_subset(const Graph& g, VertexSet u, const char* what);

InducedSubgraph induced_subgraph(const Graph& g, VertexSet u);

VertexSet closed_neighborhood(const Graph& g, VertexSet u);
bool is_dominating(const Graph& g, VertexSet u);

bool is_cover(const Graph& g, VertexSet f);
/// True iff f is a cover and no proper subset of f is a cover.
bool is_minimal_cover(const Graph& g, VertexSet f);
/// All inclusion-minimal covers in lexicographic order.
std::vector<VertexSet> minimal_covers(const Graph& g);

/// c(F) = F \ N[V \ F]. Throws PreconditionError when f is not a cover.
VertexSet core(const Graph& g, VertexSet f);

/// Connected components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
/// Components of Γ_U, as sets of original labels.
std::vector<VertexSet> connected_components(const Graph& g, VertexSet u);

bool is_bipartite(const Graph& g);
/// Every component contains an odd cycle. False for the empty graph and for
/// any graph with an isolated vertex.
bool is_strongly_non_bipartite(const Graph& g);
/// Same test on Γ_U without materializing the subgraph.
bool is_strongly_non_bipartite(const Graph& g, VertexSet u);

bool has_isolated_vertex(const Graph& g);
/// Length of the shortest odd cycle, or nullopt for bipartite graphs.
std::optional<int> shortest_odd_cycle(const Graph& g);

/// Covers reported by the associated-prime engine.
struct CoverReport {
  VertexSet cover;
  bool is_minimal_cover = false;
  VertexSet core;
  /// U with Γ_U strongly non-bipartite certifying that P_F is embedded.
  std::optional<VertexSet> witness;
  /// μ*(Γ_U) of the witness.
  std::optional<int> witness_mu_star;
  /// s(Γ_{c(F)}); P_F is associated to I^t exactly for t >= stability_index + 1.
  std::optional<int> stability_index;
};

}  // namespace edgepow

#pragma once

// Ear decompositions in the walk-based sense, φ*(Γ), μ*(Γ) and s(Γ).
//
// An ear is a walk. In a decomposition of Γ_a, each component's first ear is
// a closed walk whose positions 0..ℓ-1 count towards the weights; every later
// ear has both endpoints on earlier ears of the same component and only its
// inner positions 1..ℓ-1 count. The counts must reproduce a exactly.
//
// φ* is found by dynamic programming over the set of vertices already
// covered: once a vertex set S carries an initially odd decomposition, how
// S was reached no longer matters for the ears that may follow.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "edgepow/graph.hpp"
#include "edgepow/matching.hpp"

namespace edgepow {

/// Largest component the exact φ* search accepts.
inline constexpr int kMaxEarSearchVertices = 22;

struct Ear {
  std::vector<int> walk;  // v_0, ..., v_ℓ

  int length() const { return static_cast<int>(walk.size()) - 1; }
  bool is_odd() const { return length() % 2 == 1; }
  bool is_closed() const { return !walk.empty() && walk.front() == walk.back(); }
  friend auto operator<=>(const Ear&, const Ear&) = default;
};

struct EarDecomposition {
  std::vector<std::vector<Ear>> components;  // ordered by smallest vertex
  WeightVector weights;

  /// φ(E): number of even ears.
  int even_ear_count() const;
  bool is_initially_odd() const;
  /// Every ear has odd length.
  bool all_ears_odd() const;
};

/// Weight vector realised by the ears' counted positions.
WeightVector appearance_counts(const EarDecomposition& e, int n);

/// nullopt when `e` is an ear decomposition of Γ_{e.weights} over g,
/// otherwise a description of the first violated condition.
std::optional<std::string> check_decomposition(const Graph& g, const EarDecomposition& e);

struct MuStarResult {
  int mu_star = 0;
  int phi_star = 0;
  std::optional<EarDecomposition> witness_decomposition;
  /// A factor-critical weighting with full support and ν = μ* per component.
  std::optional<WeightVector> witness_weights;
};

/// Exact φ* and μ* = (φ* + n - c) / 2, with an optimal initially odd
/// decomposition of Γ and the weighting obtained by turning each even ear
/// into an odd one. Throws PreconditionError unless g is strongly
/// non-bipartite, ResourceError for components above kMaxEarSearchVertices.
MuStarResult phi_star(const Graph& g);
int mu_star(const Graph& g);

/// μ* as the least ν over factor-critical weightings a >= 1 of each
/// component, searched by increasing |a|. Throws ResourceError when the
/// answer would exceed t_max.
MuStarResult mu_star_via_weights(const Graph& g, int t_max);

/// Breaks walks of `e` so that it decomposes Γ_{a-e_i}; at most one even ear
/// is added and an odd first ear stays odd. Requires a_i >= 2.
EarDecomposition reduce_decomposition(const EarDecomposition& e, int i);

/// All-odd decomposition of a connected Γ_a with more than one support
/// vertex, found on p(Γ_a) and projected back; nullopt when none exists.
/// Throws ResourceError when |a| exceeds kMaxEarSearchVertices.
std::optional<EarDecomposition> odd_ear_decomposition(const WeightedGraph& wg);

/// Memoized μ*(Γ_U) for subsets of one fixed graph.
class MuStarCache {
 public:
  explicit MuStarCache(const Graph& g) : g_(g) {}

  /// nullopt when Γ_U is not strongly non-bipartite.
  std::optional<int> mu_star(VertexSet u);
  const Graph& graph() const { return g_; }

 private:
  int component_phi(Mask component);

  const Graph& g_;
  std::unordered_map<Mask, int> phi_;
};

struct SInvariant {
  int s = 0;
  VertexSet witness;  // lexicographically least minimizing dominating set
};

/// s(Γ): least μ*(Γ_U) over dominating U with Γ_U strongly non-bipartite.
/// Requires g strongly non-bipartite without isolated vertices.
SInvariant s_invariant_with_witness(const Graph& g);
int s_invariant(const Graph& g);
/// Least μ*(Γ_U) over U ⊆ `within` dominating Γ_within with Γ_U strongly
/// non-bipartite, on the cache's graph; nullopt when no such U exists.
/// s(Γ) is the case within = V.
std::optional<SInvariant> min_dominating_base(MuStarCache& cache, VertexSet within);

}  // namespace edgepow

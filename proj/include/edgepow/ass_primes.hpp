#pragma once

// Associated primes of powers of the edge ideal, read off the graph.
//
// For a cover F, P_F = (x_i | i ∈ F). Minimal covers give the minimal primes.
// A non-minimal cover F gives an embedded prime of I^t exactly when its core
// graph Γ_{c(F)} has a dominating set U with Γ_U strongly non-bipartite and
// μ*(Γ_U) < t, that is when t > s(Γ_{c(F)}).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "edgepow/ears.hpp"
#include "edgepow/graph.hpp"

namespace edgepow {

struct EmbeddedWitness {
  VertexSet u;      // original labels, dominating in Γ_{c(F)}
  int mu_star = 0;  // μ*(Γ_U)
};

/// Embedded-prime test for a non-minimal cover. Returns the μ*-minimizing
/// witness (ties broken lexicographically) or nullopt when P_F ∉ Ass(I^t).
/// Throws PreconditionError when f is not a cover or is minimal, and
/// InputError when g has an isolated vertex.
std::optional<EmbeddedWitness> embedded_prime_test(const Graph& g, VertexSet f, int t);

/// P_F ∈ Ass(I^t) for any cover F.
bool prime_in_ass(const Graph& g, VertexSet f, int t);

struct AssResult {
  int t = 1;
  std::vector<CoverReport> minimal_primes;   // sorted by cover
  std::vector<CoverReport> embedded_primes;  // sorted by cover
  std::string graph_hash;
};

/// Ass(I^t). Throws InputError when g has an isolated vertex.
AssResult associated_primes(const Graph& g, int t);

/// 𝔪 ∈ Ass(I^t).
bool max_ideal_in_ass(const Graph& g, int t);

struct StabilityReport {
  /// Minimal primes followed by the members of C(Γ), each sorted by cover.
  std::vector<CoverReport> ass_infty_members;
  int astab = 1;
  /// m - t with m = #{vertices of degree >= 2} and 2t+1 the shortest odd
  /// cycle; absent for bipartite graphs.
  std::optional<int> cms_bound;
  /// s(Γ_{c(F)}) + 1 for every F in C(Γ).
  std::map<VertexSet, int> per_prime_index;
};

StabilityReport ass_infinity(const Graph& g);

/// depth S/I^t > 0, i.e. 𝔪 ∉ Ass(I^t), for t in {2, 3}. The answer is
/// cross-checked against the explicit small-base catalog; a disagreement
/// throws std::logic_error.
bool depth_positive_test(const Graph& g, int t);

/// The catalog side of depth_positive_test: some dominating U has Γ_U equal
/// to a triangle (t = 2), or spanned component by component by a triangle
/// or one of the four minimal 2-bases (t = 3).
bool has_dominating_catalog_base(const Graph& g, int t);

}  // namespace edgepow

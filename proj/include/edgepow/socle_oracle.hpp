#pragma once

// Brute-force socle oracle. 𝔪 ∈ Ass(I^t) iff some monomial x^a lies in
// (I^t : 𝔪) \ I^t, i.e. ν(Γ_a) < t while ν(Γ_{a+e_i}) >= t for every i.
// Every such a can be taken with a_i <= t-1, so a finite scan decides it.
//
// This module deliberately uses only graph and matching primitives, never
// the ear or associated-prime engines it is meant to check.

#include <cstdint>
#include <optional>
#include <vector>

#include "edgepow/graph.hpp"
#include "edgepow/matching.hpp"

namespace edgepow {

struct SocleWitness {
  WeightVector weights;
  int t = 1;
};

struct OracleOptions {
  /// Largest number of exponent vectors one scan may visit.
  std::uint64_t guard_ops = 100'000'000;
  /// Scan a_i <= t instead of a_i <= t-1 (consistency check of the bound).
  bool widen = false;
};

/// x^a ∈ (I^t : 𝔪) \ I^t.
bool is_socle_monomial(const Graph& g, const WeightVector& a, int t);

/// Lexicographically first witness, or nullopt. Throws ResourceError when
/// the scan exceeds options.guard_ops.
std::optional<SocleWitness> oracle_max_ideal_in_ass(const Graph& g, int t, const OracleOptions& options = {});

/// Every witness of the scan in lexicographic order.
std::vector<SocleWitness> oracle_all_witnesses(const Graph& g, int t, const OracleOptions& options = {});

/// P_F ∈ Ass(I^t): true for minimal covers; otherwise the maximal ideal of
/// the core graph is associated to some power s <= t of its edge ideal.
bool oracle_prime_in_ass(const Graph& g, VertexSet f, int t, const OracleOptions& options = {});

/// The four necessary conditions on a socle witness for t >= 2: V(a)
/// dominating, Γ_a without isolated vertices, ν(Γ_a) = t-1, and either
/// ν(Γ_{a-e_i}) = t-1 for all i ∈ V(a) or some a-e_i is a socle witness for
/// t-1. False for t < 2.
bool verify_socle_conditions(const Graph& g, const SocleWitness& w);

}  // namespace edgepow

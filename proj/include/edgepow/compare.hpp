#pragma once

// Differential check of the associated-prime engine against the socle
// oracle over a corpus of graphs.

#include <optional>
#include <string>
#include <vector>

#include "edgepow/graph.hpp"
#include "edgepow/socle_oracle.hpp"

namespace edgepow {

struct CompareOptions {
  int t_max = 4;
  int jobs = 1;
  OracleOptions oracle;
};

struct Mismatch {
  Graph graph;
  VertexSet cover;
  int t = 0;
  bool engine = false;
  bool oracle = false;
};

struct CompareSummary {
  long graphs = 0;
  long checks = 0;  // (graph, cover, t) triples
  long mismatches = 0;
  std::optional<Mismatch> first;  // earliest in corpus order
};

/// Compares P_F ∈ Ass(I^t) for every cover F and 1 <= t <= t_max of every
/// graph. Graphs with isolated vertices are rejected with InputError. The
/// summary does not depend on `jobs`.
CompareSummary compare_corpus(const std::vector<Graph>& corpus, const CompareOptions& options);

std::string describe(const Mismatch& m);

}  // namespace edgepow

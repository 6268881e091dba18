#include "edgepow/compare.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "edgepow/ass_primes.hpp"
#include "edgepow/canonical.hpp"
#include "edgepow/error.hpp"

namespace edgepow {

namespace {

// Smallest s <= t_max with the maximal ideal of Γ_{c(F)} associated to the
// s-th power, keyed by the canonical form of the core graph.
class OracleCache {
 public:
  explicit OracleCache(const CompareOptions& options) : options_(options) {}

  std::optional<int> first_power(const Graph& core_graph) {
    const Graph key = canonical_form(core_graph).graph;
    {
      std::lock_guard lock(mu_);
      auto it = cache_.find(key.adjacency());
      if (it != cache_.end()) return it->second;
    }
    std::optional<int> found;
    for (int s = 1; s <= options_.t_max && !found; ++s)
      if (oracle_max_ideal_in_ass(key, s, options_.oracle)) found = s;
    std::lock_guard lock(mu_);
    cache_.emplace(key.adjacency(), found);
    return found;
  }

 private:
  const CompareOptions& options_;
  std::mutex mu_;
  std::map<std::vector<Mask>, std::optional<int>> cache_;
};

struct GraphOutcome {
  long checks = 0;
  long mismatches = 0;
  std::optional<Mismatch> first;
};

GraphOutcome compare_graph(const Graph& g, const CompareOptions& options, OracleCache& oracle) {
  GraphOutcome out;
  std::vector<std::set<VertexSet>> engine(options.t_max + 1);
  for (int t = 1; t <= options.t_max; ++t) {
    const AssResult r = associated_primes(g, t);
    for (const auto& c : r.minimal_primes) engine[t].insert(c.cover);
    for (const auto& c : r.embedded_primes) engine[t].insert(c.cover);
  }
  for (Mask m = 0; m < (Mask{1} << g.n()); ++m) {
    const VertexSet f(m);
    if (!is_cover(g, f)) continue;
    const bool minimal = is_minimal_cover(g, f);
    std::optional<int> first;
    if (!minimal) first = oracle.first_power(induced_subgraph(g, core(g, f)).graph);
    for (int t = 1; t <= options.t_max; ++t) {
      ++out.checks;
      const bool by_oracle = minimal || (first && *first <= t);
      const bool by_engine = engine[t].count(f) > 0;
      if (by_oracle != by_engine) {
        ++out.mismatches;
        if (!out.first) out.first = Mismatch{g, f, t, by_engine, by_oracle};
      }
    }
  }
  return out;
}

}  // namespace

CompareSummary compare_corpus(const std::vector<Graph>& corpus, const CompareOptions& options) {
  if (options.t_max < 1) throw PreconditionError("compare: t_max must be at least 1");
  for (const auto& g : corpus)
    if (has_isolated_vertex(g)) throw InputError("compare: corpus graph has an isolated vertex");
  OracleCache oracle(options);
  std::vector<GraphOutcome> outcomes(corpus.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mu;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t k; (k = next++) < corpus.size();) {
      try {
        outcomes[k] = compare_graph(corpus[k], options, oracle);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  CompareSummary summary;
  summary.graphs = static_cast<long>(corpus.size());
  for (auto& o : outcomes) {
    summary.checks += o.checks;
    summary.mismatches += o.mismatches;
    if (!summary.first && o.first) summary.first = std::move(o.first);
  }
  return summary;
}

std::string describe(const Mismatch& m) {
  std::string edges;
  for (auto e : m.graph.edges()) edges += (edges.empty() ? "" : ",") + std::to_string(e.u) + "-" + std::to_string(e.v);
  return "graph n=" + std::to_string(m.graph.n()) + " edges " + edges + ", cover " + to_string(m.cover) +
         ", t=" + std::to_string(m.t) + ": engine says " + (m.engine ? "associated" : "not associated") +
         ", oracle says " + (m.oracle ? "associated" : "not associated");
}

}  // namespace edgepow

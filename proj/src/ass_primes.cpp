#include "edgepow/ass_primes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "edgepow/canonical.hpp"
#include "edgepow/error.hpp"

namespace edgepow {

namespace {

void require_no_isolated(const Graph& g) {
  if (has_isolated_vertex(g))
    throw InputError("graph has an isolated vertex; associated primes need a graph without isolated vertices");
}

void require_power(int t) {
  if (t < 1) throw PreconditionError("the power t must be at least 1");
}

// Shared state for one graph: μ* per component and the least dominating
// base per core.
class Engine {
 public:
  explicit Engine(const Graph& g) : g_(g), mu_(g) {}

  const std::optional<SInvariant>& core_base(VertexSet core) {
    auto it = bases_.find(core.bits());
    if (it == bases_.end()) it = bases_.emplace(core.bits(), min_dominating_base(mu_, core)).first;
    return it->second;
  }

  // Every non-minimal cover F that some U with μ*(Γ_U) <= bound makes
  // minimal among the covers containing N[U]: F = N[U] ∪ M with M a minimal
  // cover of Γ_{V \ N[U]}.
  std::set<VertexSet> candidate_covers(std::optional<int> bound) {
    Mask pool = 0;
    for (VertexSet comp : connected_components(g_)) {
      if (is_bipartite(induced_subgraph(g_, comp).graph)) continue;
      for (int v : comp.members())
        if (g_.degree(v) >= 2) pool |= bit_of(v);
    }
    std::set<VertexSet> out;
    for (Mask sub = pool; sub != 0; sub = (sub - 1) & pool) {
      const VertexSet u(sub);
      const auto mu = mu_.mu_star(u);
      if (!mu || (bound && *mu > *bound)) continue;
      const VertexSet closed = closed_neighborhood(g_, u);
      const InducedSubgraph rest = induced_subgraph(g_, g_.vertices() - closed);
      for (VertexSet m : minimal_covers(rest.graph)) out.insert(closed | rest.lift(m));
    }
    return out;
  }

  CoverReport report(VertexSet f) {
    CoverReport r;
    r.cover = f;
    r.core = core(g_, f);
    r.is_minimal_cover = false;
    const auto& base = core_base(r.core);
    if (base) {
      r.witness = base->witness;
      r.witness_mu_star = base->s;
      r.stability_index = base->s;
    }
    return r;
  }

 private:
  const Graph& g_;
  MuStarCache mu_;
  std::unordered_map<Mask, std::optional<SInvariant>> bases_;
};

std::vector<CoverReport> minimal_reports(const Graph& g) {
  std::vector<CoverReport> out;
  for (VertexSet f : minimal_covers(g)) {
    CoverReport r;
    r.cover = f;
    r.is_minimal_cover = true;
    r.core = core(g, f);
    out.push_back(r);
  }
  return out;
}

}  // namespace

std::optional<EmbeddedWitness> embedded_prime_test(const Graph& g, VertexSet f, int t) {
  require_no_isolated(g);
  require_power(t);
  require_subset(g, f, "cover");
  if (!is_cover(g, f)) throw PreconditionError("embedded_prime_test(): " + to_string(f) + " is not a cover");
  if (is_minimal_cover(g, f))
    throw PreconditionError("embedded_prime_test(): " + to_string(f) + " is a minimal cover");
  MuStarCache cache(g);
  const auto base = min_dominating_base(cache, core(g, f));
  if (!base || base->s >= t) return std::nullopt;
  return EmbeddedWitness{base->witness, base->s};
}

bool prime_in_ass(const Graph& g, VertexSet f, int t) {
  require_no_isolated(g);
  require_subset(g, f, "cover");
  if (!is_cover(g, f)) throw PreconditionError("prime_in_ass(): " + to_string(f) + " is not a cover");
  if (is_minimal_cover(g, f)) return true;
  return embedded_prime_test(g, f, t).has_value();
}

AssResult associated_primes(const Graph& g, int t) {
  require_no_isolated(g);
  require_power(t);
  AssResult out;
  out.t = t;
  out.graph_hash = canonical_hash(g);
  out.minimal_primes = minimal_reports(g);
  if (t == 1) return out;  // s(Γ) >= 1 always, so I itself has no embedded primes
  Engine engine(g);
  for (VertexSet f : engine.candidate_covers(t - 1)) {
    CoverReport r = engine.report(f);
    if (!r.witness || *r.witness_mu_star >= t)
      throw std::logic_error("candidate cover " + to_string(f) + " failed its own embedded test");
    out.embedded_primes.push_back(std::move(r));
  }
  return out;
}

bool max_ideal_in_ass(const Graph& g, int t) {
  require_no_isolated(g);
  require_power(t);
  if (!is_strongly_non_bipartite(g)) return false;
  MuStarCache cache(g);
  return min_dominating_base(cache, g.vertices())->s < t;
}

StabilityReport ass_infinity(const Graph& g) {
  require_no_isolated(g);
  StabilityReport out;
  out.ass_infty_members = minimal_reports(g);
  Engine engine(g);
  for (VertexSet f : engine.candidate_covers(std::nullopt)) {
    CoverReport r = engine.report(f);
    if (!r.stability_index) throw std::logic_error("member of C(Γ) without a dominating base");
    out.per_prime_index[f] = *r.stability_index + 1;
    out.astab = std::max(out.astab, *r.stability_index + 1);
    out.ass_infty_members.push_back(std::move(r));
  }
  if (auto odd = shortest_odd_cycle(g)) {
    int deg2 = 0;
    for (int v = 1; v <= g.n(); ++v)
      if (g.degree(v) >= 2) ++deg2;
    out.cms_bound = deg2 - (*odd - 1) / 2;
  }
  return out;
}

namespace {

// Canonical adjacency of the connected minimal 2-bases: triangle with a
// pendant, two triangles sharing a vertex, and the 5-cycle.
const std::vector<Graph>& two_base_catalog() {
  static const std::vector<Graph> catalog = [] {
    std::vector<Graph> c;
    c.push_back(canonical_form(Graph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}})).graph);
    c.push_back(canonical_form(Graph(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}})).graph);
    c.push_back(canonical_form(cycle_graph(5)).graph);
    return c;
  }();
  return catalog;
}

bool is_triangle(const Graph& h) { return h.n() == 3 && h.edge_count() == 3; }

// Some spanning subgraph of the connected graph h is a catalog 2-base.
bool spans_two_base(const Graph& h) {
  if (h.n() != 4 && h.n() != 5) return false;
  const auto edges = h.edges();
  const auto& catalog = two_base_catalog();
  for (Mask keep = 0; keep < (Mask{1} << edges.size()); ++keep) {
    std::vector<std::pair<int, int>> sub;
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (keep >> k & 1) sub.emplace_back(edges[k].u, edges[k].v);
    const Graph c = canonical_form(Graph(h.n(), sub)).graph;
    if (std::find(catalog.begin(), catalog.end(), c) != catalog.end()) return true;
  }
  return false;
}

}  // namespace

bool has_dominating_catalog_base(const Graph& g, int t) {
  require_no_isolated(g);
  if (t != 2 && t != 3) throw PreconditionError("catalog check is only available for t = 2 and t = 3");
  const int budget = t - 1;
  const int max_size = t == 2 ? 3 : 6;
  for (Mask sub = 1; sub < (Mask{1} << g.n()); ++sub) {
    if (std::popcount(sub) > max_size) continue;
    const VertexSet u(sub);
    if (!is_dominating(g, u)) continue;
    int used = 0;
    for (VertexSet comp : connected_components(g, u)) {
      const Graph h = induced_subgraph(g, comp).graph;
      if (is_triangle(h))
        used += 1;
      else if (spans_two_base(h))
        used += 2;
      else
        used += budget + 1;
      if (used > budget) break;
    }
    if (used <= budget) return true;
  }
  return false;
}

bool depth_positive_test(const Graph& g, int t) {
  if (t != 2 && t != 3) throw PreconditionError("depth_positive_test() needs t = 2 or t = 3");
  const bool positive = !max_ideal_in_ass(g, t);
  if (positive == has_dominating_catalog_base(g, t))
    throw std::logic_error("depth test disagrees with the small-base catalog");
  return positive;
}

}  // namespace edgepow

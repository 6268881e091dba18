#include "edgepow/sbases.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "edgepow/canonical.hpp"
#include "edgepow/ears.hpp"
#include "edgepow/error.hpp"

namespace edgepow {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList edge_pairs(const Graph& g) {
  EdgeList out;
  for (auto e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

// B plus an ear of `length` from u to v through length-1 new vertices.
Graph with_ear(const Graph& b, int u, int v, int length) {
  EdgeList edges = edge_pairs(b);
  const int fresh = length - 1;
  int prev = u;
  for (int k = 1; k <= fresh; ++k) {
    edges.emplace_back(prev, b.n() + k);
    prev = b.n() + k;
  }
  if (u != v || length > 2) edges.emplace_back(prev, v);
  return Graph(b.n() + fresh, edges);
}

struct Catalog {
  std::map<int, std::vector<Graph>> by_s;  // minimal s-bases, canonical
  int n_max;

  const std::vector<Graph>& get(int s) {
    auto it = by_s.find(s);
    if (it != by_s.end()) return it->second;
    std::set<std::pair<int, std::vector<Mask>>> seen;
    std::vector<Graph> found;
    auto consider = [&](const Graph& g) {
      if (g.n() > n_max) return;
      Graph c = canonical_form(g).graph;
      if (!seen.emplace(c.edge_count(), c.adjacency()).second) return;
      if (is_minimal_sbase(c, s)) found.push_back(std::move(c));
    };
    if (2 * s + 1 <= n_max) consider(cycle_graph(2 * s + 1));
    for (int r = 1; r < s; ++r) {
      for (const Graph& b : connected(r)) {
        for (int length : {2 * (s - r), 2 * (s - r) + 1}) {
          if (b.n() + length - 1 > n_max) continue;
          for (int u = 1; u <= b.n(); ++u)
            for (int v = u; v <= b.n(); ++v) consider(with_ear(b, u, v, length));
        }
      }
    }
    // Disjoint unions of connected minimal bases whose values add up to s.
    std::vector<std::pair<int, Graph>> parts;
    for (int r = 1; r < s; ++r)
      for (Graph& b : connected(r)) parts.emplace_back(r, std::move(b));
    std::vector<std::size_t> pick;
    auto extend = [&](auto&& self, std::size_t from, int left, const Graph& acc) -> void {
      if (left == 0) {
        if (pick.size() >= 2) consider(acc);
        return;
      }
      for (std::size_t k = from; k < parts.size(); ++k) {
        if (parts[k].first > left || acc.n() + parts[k].second.n() > n_max) continue;
        pick.push_back(k);
        self(self, k, left - parts[k].first, disjoint_union(acc, parts[k].second));
        pick.pop_back();
      }
    };
    extend(extend, 0, s, Graph());
    std::sort(found.begin(), found.end(), [](const Graph& a, const Graph& b) {
      return std::tuple(a.n(), a.edge_count(), a.adjacency()) <
             std::tuple(b.n(), b.edge_count(), b.adjacency());
    });
    return by_s[s] = std::move(found);
  }

  std::vector<Graph> connected(int r) {
    std::vector<Graph> out;
    for (const Graph& g : get(r))
      if (connected_components(g).size() == 1) out.push_back(g);
    return out;
  }
};

}  // namespace

bool is_sbase(const Graph& g, int s) { return is_strongly_non_bipartite(g) && mu_star(g) == s; }

bool is_minimal_sbase(const Graph& g, int s) {
  if (!is_sbase(g, s)) return false;
  const auto edges = g.edges();
  if (edges.size() > 24) throw ResourceError("is_minimal_sbase(): more than 24 edges");
  const Mask all = full_mask(static_cast<int>(edges.size()));
  // Every component needs at least as many edges as vertices.
  for (Mask keep = 0; keep < all; ++keep) {
    if (std::popcount(keep) < g.n()) continue;
    EdgeList sub;
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (keep >> k & 1) sub.emplace_back(edges[k].u, edges[k].v);
    const Graph h(g.n(), sub);
    if (is_strongly_non_bipartite(h) && mu_star(h) == s) return false;
  }
  return true;
}

std::vector<SBase> enumerate_minimal_sbases(int s, std::optional<int> n_max) {
  if (s < 1) throw PreconditionError("enumerate_minimal_sbases(): s must be at least 1");
  Catalog catalog{{}, n_max.value_or(3 * s)};
  std::vector<SBase> out;
  for (const Graph& g : catalog.get(s)) out.push_back(SBase{g, s, true});
  return out;
}

}  // namespace edgepow

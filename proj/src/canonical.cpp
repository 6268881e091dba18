#include "edgepow/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <mutex>
#include <set>

#include "edgepow/error.hpp"

namespace edgepow {

namespace {

using Cells = std::vector<std::vector<int>>;  // 0-based vertices

// Splits cells by neighbor counts into every current cell until stable.
// Sub-cells are ordered by signature, so the result does not depend on the
// input labeling.
void refine(const std::vector<Mask>& adj, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Mask> cell_mask(cells.size(), 0);
    for (std::size_t j = 0; j < cells.size(); ++j)
      for (int v : cells[j]) cell_mask[j] |= Mask{1} << v;
    Cells next;
    next.reserve(cells.size());
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> sig;
      sig.reserve(cell.size());
      for (int v : cell) {
        std::vector<int> counts(cells.size());
        for (std::size_t j = 0; j < cells.size(); ++j)
          counts[j] = std::popcount(adj[v] & cell_mask[j]);
        sig.emplace_back(std::move(counts), v);
      }
      std::sort(sig.begin(), sig.end());
      std::size_t start = next.size();
      for (std::size_t i = 0; i < sig.size(); ++i) {
        if (i == 0 || sig[i].first != sig[i - 1].first) next.emplace_back();
        next.back().push_back(sig[i].second);
      }
      if (next.size() - start > 1) changed = true;
    }
    cells = std::move(next);
  }
}

struct Search {
  const std::vector<Mask>& adj;
  std::vector<Mask> best_rows;
  std::vector<int> best_position;
  bool have_best = false;

  void leaf(const Cells& cells) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> position(n);
    for (int p = 0; p < n; ++p) position[cells[p][0]] = p;
    std::vector<Mask> rows(n, 0);
    for (int v = 0; v < n; ++v)
      for (Mask m = adj[v]; m != 0; m &= m - 1)
        rows[position[v]] |= Mask{1} << position[std::countr_zero(m)];
    if (!have_best || rows < best_rows) {
      best_rows = std::move(rows);
      best_position = std::move(position);
      have_best = true;
    }
  }

  void run(Cells cells) {
    refine(adj, cells);
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t k = static_cast<std::size_t>(target - cells.begin());
    const std::vector<int> members = cells[k];
    for (int v : members) {
      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<long>(k));
      child.push_back({v});
      std::vector<int> rest;
      for (int w : members)
        if (w != v) rest.push_back(w);
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + static_cast<long>(k) + 1, cells.end());
      run(std::move(child));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.n();
  CanonicalForm out;
  if (n == 0) return out;
  Search search{g.adjacency(), {}, {}, false};
  Cells initial(1);
  for (int v = 0; v < n; ++v) initial[0].push_back(v);
  search.run(std::move(initial));
  out.graph = Graph::from_adjacency(search.best_rows);
  out.position.resize(n);
  for (int v = 0; v < n; ++v) out.position[v] = search.best_position[v] + 1;
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a).graph == canonical_form(b).graph;
}

std::string canonical_hash(const Graph& g) {
  const Graph c = canonical_form(g).graph;
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&h](int x) {
    for (int i = 0; i < 4; ++i) {
      h ^= static_cast<std::uint64_t>((x >> (8 * i)) & 0xff);
      h *= 1099511628211ULL;
    }
  };
  feed(c.n());
  for (auto e : c.edges()) {
    feed(e.u);
    feed(e.v);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<Graph> all_graphs(int n) {
  if (n < 0 || n > 8) throw ResourceError("all_graphs(): n must be in 0..8");
  if (n == 0) return {Graph()};
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  // Deleting vertex n from any graph leaves a graph on n - 1 vertices, so
  // extending each smaller class by every neighborhood of a new vertex
  // reaches every class.
  std::set<std::pair<int, std::vector<Mask>>> seen;
  for (const Graph& smaller : all_graphs(n - 1)) {
    for (Mask nb = 0; nb < (Mask{1} << (n - 1)); ++nb) {
      std::vector<Mask> adj = smaller.adjacency();
      adj.push_back(nb);
      for (int v = 0; v < n - 1; ++v)
        if (nb >> v & 1) adj[v] |= bit_of(n);
      Graph c = canonical_form(Graph::from_adjacency(std::move(adj))).graph;
      seen.emplace(c.edge_count(), c.adjacency());
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (const auto& [m, adj] : seen) out.push_back(Graph::from_adjacency(adj));
  std::lock_guard lock(mu);
  memo.emplace(n, out);
  return out;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (auto& g : all_graphs(n))
    if (n > 0 && connected_components(g).size() == 1) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> graphs_without_isolated_vertices(int n) {
  std::vector<Graph> out;
  for (auto& g : all_graphs(n))
    if (n > 0 && !has_isolated_vertex(g)) out.push_back(std::move(g));
  return out;
}

Graph random_connected_graph(int n, std::mt19937_64& rng) {
  if (n < 1 || n > kMaxVertices) throw PreconditionError("random_connected_graph(): bad n");
  for (;;) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng() >> 63) edges.emplace_back(u, v);
    Graph g(n, edges);
    if (connected_components(g).size() == 1) return g;
  }
}

Graph cycle_graph(int length) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= length; ++i) edges.emplace_back(i, i % length + 1);
  return Graph(length, edges);
}

Graph path_graph(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < vertices; ++i) edges.emplace_back(i, i + 1);
  return Graph(vertices, edges);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> edges;
  for (auto e : a.edges()) edges.emplace_back(e.u, e.v);
  for (auto e : b.edges()) edges.emplace_back(e.u + a.n(), e.v + a.n());
  return Graph(a.n() + b.n(), edges);
}

}  // namespace edgepow

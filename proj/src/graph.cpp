#include "edgepow/graph.hpp"

#include <algorithm>
#include <sstream>

#include "edgepow/error.hpp"

namespace edgepow {

VertexSet::VertexSet(std::initializer_list<int> labels) {
  for (int v : labels) insert(v);
}

VertexSet VertexSet::from_labels(const std::vector<int>& labels) {
  VertexSet s;
  for (int v : labels) s.insert(v);
  return s;
}

void VertexSet::insert(int label) {
  if (label < 1 || label > kMaxVertices)
    throw InputError("vertex label " + std::to_string(label) + " out of range 1.." +
                     std::to_string(kMaxVertices));
  bits_ |= bit_of(label);
}

void VertexSet::erase(int label) {
  if (label >= 1 && label <= kMaxVertices) bits_ &= ~bit_of(label);
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
  // Lexicographic on sorted members: walk both masks from the lowest bit.
  Mask x = a.bits_, y = b.bits_;
  while (x != 0 && y != 0) {
    int lx = std::countr_zero(x), ly = std::countr_zero(y);
    if (lx != ly) return lx < ly ? std::strong_ordering::less : std::strong_ordering::greater;
    x &= x - 1;
    y &= y - 1;
  }
  if (x == 0 && y == 0) return std::strong_ordering::equal;
  return x == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string to_string(VertexSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : s.members()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0 || n > kMaxVertices)
    throw InputError("vertex count " + std::to_string(n) + " out of range 0.." +
                     std::to_string(kMaxVertices));
  adj_.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has an endpoint outside 1.." + std::to_string(n));
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    if (adjacent(u, v))
      throw InputError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    adj_[u - 1] |= bit_of(v);
    adj_[v - 1] |= bit_of(u);
  }
}

Graph Graph::from_adjacency(std::vector<Mask> adjacency) {
  Graph g;
  g.adj_ = std::move(adjacency);
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (Mask m : adj_) twice += std::popcount(m);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 1; u <= n(); ++u)
    for (Mask m = adj_[u - 1] & ~full_mask(u); m != 0; m &= m - 1)
      out.push_back({u, std::countr_zero(m) + 1});
  return out;
}

Graph Graph::with_edge_removed(int u, int v) const {
  Graph g = *this;
  g.adj_[u - 1] &= ~bit_of(v);
  g.adj_[v - 1] &= ~bit_of(u);
  return g;
}

VertexSet InducedSubgraph::lift(VertexSet local) const {
  VertexSet out;
  for (int k : local.members()) out.insert(labels[k - 1]);
  return out;
}

VertexSet InducedSubgraph::restrict(VertexSet original) const {
  VertexSet out;
  for (int k = 1; k <= static_cast<int>(labels.size()); ++k)
    if (original.contains(labels[k - 1])) out.insert(k);
  return out;
}

void require_subset(const Graph& g, VertexSet u, const char* what) {
  if (!u.is_subset_of(g.vertices()))
    throw PreconditionError(std::string(what) + " " + to_string(u) +
                            " is not a subset of the vertex set 1.." + std::to_string(g.n()));
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet u) {
  require_subset(g, u, "vertex set");
  InducedSubgraph sub;
  sub.labels = u.members();
  const int k = static_cast<int>(sub.labels.size());
  std::vector<Mask> adj(k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (g.adjacent(sub.labels[a], sub.labels[b])) adj[a] |= Mask{1} << b;
  sub.graph = Graph::from_adjacency(std::move(adj));
  return sub;
}

namespace {

Mask closed_nbhd_mask(const Graph& g, Mask u) {
  Mask out = u;
  for (Mask m = u; m != 0; m &= m - 1) out |= g.neighbor_mask(std::countr_zero(m) + 1);
  return out;
}

bool covers_mask(const Graph& g, Mask f) {
  // Every vertex outside f must have all neighbors inside f.
  const Mask outside = full_mask(g.n()) & ~f;
  for (Mask m = outside; m != 0; m &= m - 1)
    if ((g.neighbor_mask(std::countr_zero(m) + 1) & outside) != 0) return false;
  return true;
}

}  // namespace

VertexSet closed_neighborhood(const Graph& g, VertexSet u) {
  require_subset(g, u, "vertex set");
  return VertexSet(closed_nbhd_mask(g, u.bits()));
}

bool is_dominating(const Graph& g, VertexSet u) {
  return closed_neighborhood(g, u) == g.vertices();
}

bool is_cover(const Graph& g, VertexSet f) {
  require_subset(g, f, "cover");
  return covers_mask(g, f.bits());
}

bool is_minimal_cover(const Graph& g, VertexSet f) {
  if (!is_cover(g, f)) return false;
  // A vertex is removable iff all of its neighbors are in f.
  for (Mask m = f.bits(); m != 0; m &= m - 1) {
    int v = std::countr_zero(m) + 1;
    if ((g.neighbor_mask(v) & ~f.bits()) == 0) return false;
  }
  return true;
}

namespace {

// Branch on the lowest uncovered edge {u,v}: either u joins the cover, or u
// is excluded, which forces every neighbor of u in.
void cover_branch(const Graph& g, Mask in, Mask out, std::vector<Mask>& found) {
  const int n = g.n();
  for (int u = 1; u <= n; ++u) {
    if (in & bit_of(u)) continue;
    Mask open = g.neighbor_mask(u) & ~in;
    if (open == 0) continue;
    // Edge {u, w} uncovered for some w.
    if (!(out & bit_of(u))) {
      cover_branch(g, in | bit_of(u), out, found);
    }
    Mask forced = g.neighbor_mask(u);
    if ((forced & out) == 0) cover_branch(g, in | forced, out | bit_of(u), found);
    return;
  }
  found.push_back(in);
}

}  // namespace

std::vector<VertexSet> minimal_covers(const Graph& g) {
  std::vector<Mask> found;
  cover_branch(g, 0, 0, found);
  std::vector<VertexSet> out;
  for (Mask f : found)
    if (is_minimal_cover(g, VertexSet(f))) out.emplace_back(f);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet core(const Graph& g, VertexSet f) {
  if (!is_cover(g, f)) throw PreconditionError("core(): " + to_string(f) + " is not a cover");
  const Mask outside = full_mask(g.n()) & ~f.bits();
  return VertexSet(f.bits() & ~closed_nbhd_mask(g, outside));
}

std::vector<VertexSet> connected_components(const Graph& g, VertexSet u) {
  require_subset(g, u, "vertex set");
  std::vector<VertexSet> out;
  Mask left = u.bits();
  while (left != 0) {
    Mask comp = left & (~left + 1);
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask m = frontier; m != 0; m &= m - 1) next |= g.neighbor_mask(std::countr_zero(m) + 1);
      next &= u.bits() & ~comp;
      comp |= next;
      frontier = next;
    }
    out.emplace_back(comp);
    left &= ~comp;
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.vertices());
}

namespace {

// 2-colors the component containing `start` inside `within`; returns false
// on an odd cycle.
bool two_color(const Graph& g, Mask within, int start, Mask& seen) {
  Mask side[2] = {bit_of(start), 0};
  Mask frontier = bit_of(start);
  int c = 0;
  seen |= frontier;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask m = frontier; m != 0; m &= m - 1) next |= g.neighbor_mask(std::countr_zero(m) + 1);
    next &= within;
    if (next & side[c]) return false;
    next &= ~seen;
    c ^= 1;
    side[c] |= next;
    seen |= next;
    frontier = next;
  }
  // Edges inside a color class that were reached later than BFS layering.
  for (int s = 0; s < 2; ++s)
    for (Mask m = side[s]; m != 0; m &= m - 1)
      if (g.neighbor_mask(std::countr_zero(m) + 1) & side[s]) return false;
  return true;
}

}  // namespace

bool is_bipartite(const Graph& g) {
  Mask seen = 0;
  const Mask all = full_mask(g.n());
  for (int v = 1; v <= g.n(); ++v)
    if (!(seen & bit_of(v)) && !two_color(g, all, v, seen)) return false;
  return true;
}

bool is_strongly_non_bipartite(const Graph& g, VertexSet u) {
  require_subset(g, u, "vertex set");
  if (u.empty()) return false;
  for (VertexSet comp : connected_components(g, u)) {
    Mask seen = 0;
    if (two_color(g, comp.bits(), std::countr_zero(comp.bits()) + 1, seen)) return false;
  }
  return true;
}

bool is_strongly_non_bipartite(const Graph& g) {
  return is_strongly_non_bipartite(g, g.vertices());
}

bool has_isolated_vertex(const Graph& g) {
  for (int v = 1; v <= g.n(); ++v)
    if (g.neighbor_mask(v) == 0) return true;
  return false;
}

std::optional<int> shortest_odd_cycle(const Graph& g) {
  // BFS in the bipartite double cover: the shortest (v,0) -> (v,1) path is
  // the shortest odd closed walk through v, and the shortest odd closed walk
  // overall is an odd cycle.
  const int n = g.n();
  std::optional<int> best;
  std::vector<int> dist(2 * n);
  std::vector<int> queue;
  for (int s = 1; s <= n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.assign(1, 2 * (s - 1));
    dist[2 * (s - 1)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int node = queue[head];
      int v = node / 2 + 1, parity = node % 2;
      for (Mask m = g.neighbor_mask(v); m != 0; m &= m - 1) {
        int w = std::countr_zero(m);
        int next = 2 * w + (parity ^ 1);
        if (dist[next] < 0) {
          dist[next] = dist[node] + 1;
          queue.push_back(next);
        }
      }
    }
    int odd = dist[2 * (s - 1) + 1];
    if (odd > 0 && (!best || odd < *best)) best = odd;
  }
  return best;
}

}  // namespace edgepow

#include "edgepow/matching.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>

#include "edgepow/error.hpp"

namespace edgepow {

WeightVector::WeightVector(std::vector<int> weights) : w_(std::move(weights)) {
  for (int x : w_)
    if (x < 0) throw InputError("weights must be non-negative");
}

int WeightVector::total() const { return std::accumulate(w_.begin(), w_.end(), 0); }

VertexSet WeightVector::support() const {
  Mask m = 0;
  for (int i = 0; i < size(); ++i)
    if (w_[i] != 0) m |= Mask{1} << i;
  return VertexSet(m);
}

WeightVector WeightVector::plus_unit(int label) const {
  WeightVector out = *this;
  ++out.w_[label - 1];
  return out;
}

WeightVector WeightVector::minus_unit(int label) const {
  if (w_[label - 1] == 0) throw PreconditionError("cannot lower a zero weight");
  WeightVector out = *this;
  --out.w_[label - 1];
  return out;
}

WeightedGraph::WeightedGraph(Graph base, WeightVector weights)
    : base_(std::move(base)), weights_(std::move(weights)) {
  if (weights_.size() != base_.n())
    throw InputError("weight vector has length " + std::to_string(weights_.size()) +
                     " but the graph has " + std::to_string(base_.n()) + " vertices");
}

bool WeightedGraph::has_isolated_vertex() const {
  const Mask s = support().bits();
  for (Mask m = s; m != 0; m &= m - 1)
    if ((base_.neighbor_mask(std::countr_zero(m) + 1) & s) == 0) return true;
  return false;
}

bool WeightedGraph::is_connected() const {
  return !support().empty() && connected_components(base_, support()).size() == 1;
}

namespace {

// Builds the adjacency of p(Γ_a) directly. Copies of vertex i occupy
// [offset[i], offset[i] + a_i).
std::vector<Mask> polarized_adjacency(const Graph& g, const std::vector<int>& w,
                                      std::array<int, kMaxVertices + 1>& offset) {
  const int n = g.n();
  int total = 0;
  for (int i = 0; i < n; ++i) {
    offset[i] = total;
    total += w[i];
  }
  offset[n] = total;
  if (total > kMaxTotalWeight)
    throw ResourceError("total weight " + std::to_string(total) + " exceeds the polarization limit " +
                        std::to_string(kMaxTotalWeight));
  std::vector<Mask> copies(n, 0);
  for (int i = 0; i < n; ++i)
    if (w[i] > 0) copies[i] = (w[i] >= 64 ? ~Mask{0} : ((Mask{1} << w[i]) - 1)) << offset[i];
  std::vector<Mask> adj(total, 0);
  for (int i = 0; i < n; ++i) {
    if (w[i] == 0) continue;
    Mask row = 0;
    for (Mask m = g.neighbor_mask(i + 1); m != 0; m &= m - 1) row |= copies[std::countr_zero(m)];
    for (int r = 0; r < w[i]; ++r) adj[offset[i] + r] = row;
  }
  return adj;
}

// Edmonds' blossom algorithm on at most 64 vertices.
class Blossom {
 public:
  explicit Blossom(const std::vector<Mask>& adj) : adj_(adj), n_(static_cast<int>(adj.size())) {
    match_.fill(-1);
  }

  int run() {
    int size = 0;
    // Greedy start.
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (Mask m = adj_[v]; m != 0; m &= m - 1) {
        int w = std::countr_zero(m);
        if (match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          ++size;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int end = find_path(v);
      if (end == -1) continue;
      ++size;
      while (end != -1) {
        int pv = parent_[end], ppv = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = ppv;
      }
    }
    return size;
  }

  int mate(int v) const { return match_[v]; }

 private:
  int lca(int a, int b) {
    std::array<bool, kMaxVertices> seen{};
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    used_.fill(false);
    parent_.fill(-1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    int head = 0, tail = 0;
    queue_[tail++] = root;
    while (head < tail) {
      int v = queue_[head++];
      for (Mask m = adj_[v]; m != 0; m &= m - 1) {
        int to = std::countr_zero(m);
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          int cur = lca(v, to);
          in_blossom_.fill(false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                queue_[tail++] = i;
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          queue_[tail++] = match_[to];
        }
      }
    }
    return -1;
  }

  const std::vector<Mask>& adj_;
  int n_;
  std::array<int, kMaxVertices> match_{};
  std::array<int, kMaxVertices> parent_{};
  std::array<int, kMaxVertices> base_{};
  std::array<bool, kMaxVertices> used_{};
  std::array<bool, kMaxVertices> in_blossom_{};
  std::array<int, kMaxVertices> queue_{};
};

}  // namespace

Polarization polarize(const WeightedGraph& wg) {
  std::array<int, kMaxVertices + 1> offset{};
  Polarization p;
  p.graph = Graph::from_adjacency(polarized_adjacency(wg.base(), wg.weights().values(), offset));
  p.projection.reserve(wg.weights().total());
  for (int i = 1; i <= wg.base().n(); ++i)
    for (int r = 0; r < wg.weights()[i]; ++r) p.projection.push_back(i);
  return p;
}

std::vector<Edge> maximum_matching(const Graph& g) {
  Blossom b(g.adjacency());
  b.run();
  std::vector<Edge> out;
  for (int v = 0; v < g.n(); ++v)
    if (b.mate(v) > v) out.push_back({v + 1, b.mate(v) + 1});
  return out;
}

int matching_number(const Graph& g, const std::vector<int>& weights) {
  std::array<int, kMaxVertices + 1> offset{};
  const auto adj = polarized_adjacency(g, weights, offset);
  Blossom b(adj);
  return b.run();
}

Matching maximum_matching(const WeightedGraph& wg) {
  const Polarization p = polarize(wg);
  Matching m;
  m.usage.assign(wg.base().n(), 0);
  for (auto e : maximum_matching(p.graph)) {
    int u = p.projection[e.u - 1], v = p.projection[e.v - 1];
    if (u > v) std::swap(u, v);
    m.edges.push_back({u, v});
    ++m.usage[u - 1];
    ++m.usage[v - 1];
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

int matching_number(const WeightedGraph& wg) {
  return matching_number(wg.base(), wg.weights().values());
}

bool monomial_in_power(const WeightedGraph& wg, int t) {
  if (t < 1) throw PreconditionError("monomial_in_power(): t must be >= 1");
  return matching_number(wg) >= t;
}

bool has_perfect_matching(const WeightedGraph& wg) {
  const int total = wg.weights().total();
  return total % 2 == 0 && 2 * matching_number(wg) == total;
}

bool is_matching_critical(const WeightedGraph& wg) {
  const int nu = matching_number(wg);
  std::vector<int> w = wg.weights().values();
  for (int i = 0; i < wg.base().n(); ++i) {
    if (w[i] == 0) continue;
    --w[i];
    const int lowered = matching_number(wg.base(), w);
    ++w[i];
    if (lowered != nu) return false;
  }
  return true;
}

bool is_factor_critical(const WeightedGraph& wg) {
  const int total = wg.weights().total();
  if (total % 2 == 0) return total == 0;  // a single deletion must leave an even total
  std::vector<int> w = wg.weights().values();
  for (int i = 0; i < wg.base().n(); ++i) {
    if (w[i] == 0) continue;
    --w[i];
    const int nu = matching_number(wg.base(), w);
    ++w[i];
    if (2 * nu != total - 1) return false;
  }
  return true;
}

WeightedGraph augment_weights(const WeightedGraph& wg, int i, int j) {
  const int n = wg.base().n();
  if (i < 1 || i > n || j < 1 || j > n || i == j || !wg.base().adjacent(i, j) ||
      wg.weights()[i] == 0 || wg.weights()[j] == 0)
    throw PreconditionError("augment_weights(): {" + std::to_string(i) + "," + std::to_string(j) +
                            "} is not an edge inside the support");
  WeightedGraph out = wg.with_weights(wg.weights().plus_unit(i).plus_unit(j));
#ifndef NDEBUG
  if (is_matching_critical(wg)) {
    assert(is_matching_critical(out));
    assert(matching_number(out) == matching_number(wg) + 1);
  }
#endif
  return out;
}

}  // namespace edgepow

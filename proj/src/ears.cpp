#include "edgepow/ears.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "edgepow/error.hpp"

namespace edgepow {

namespace {

constexpr std::int8_t kUnreached = std::numeric_limits<std::int8_t>::max();
constexpr std::uint32_t kFirstEar = std::numeric_limits<std::uint32_t>::max();

// Subset dynamic program on one connected graph with 0-based vertices.
//
// f[S] is the fewest even ears over initially odd decompositions of the
// all-ones weighting of H[S] with S connected. A state is seeded by the
// vertex set of an odd cycle and grows by ears whose inner vertices T are
// new: |T| = 1 needs one neighbor in S, otherwise H[T] needs a Hamiltonian
// path whose two ends both see S. The ear is even exactly when |T| is odd.
class EarSearch {
 public:
  EarSearch(const std::vector<Mask>& adj, bool odd_only, bool keep_witness)
      : adj_(adj), k_(static_cast<int>(adj.size())), odd_only_(odd_only), keep_(keep_witness) {
    if (k_ > kMaxEarSearchVertices)
      throw ResourceError("ear search on " + std::to_string(k_) + " vertices exceeds the limit of " +
                          std::to_string(kMaxEarSearchVertices));
    full_ = static_cast<std::uint32_t>(full_mask(k_));
  }

  // φ* of the whole graph, or -1 when unreachable (bipartite, or no all-odd
  // decomposition in odd-only mode).
  int run() {
    const std::size_t states = std::size_t{1} << k_;
    f_.assign(states, kUnreached);
    if (keep_) pred_.assign(states, kFirstEar);
    seed_cycles();
    ext_.resize(states);
    lift_.resize(states);
    for (std::uint32_t s = 1; s < full_; ++s) {
      if (f_[s] == kUnreached || f_[s] >= f_[full_]) continue;
      extend(s);
      if (f_[full_] == 0) break;
    }
    return f_[full_] == kUnreached ? -1 : f_[full_];
  }

  // Walks of an optimal decomposition, 0-based; requires run() >= 0.
  std::vector<std::vector<int>> witness() const {
    std::vector<std::vector<int>> ears;
    std::uint32_t s = full_;
    while (pred_[s] != kFirstEar) {
      ears.push_back(attach_walk(pred_[s], s & ~pred_[s]));
      s = pred_[s];
    }
    ears.push_back(cycle_walk(s));
    std::reverse(ears.begin(), ears.end());
    return ears;
  }

 private:
  Mask adj(int v) const { return adj_[v]; }

  // Marks every vertex set of an odd cycle. ends[S] holds the possible ends
  // of Hamiltonian paths of H[S] that start at the lowest vertex of S.
  void seed_cycles() {
    std::vector<std::uint32_t> ends(f_.size(), 0);
    for (int v = 0; v < k_; ++v) ends[std::size_t{1} << v] = 1u << v;
    for (std::uint32_t s = 1; s <= full_; ++s) {
      const std::uint32_t e = ends[s];
      if (e == 0) continue;
      const int low = std::countr_zero(s);
      const int size = std::popcount(s);
      if (size >= 3 && size % 2 == 1 && (e & adj(low)) != 0) f_[s] = 0;
      const std::uint32_t above = full_ & ~((2u << low) - 1);
      for (std::uint32_t m = e; m != 0; m &= m - 1) {
        const int end = std::countr_zero(m);
        for (std::uint32_t x = static_cast<std::uint32_t>(adj(end)) & above & ~s; x != 0; x &= x - 1)
          ends[s | (x & -x)] |= x & -x;
      }
    }
  }

  void extend(std::uint32_t s) {
    const std::uint32_t rest = full_ & ~s;
    int labels[kMaxEarSearchVertices];
    int index[kMaxEarSearchVertices];
    int m = 0;
    for (std::uint32_t r = rest; r != 0; r &= r - 1) {
      index[std::countr_zero(r)] = m;
      labels[m++] = std::countr_zero(r);
    }
    std::uint32_t local_adj[kMaxEarSearchVertices];
    std::uint32_t attach = 0;
    for (int j = 0; j < m; ++j) {
      const Mask a = adj(labels[j]);
      std::uint32_t row = 0;
      for (Mask x = a & rest; x != 0; x &= x - 1) row |= 1u << index[std::countr_zero(x)];
      local_adj[j] = row;
      if ((a & s) != 0) attach |= 1u << j;
    }
    const std::uint32_t top = 1u << m;
    std::fill(ext_.begin(), ext_.begin() + top, 0u);
    lift_[0] = 0;
    for (std::uint32_t a = attach; a != 0; a &= a - 1) ext_[a & -a] = a & -a;
    const int base = f_[s];
    for (std::uint32_t t = 1; t < top; ++t) {
      lift_[t] = lift_[t & (t - 1)] | (1u << labels[std::countr_zero(t)]);
      const std::uint32_t e = ext_[t];
      if (e == 0) continue;
      if ((e & attach) != 0) {
        const int cost = std::popcount(t) % 2;
        if (!(odd_only_ && cost == 1)) {
          const std::uint32_t target = s | lift_[t];
          if (base + cost < f_[target]) {
            f_[target] = static_cast<std::int8_t>(base + cost);
            if (keep_) pred_[target] = s;
          }
        }
      }
      for (std::uint32_t em = e; em != 0; em &= em - 1)
        for (std::uint32_t x = local_adj[std::countr_zero(em)] & ~t; x != 0; x &= x - 1)
          ext_[t | (x & -x)] |= x & -x;
    }
  }

  // Lexicographically least Hamiltonian cycle of H[s] from its lowest vertex.
  std::vector<int> cycle_walk(std::uint32_t s) const {
    std::vector<int> walk{std::countr_zero(s)};
    const bool ok = hamiltonian(walk, s & ~(1u << walk[0]), [&](int last) {
      return (adj(last) & (Mask{1} << walk[0])) != 0;
    });
    (void)ok;
    walk.push_back(walk[0]);
    return walk;
  }

  // Lexicographically least ear u, t_1, ..., t_k, v with {t_i} = t.
  std::vector<int> attach_walk(std::uint32_t s, std::uint32_t t) const {
    for (std::uint32_t us = s; us != 0; us &= us - 1) {
      const int u = std::countr_zero(us);
      for (std::uint32_t f = static_cast<std::uint32_t>(adj(u)) & t; f != 0; f &= f - 1) {
        std::vector<int> walk{u, std::countr_zero(f)};
        if (hamiltonian(walk, t & ~(1u << walk[1]),
                        [&](int last) { return (adj(last) & s) != 0; })) {
          walk.push_back(std::countr_zero(static_cast<std::uint32_t>(adj(walk.back())) & s));
          return walk;
        }
      }
    }
    throw std::logic_error("ear reconstruction failed");
  }

  template <class Close>
  bool hamiltonian(std::vector<int>& walk, std::uint32_t left, const Close& close) const {
    if (left == 0) return close(walk.back());
    for (std::uint32_t x = static_cast<std::uint32_t>(adj(walk.back())) & left; x != 0; x &= x - 1) {
      walk.push_back(std::countr_zero(x));
      if (hamiltonian(walk, left & ~(x & -x), close)) return true;
      walk.pop_back();
    }
    return false;
  }

  const std::vector<Mask>& adj_;
  int k_;
  bool odd_only_;
  bool keep_;
  std::uint32_t full_ = 0;
  std::vector<std::int8_t> f_;
  std::vector<std::uint32_t> pred_;
  std::vector<std::uint32_t> ext_;
  std::vector<std::uint32_t> lift_;
};

std::vector<Ear> to_ears(const std::vector<std::vector<int>>& local, const std::vector<int>& labels) {
  std::vector<Ear> out;
  for (const auto& w : local) {
    Ear e;
    for (int v : w) e.walk.push_back(labels[v]);
    out.push_back(std::move(e));
  }
  return out;
}

Mask ear_vertices(const std::vector<Ear>& ears) {
  Mask m = 0;
  for (const auto& e : ears)
    for (int v : e.walk) m |= bit_of(v);
  return m;
}

// Positions of `e` that count towards the weights.
std::pair<int, int> counted_range(const Ear& e, bool first) {
  return first ? std::pair{0, e.length()} : std::pair{1, e.length()};
}

void require_strongly_non_bipartite(const Graph& g, const char* what) {
  if (!is_strongly_non_bipartite(g))
    throw PreconditionError(std::string(what) + ": graph is not strongly non-bipartite");
}

}  // namespace

int EarDecomposition::even_ear_count() const {
  int count = 0;
  for (const auto& comp : components)
    for (const auto& e : comp)
      if (!e.is_odd()) ++count;
  return count;
}

bool EarDecomposition::is_initially_odd() const {
  return std::all_of(components.begin(), components.end(),
                     [](const auto& c) { return !c.empty() && c.front().is_odd(); });
}

bool EarDecomposition::all_ears_odd() const { return even_ear_count() == 0; }

WeightVector appearance_counts(const EarDecomposition& e, int n) {
  std::vector<int> counts(n, 0);
  for (const auto& comp : e.components)
    for (std::size_t k = 0; k < comp.size(); ++k) {
      auto [lo, hi] = counted_range(comp[k], k == 0);
      for (int p = lo; p < hi; ++p) {
        const int v = comp[k].walk[p];
        if (v >= 1 && v <= n) ++counts[v - 1];
      }
    }
  return WeightVector(std::move(counts));
}

std::optional<std::string> check_decomposition(const Graph& g, const EarDecomposition& e) {
  const int n = g.n();
  if (e.weights.size() != n) return "weight vector length differs from the vertex count";
  const auto expected = connected_components(g, e.weights.support());
  Mask used = 0;
  for (std::size_t c = 0; c < e.components.size(); ++c) {
    const auto& comp = e.components[c];
    const std::string where = "component " + std::to_string(c + 1);
    if (comp.empty()) return where + " has no ears";
    Mask seen = 0;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      const Ear& ear = comp[k];
      const std::string at = where + ", ear " + std::to_string(k + 1);
      if (ear.length() < 1) return at + " has no edges";
      for (int v : ear.walk)
        if (v < 1 || v > n) return at + " uses vertex " + std::to_string(v) + " out of range";
      for (int p = 0; p < ear.length(); ++p)
        if (!g.adjacent(ear.walk[p], ear.walk[p + 1]))
          return at + " steps along a non-edge " + std::to_string(ear.walk[p]) + "-" +
                 std::to_string(ear.walk[p + 1]);
      if (k == 0) {
        if (!ear.is_closed()) return at + " is not closed";
        for (int v : ear.walk) seen |= bit_of(v);
      } else {
        if ((seen & bit_of(ear.walk.front())) == 0 || (seen & bit_of(ear.walk.back())) == 0)
          return at + " has an endpoint outside the earlier ears";
        for (int v : ear.walk) seen |= bit_of(v);
      }
    }
    if ((seen & used) != 0) return where + " shares vertices with an earlier component";
    used |= seen;
    if (std::find(expected.begin(), expected.end(), VertexSet(seen)) == expected.end())
      return where + " does not span a component of the support";
  }
  if (appearance_counts(e, n) != e.weights) return "appearance counts differ from the weights";
  return std::nullopt;
}

MuStarResult phi_star(const Graph& g) {
  require_strongly_non_bipartite(g, "phi_star()");
  MuStarResult out;
  EarDecomposition dec;
  dec.weights = WeightVector::ones(g.n());
  std::vector<int> a(g.n(), 1);
  for (VertexSet comp : connected_components(g)) {
    const InducedSubgraph h = induced_subgraph(g, comp);
    EarSearch search(h.graph.adjacency(), false, true);
    const int phi = search.run();
    std::vector<Ear> ears = to_ears(search.witness(), h.labels);
    // An even ear starting at i gains the step h -> i, with h a walk
    // neighbor of i on an earlier ear; i then counts once more.
    for (std::size_t k = 1; k < ears.size(); ++k)
      if (!ears[k].is_odd()) ++a[ears[k].walk.front() - 1];
    out.phi_star += phi;
    out.mu_star += (phi + comp.size() - 1) / 2;
    dec.components.push_back(std::move(ears));
  }
  out.witness_decomposition = std::move(dec);
  out.witness_weights = WeightVector(std::move(a));
  return out;
}

int mu_star(const Graph& g) { return phi_star(g).mu_star; }

MuStarResult mu_star_via_weights(const Graph& g, int t_max) {
  require_strongly_non_bipartite(g, "mu_star_via_weights()");
  MuStarResult out;
  std::vector<int> witness(g.n(), 0);
  int components = 0;
  for (VertexSet comp : connected_components(g)) {
    ++components;
    const InducedSubgraph h = induced_subgraph(g, comp);
    const int nk = h.graph.n();
    const int upper = 2 * nk - *shortest_odd_cycle(h.graph);
    std::vector<int> a(nk, 1);
    bool found = false;
    for (int total = nk % 2 == 1 ? nk : nk + 1; total <= upper && !found; total += 2) {
      if (out.mu_star + (total - 1) / 2 > t_max)
        throw ResourceError("mu_star exceeds t_max = " + std::to_string(t_max));
      if (total > kMaxTotalWeight) throw ResourceError("weight search exceeds the polarization limit");
      // Lexicographic enumeration of a >= 1 with |a| = total.
      std::fill(a.begin(), a.end(), 1);
      a[nk - 1] = total - (nk - 1);
      for (;;) {
        if (is_factor_critical(WeightedGraph(h.graph, WeightVector(a)))) {
          found = true;
          out.mu_star += (total - 1) / 2;
          for (int v = 1; v <= nk; ++v) witness[h.original(v) - 1] = a[v - 1];
          break;
        }
        // Next composition: grow the rightmost position p whose suffix has
        // slack, then push all remaining slack to the last position.
        int p = nk - 2;
        int tail = a[nk - 1] - 1;
        while (p >= 0 && tail == 0) {
          tail += a[p] - 1;
          --p;
        }
        if (p < 0) break;
        ++a[p];
        for (int q = p + 1; q < nk; ++q) a[q] = 1;
        int rest = total;
        for (int q = 0; q < nk - 1; ++q) rest -= a[q];
        a[nk - 1] = rest;
      }
    }
    if (!found) throw ResourceError("no factor-critical weighting found within the ear bound");
  }
  out.phi_star = 2 * out.mu_star - g.n() + components;
  out.witness_weights = WeightVector(std::move(witness));
  return out;
}

EarDecomposition reduce_decomposition(const EarDecomposition& e, int i) {
  if (i < 1 || i > e.weights.size() || e.weights[i] < 2)
    throw PreconditionError("reduce_decomposition(): vertex " + std::to_string(i) +
                            " needs weight at least 2");
  EarDecomposition out = e;
  out.weights = e.weights.minus_unit(i);
  auto comp_it = std::find_if(out.components.begin(), out.components.end(),
                              [i](const auto& c) { return (ear_vertices(c) & bit_of(i)) != 0; });
  if (comp_it == out.components.end())
    throw PreconditionError("reduce_decomposition(): vertex not on any ear");
  std::vector<Ear>& ears = *comp_it;

  auto counted_positions = [&](std::size_t k) {
    std::vector<int> pos;
    auto [lo, hi] = counted_range(ears[k], k == 0);
    for (int p = lo; p < hi; ++p)
      if (ears[k].walk[p] == i) pos.push_back(p);
    return pos;
  };
  auto slice = [](const std::vector<int>& w, int from, int to) {
    return std::vector<int>(w.begin() + from, w.begin() + to + 1);
  };

  std::size_t c = 0;
  while (counted_positions(c).empty()) ++c;

  if (counted_positions(c).size() == 1) {
    // i is inner on a later ear: split that ear at i.
    std::size_t d = c + 1;
    while (d < ears.size() && counted_positions(d).empty()) ++d;
    if (d == ears.size()) throw std::logic_error("reduce_decomposition(): weights and ears disagree");
    const auto w = ears[d].walk;
    const int p = counted_positions(d).front();
    ears[d] = Ear{slice(w, 0, p)};
    ears.insert(ears.begin() + static_cast<long>(d) + 1, Ear{slice(w, p, static_cast<int>(w.size()) - 1)});
    return out;
  }

  std::vector<int> w = ears[c].walk;
  if (c == 0) {
    // Rotate the closed walk so that it starts away from i.
    const int len = static_cast<int>(w.size()) - 1;
    int r = 0;
    while (w[r] == i) ++r;
    std::vector<int> rot;
    for (int k = 0; k < len; ++k) rot.push_back(w[(r + k) % len]);
    rot.push_back(rot.front());
    w = std::move(rot);
  }
  std::vector<int> pos;
  for (int p = 1; p + 1 < static_cast<int>(w.size()); ++p)
    if (w[p] == i) pos.push_back(p);
  const int p = pos[0], q = pos[1];
  std::vector<int> dw = slice(w, 0, p);
  dw.insert(dw.end(), w.begin() + q + 1, w.end());
  Ear d{std::move(dw)};
  Ear d2{slice(w, p, q)};

  if (c > 0 || d.is_odd()) {
    ears[c] = std::move(d);
    ears.insert(ears.begin() + static_cast<long>(c) + 1, std::move(d2));
    return out;
  }
  // The closed piece at i becomes the first ear; d is re-rooted at i.
  const int len = d.length();
  std::vector<int> rooted;
  for (int k = 0; k <= len; ++k) rooted.push_back(d.walk[(p + k) % len]);
  ears[0] = std::move(d2);
  ears.insert(ears.begin() + 1, Ear{std::move(rooted)});
  return out;
}

std::optional<EarDecomposition> odd_ear_decomposition(const WeightedGraph& wg) {
  if (!wg.is_connected() || wg.support().size() < 2)
    throw PreconditionError("odd_ear_decomposition(): Γ_{V(a)} must be connected with at least two vertices");
  const int total = wg.weights().total();
  if (total > kMaxEarSearchVertices)
    throw ResourceError("odd_ear_decomposition(): |a| = " + std::to_string(total) +
                        " exceeds the limit of " + std::to_string(kMaxEarSearchVertices));
  const Polarization pz = polarize(wg);
  EarSearch search(pz.graph.adjacency(), true, true);
  if (search.run() != 0) return std::nullopt;
  EarDecomposition out;
  out.components.push_back(to_ears(search.witness(), pz.projection));
  out.weights = wg.weights();
  return out;
}

std::optional<int> MuStarCache::mu_star(VertexSet u) {
  if (u.empty()) return std::nullopt;
  int total = 0;
  for (VertexSet comp : connected_components(g_, u)) {
    if (comp.size() < 2) return std::nullopt;
    const int phi = component_phi(comp.bits());
    if (phi < 0) return std::nullopt;
    total += (phi + comp.size() - 1) / 2;
  }
  return total;
}

int MuStarCache::component_phi(Mask component) {
  auto it = phi_.find(component);
  if (it != phi_.end()) return it->second;
  const InducedSubgraph h = induced_subgraph(g_, VertexSet(component));
  EarSearch search(h.graph.adjacency(), false, false);
  const int phi = search.run();
  phi_.emplace(component, phi);
  return phi;
}

std::optional<SInvariant> min_dominating_base(MuStarCache& cache, VertexSet within) {
  const Graph& g = cache.graph();
  const Mask w = within.bits();
  // A vertex of degree one in Γ_within is a pendant or isolated in Γ_U.
  // Dropping a pendant keeps U dominating and lowers μ* by one, so such
  // vertices never occur in a minimizer.
  Mask candidates = 0;
  for (Mask m = w; m != 0; m &= m - 1) {
    const int v = std::countr_zero(m) + 1;
    if (std::popcount(g.neighbor_mask(v) & w) >= 2) candidates |= bit_of(v);
  }
  std::optional<SInvariant> best;
  for (Mask sub = candidates; sub != 0; sub = (sub - 1) & candidates) {
    Mask reach = sub;
    for (Mask m = sub; m != 0; m &= m - 1) reach |= g.neighbor_mask(std::countr_zero(m) + 1);
    if ((w & ~reach) != 0) continue;
    const VertexSet u(sub);
    if (auto mu = cache.mu_star(u)) {
      if (!best || *mu < best->s || (*mu == best->s && u < best->witness)) best = SInvariant{*mu, u};
    }
  }
  return best;
}

SInvariant s_invariant_with_witness(const Graph& g) {
  if (has_isolated_vertex(g)) throw PreconditionError("s_invariant(): graph has an isolated vertex");
  require_strongly_non_bipartite(g, "s_invariant()");
  MuStarCache cache(g);
  return *min_dominating_base(cache, g.vertices());
}

int s_invariant(const Graph& g) { return s_invariant_with_witness(g).s; }

}  // namespace edgepow

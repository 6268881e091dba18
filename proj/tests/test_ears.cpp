#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "edgepow/canonical.hpp"
#include "edgepow/ears.hpp"
#include "edgepow/error.hpp"
#include "edgepow/graph_io.hpp"
#include "edgepow/report.hpp"
#include "fixtures.hpp"

using namespace edgepow;

namespace {

std::vector<Graph> connected_snb(int n_max) {
  std::vector<Graph> out;
  for (int n = 3; n <= n_max; ++n)
    for (auto& g : connected_graphs(n))
      if (is_strongly_non_bipartite(g)) out.push_back(g);
  return out;
}

// μ* as the least ν over factor-critical a >= 1, with ν computed by the
// exhaustive matcher. Connected graphs only.
int brute_mu_star(const Graph& g, int total_max) {
  int best = -1;
  brute::for_each_weight(g.n(), total_max, total_max, [&](const std::vector<int>& a) {
    if (std::find(a.begin(), a.end(), 0) != a.end()) return;
    int total = 0;
    for (int x : a) total += x;
    if (total % 2 == 0) return;
    std::vector<int> w = a;
    for (int i = 0; i < g.n(); ++i) {
      --w[i];
      const bool perfect = 2 * brute::matching_number(g, w) == total - 1;
      ++w[i];
      if (!perfect) return;
    }
    const int nu = (total - 1) / 2;
    if (best < 0 || nu < best) best = nu;
  });
  return best;
}

}  // namespace

TEST(Ears, OddCycleHasNoEvenEars) {
  for (int t = 1; t <= 4; ++t) {
    const auto r = phi_star(cycle_graph(2 * t + 1));
    EXPECT_EQ(r.phi_star, 0);
    EXPECT_EQ(r.mu_star, t);
  }
}

TEST(Ears, TrianglePendant) {
  const auto r = phi_star(fixtures::triangle_pendant());
  EXPECT_EQ(r.phi_star, 1);
  EXPECT_EQ(r.mu_star, 2);
  ASSERT_TRUE(r.witness_decomposition);
  const auto& ears = r.witness_decomposition->components.at(0);
  ASSERT_EQ(ears.size(), 2u);
  EXPECT_EQ(ears[0].walk, (std::vector<int>{1, 2, 3, 1}));
  EXPECT_EQ(ears[1].walk, (std::vector<int>{3, 4, 3}));
  EXPECT_EQ(*r.witness_weights, WeightVector({1, 1, 2, 1}));
}

TEST(Ears, IntroInducedGraph) {
  const Graph g = fixtures::intro_graph();
  const auto h = induced_subgraph(g, VertexSet{2, 3, 4, 5, 6});
  EXPECT_EQ(mu_star(h.graph), 2);
}

TEST(Ears, PreconditionsRejectBipartite) {
  EXPECT_THROW(phi_star(cycle_graph(4)), PreconditionError);
  EXPECT_THROW(mu_star_via_weights(path_graph(2), 5), PreconditionError);
  EXPECT_THROW(s_invariant(cycle_graph(6)), PreconditionError);
}

TEST(Ears, WeightSearchExamples) {
  auto r = mu_star_via_weights(fixtures::triangle_pendant(), 10);
  EXPECT_EQ(r.mu_star, 2);
  EXPECT_EQ(*r.witness_weights, WeightVector({1, 1, 2, 1}));
  r = mu_star_via_weights(fixtures::triangle(), 10);
  EXPECT_EQ(r.mu_star, 1);
  EXPECT_EQ(*r.witness_weights, WeightVector({1, 1, 1}));
  r = mu_star_via_weights(fixtures::two_triangles(), 10);
  EXPECT_EQ(r.mu_star, 2);
}

TEST(Ears, WeightSearchRespectsTMax) {
  EXPECT_THROW(mu_star_via_weights(cycle_graph(7), 2), ResourceError);
  EXPECT_EQ(mu_star_via_weights(cycle_graph(7), 3).mu_star, 3);
}

// Both routes to μ* agree, and the weights built from the ears are
// factor-critical with ν = μ* (all connected graphs up to 7 vertices).
TEST(Ears, MuStarRoutesAgree) {
  for (const Graph& g : connected_snb(7)) {
    const auto ears = phi_star(g);
    const auto weights = mu_star_via_weights(g, 64);
    ASSERT_EQ(ears.mu_star, weights.mu_star) << to_text(g);
    EXPECT_EQ(ears.mu_star, (ears.phi_star + g.n() - 1) / 2);
    const WeightedGraph wa(g, *ears.witness_weights);
    EXPECT_TRUE(is_factor_critical(wa)) << to_text(g);
    EXPECT_EQ(matching_number(wa), ears.mu_star);
    EXPECT_TRUE(is_factor_critical(WeightedGraph(g, *weights.witness_weights)));
    ASSERT_TRUE(ears.witness_decomposition);
    EXPECT_EQ(check_decomposition(g, *ears.witness_decomposition), std::nullopt);
    EXPECT_TRUE(ears.witness_decomposition->is_initially_odd());
    EXPECT_EQ(ears.witness_decomposition->even_ear_count(), ears.phi_star);
  }
}

TEST(Ears, WeightSearchMatchesExhaustiveMatcher) {
  for (const Graph& g : connected_snb(5)) {
    const int mu = mu_star(g);
    EXPECT_EQ(brute_mu_star(g, 2 * mu + 1), mu) << to_text(g);
  }
}

TEST(Ears, AdditiveOverComponents) {
  const auto comps = connected_snb(4);
  for (const Graph& a : comps)
    for (const Graph& b : comps) EXPECT_EQ(mu_star(disjoint_union(a, b)), mu_star(a) + mu_star(b));
}

TEST(Ears, LeafPeeling) {
  int checked = 0;
  for (int n = 4; n <= 7; ++n)
    for (const Graph& g : connected_graphs(n)) {
      if (!is_strongly_non_bipartite(g)) continue;
      VertexSet w;
      for (int v = 1; v <= n; ++v)
        if (g.degree(v) >= 2) w.insert(v);
      if (w.size() == n) continue;
      const Graph gw = induced_subgraph(g, w).graph;
      if (!is_strongly_non_bipartite(gw)) continue;
      EXPECT_EQ(mu_star(g), mu_star(gw) + n - w.size()) << to_text(g);
      ++checked;
    }
  EXPECT_GT(checked, 100);
}

TEST(Ears, CheckDecompositionCatchesErrors) {
  const Graph g = fixtures::triangle_pendant();
  EarDecomposition e;
  e.weights = WeightVector({1, 1, 2, 1});
  e.components = {{Ear{{1, 2, 3, 4, 3, 1}}}};
  EXPECT_EQ(check_decomposition(g, e), std::nullopt);
  e.components = {{Ear{{1, 2, 3, 4, 3}}}};
  EXPECT_TRUE(check_decomposition(g, e));  // not closed
  e.components = {{Ear{{1, 2, 4, 3, 1}}}};
  EXPECT_TRUE(check_decomposition(g, e));  // 2-4 is not an edge
  e.components = {{Ear{{1, 2, 3, 1}}, Ear{{3, 4, 3}}}};
  EXPECT_TRUE(check_decomposition(g, e));  // counts give a_3 = 1
  e.weights = WeightVector({1, 1, 1, 1});
  EXPECT_EQ(check_decomposition(g, e), std::nullopt);
}

TEST(Ears, ReduceClosedWalkAtRepeatedVertex) {
  EarDecomposition e;
  e.weights = WeightVector({1, 1, 2, 1});
  e.components = {{Ear{{1, 2, 3, 4, 3, 1}}}};
  const auto f = reduce_decomposition(e, 3);
  const Graph g = fixtures::triangle_pendant();
  EXPECT_EQ(check_decomposition(g, f), std::nullopt);
  EXPECT_EQ(f.weights, WeightVector({1, 1, 1, 1}));
  ASSERT_EQ(f.components[0].size(), 2u);
  EXPECT_EQ(f.components[0][0].walk, (std::vector<int>{1, 2, 3, 1}));
  EXPECT_EQ(f.components[0][1].walk, (std::vector<int>{3, 4, 3}));
  EXPECT_EQ(e.even_ear_count(), 0);
  EXPECT_EQ(f.even_ear_count(), 1);
  EXPECT_TRUE(f.is_initially_odd());
}

TEST(Ears, ReduceSplitsLaterEar) {
  // Triangle 1,2,3 and triangle 3,4,5 hung on vertex 3, then a 2-cycle
  // through 6 off 4; vertex 4 is inner once in the second ear and once in
  // the third.
  const Graph g(6, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {4, 6}});
  EarDecomposition e;
  e.weights = WeightVector({1, 1, 1, 2, 1, 1});
  e.components = {{Ear{{1, 2, 3, 1}}, Ear{{3, 4, 5, 3}}, Ear{{5, 4, 6, 4}}}};
  ASSERT_EQ(check_decomposition(g, e), std::nullopt);
  const auto f = reduce_decomposition(e, 4);
  EXPECT_EQ(check_decomposition(g, f), std::nullopt);
  ASSERT_EQ(f.components[0].size(), 4u);
  EXPECT_EQ(f.components[0][2].walk, (std::vector<int>{5, 4}));
  EXPECT_EQ(f.components[0][3].walk, (std::vector<int>{4, 6, 4}));
  EXPECT_LE(f.even_ear_count(), e.even_ear_count() + 1);
}

TEST(Ears, ReduceRequiresWeightTwo) {
  EarDecomposition e;
  e.weights = WeightVector({1, 1, 1});
  e.components = {{Ear{{1, 2, 3, 1}}}};
  EXPECT_THROW(reduce_decomposition(e, 2), PreconditionError);
}

// Reduce odd decompositions of random factor-critical weightings down to
// all ones; every step stays valid, initially odd, and adds at most one
// even ear.
TEST(Ears, ReducePropertyRandom) {
  std::mt19937_64 rng(7);
  int runs = 0;
  for (const Graph& g : connected_snb(5)) {
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<int> a(g.n(), 1);
      for (int k = 0; k < 4; ++k) ++a[rng() % g.n()];
      const WeightedGraph wg(g, WeightVector(a));
      if (!is_factor_critical(wg)) continue;
      auto e = odd_ear_decomposition(wg);
      ASSERT_TRUE(e) << to_text(g);
      ASSERT_EQ(check_decomposition(g, *e), std::nullopt);
      EarDecomposition cur = *e;
      for (;;) {
        int i = 0;
        for (int v = 1; v <= g.n(); ++v)
          if (cur.weights[v] >= 2) i = v;
        if (i == 0) break;
        const auto next = reduce_decomposition(cur, i);
        ASSERT_EQ(check_decomposition(g, next), std::nullopt) << to_json(cur).dump();
        EXPECT_LE(next.even_ear_count(), cur.even_ear_count() + 1);
        EXPECT_TRUE(next.is_initially_odd());
        cur = next;
      }
      EXPECT_GE(cur.even_ear_count(), phi_star(g).phi_star);
      ++runs;
    }
  }
  EXPECT_GT(runs, 20);
}

TEST(Ears, OddDecompositionExamples) {
  const Graph g = fixtures::triangle_pendant();
  auto e = odd_ear_decomposition(WeightedGraph(g, WeightVector({1, 1, 2, 1})));
  ASSERT_TRUE(e);
  ASSERT_EQ(e->components[0].size(), 1u);
  EXPECT_EQ(e->components[0][0].walk, (std::vector<int>{1, 2, 3, 4, 3, 1}));
  EXPECT_FALSE(odd_ear_decomposition(WeightedGraph(g, WeightVector::ones(4))));
  EXPECT_FALSE(odd_ear_decomposition(WeightedGraph(cycle_graph(4), WeightVector::ones(4))));
  EXPECT_THROW(odd_ear_decomposition(WeightedGraph(g, WeightVector({1, 0, 0, 0}))), PreconditionError);
}

// Factor-critical iff an all-odd decomposition exists, over every connected
// weighting with total at most 10 on small connected graphs.
TEST(Ears, LovaszEquivalence) {
  long checked = 0;
  for (int n = 2; n <= 4; ++n)
    for (const Graph& g : connected_graphs(n)) {
      brute::for_each_weight(n, 10, 10, [&](const std::vector<int>& a) {
        const WeightedGraph wg(g, WeightVector(a));
        if (wg.support().size() < 2 || !wg.is_connected()) return;
        const auto e = odd_ear_decomposition(wg);
        ASSERT_EQ(e.has_value(), is_factor_critical(wg)) << to_text(g);
        if (e) {
          EXPECT_EQ(check_decomposition(g, *e), std::nullopt);
          EXPECT_TRUE(e->all_ears_odd());
        }
        ++checked;
      });
    }
  EXPECT_GT(checked, 1000);
}

TEST(Ears, SInvariantExamples) {
  const Graph g = fixtures::bowtie_pendants();
  const auto s = s_invariant_with_witness(g);
  EXPECT_EQ(s.s, 2);
  EXPECT_EQ(s.witness, (VertexSet{1, 2, 3, 4, 5}));
  const auto w = induced_subgraph(g, VertexSet{1, 2, 3, 4, 5});
  EXPECT_EQ(mu_star(w.graph), 2);
  EXPECT_EQ(s_invariant(w.graph), 1);
  EXPECT_EQ(s_invariant(fixtures::triangle()), 1);
}

// The degree-one prune never changes s or the witness.
TEST(Ears, SInvariantPruneAgreesWithFullScan) {
  for (int n = 3; n <= 7; ++n)
    for (const Graph& g : connected_graphs(n)) {
      if (!is_strongly_non_bipartite(g)) continue;
      MuStarCache cache(g);
      std::optional<SInvariant> best;
      for (Mask u = 1; u < (Mask{1} << n); ++u) {
        if (!brute::is_dominating(g, u)) continue;
        auto mu = cache.mu_star(VertexSet(u));
        if (mu && (!best || *mu < best->s || (*mu == best->s && VertexSet(u) < best->witness)))
          best = SInvariant{*mu, VertexSet(u)};
      }
      const auto got = s_invariant_with_witness(g);
      ASSERT_TRUE(best);
      EXPECT_EQ(got.s, best->s) << to_text(g);
      EXPECT_EQ(got.witness, best->witness) << to_text(g);
    }
}

TEST(Ears, JsonRoundTrip) {
  const auto r = phi_star(disjoint_union(fixtures::triangle_pendant(), fixtures::bowtie()));
  const Json j = to_json(*r.witness_decomposition);
  const auto back = ear_decomposition_from_json(j);
  EXPECT_EQ(back.components, r.witness_decomposition->components);
  EXPECT_EQ(back.weights, r.witness_decomposition->weights);
}

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "brute_force.hpp"
#include "edgepow/ass_primes.hpp"
#include "edgepow/canonical.hpp"
#include "edgepow/ears.hpp"
#include "edgepow/error.hpp"
#include "edgepow/graph_io.hpp"
#include "edgepow/report.hpp"
#include "fixtures.hpp"

using namespace edgepow;

namespace {

std::vector<VertexSet> covers_of(const std::vector<CoverReport>& reports) {
  std::vector<VertexSet> out;
  for (const auto& r : reports) out.push_back(r.cover);
  return out;
}

std::vector<Graph> small_corpus(int n_max) {
  std::vector<Graph> out;
  for (int n = 2; n <= n_max; ++n)
    for (const Graph& g : graphs_without_isolated_vertices(n)) out.push_back(g);
  return out;
}

std::vector<Graph> random_sample(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int k = 0; k < count; ++k) out.push_back(random_connected_graph(n, rng));
  return out;
}

// Embedded primes of I^t straight from the defining condition: some U with
// Γ_U strongly non-bipartite and μ*(Γ_U) < t such that F is minimal among
// the covers containing N[U]. μ* comes from the weight search.
class DirectEmbedded {
 public:
  explicit DirectEmbedded(const Graph& g) : g_(g) {
    const Mask all = full_mask(g.n());
    for (Mask f = 0; f <= all; ++f)
      if (brute::is_cover(g, f)) covers_.push_back(f);
    for (Mask u = 1; u <= all; ++u) {
      if (!is_strongly_non_bipartite(g, VertexSet(u))) continue;
      const int mu = mu_star_via_weights(induced_subgraph(g, VertexSet(u)).graph, 64).mu_star;
      const Mask closed = closed_neighborhood(g, VertexSet(u)).bits();
      for (Mask f : covers_) {
        if ((closed & ~f) != 0) continue;
        bool minimal = true;
        for (Mask h : covers_)
          if (h != f && (closed & ~h) == 0 && (h & ~f) == 0) minimal = false;
        if (!minimal) continue;
        auto [it, fresh] = least_.emplace(f, mu);
        if (!fresh) it->second = std::min(it->second, mu);
      }
    }
  }

  std::vector<VertexSet> embedded(int t) const {
    std::vector<VertexSet> out;
    for (auto [f, mu] : least_)
      if (mu < t && !is_minimal_cover(g_, VertexSet(f))) out.push_back(VertexSet(f));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const Graph& g_;
  std::vector<Mask> covers_;
  std::map<Mask, int> least_;
};

// Some dominating U has Γ_U with a spanning subgraph that is a triangle or
// one of the four minimal 2-bases, with no per-component accounting.
bool literal_catalog(const Graph& g) {
  std::vector<Graph> catalog{canonical_form(fixtures::triangle()).graph,
                             canonical_form(fixtures::triangle_pendant()).graph,
                             canonical_form(fixtures::bowtie()).graph,
                             canonical_form(cycle_graph(5)).graph,
                             canonical_form(fixtures::two_triangles()).graph};
  for (Mask u = 1; u <= full_mask(g.n()); ++u) {
    if (std::popcount(u) > 6 || !is_dominating(g, VertexSet(u))) continue;
    const Graph h = induced_subgraph(g, VertexSet(u)).graph;
    const auto edges = h.edges();
    for (Mask keep = 0; keep < (Mask{1} << edges.size()); ++keep) {
      std::vector<std::pair<int, int>> sub;
      for (std::size_t k = 0; k < edges.size(); ++k)
        if (keep >> k & 1) sub.emplace_back(edges[k].u, edges[k].v);
      const Graph c = canonical_form(Graph(h.n(), sub)).graph;
      if (std::find(catalog.begin(), catalog.end(), c) != catalog.end()) return true;
    }
  }
  return false;
}

// Two triangles joined by the edge 3-4, with pendants on 1, 2, 5 and 6.
Graph bridged_triangles_with_pendants() {
  return Graph(10, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {3, 4}, {1, 7}, {2, 8}, {5, 9}, {6, 10}});
}

}  // namespace

TEST(AssPrimes, IntroGraphPowers) {
  const Graph g = fixtures::intro_graph();
  const VertexSet f1{1, 2, 3, 4, 5};
  const VertexSet f2 = g.vertices();

  const auto w = embedded_prime_test(g, f1, 2);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->u, (VertexSet{1, 2, 3}));
  EXPECT_EQ(w->mu_star, 1);
  EXPECT_FALSE(embedded_prime_test(g, f2, 2));
  EXPECT_TRUE(embedded_prime_test(g, f2, 3));

  EXPECT_TRUE(associated_primes(g, 1).embedded_primes.empty());
  EXPECT_EQ(covers_of(associated_primes(g, 2).embedded_primes), (std::vector<VertexSet>{f1}));
  for (int t = 3; t <= 6; ++t)
    EXPECT_EQ(covers_of(associated_primes(g, t).embedded_primes), (std::vector<VertexSet>{f1, f2}));
  EXPECT_EQ(covers_of(associated_primes(g, 2).minimal_primes), minimal_covers(g));
}

TEST(AssPrimes, IntroGraphStability) {
  const Graph g = fixtures::intro_graph();
  const auto r = ass_infinity(g);
  EXPECT_EQ(r.astab, 3);
  EXPECT_EQ(r.per_prime_index, (std::map<VertexSet, int>{{VertexSet{1, 2, 3, 4, 5}, 2}, {g.vertices(), 3}}));
  EXPECT_EQ(r.cms_bound, 5);
}

TEST(AssPrimes, SmallExamples) {
  const auto edge = associated_primes(path_graph(2), 7);
  EXPECT_EQ(covers_of(edge.minimal_primes), (std::vector<VertexSet>{{1}, {2}}));
  EXPECT_TRUE(edge.embedded_primes.empty());
  EXPECT_EQ(ass_infinity(fixtures::triangle()).astab, 2);
  EXPECT_EQ(ass_infinity(fixtures::triangle()).per_prime_index,
            (std::map<VertexSet, int>{{VertexSet{1, 2, 3}, 2}}));
  const auto c6 = ass_infinity(cycle_graph(6));
  EXPECT_EQ(c6.astab, 1);
  EXPECT_TRUE(c6.per_prime_index.empty());
  EXPECT_FALSE(c6.cms_bound);
  for (VertexSet f : {VertexSet{1, 2, 3, 4}, VertexSet{1, 2, 3}})
    for (int t = 1; t <= 5; ++t) EXPECT_FALSE(embedded_prime_test(cycle_graph(4), f, t));
}

TEST(AssPrimes, Preconditions) {
  const Graph g = fixtures::intro_graph();
  EXPECT_THROW(embedded_prime_test(g, VertexSet{1}, 2), PreconditionError);
  EXPECT_THROW(embedded_prime_test(g, minimal_covers(g)[0], 2), PreconditionError);
  EXPECT_THROW(associated_primes(g, 0), PreconditionError);
  const Graph isolated(4, {{1, 2}, {2, 3}, {1, 3}});
  EXPECT_THROW(associated_primes(isolated, 2), InputError);
  EXPECT_THROW(ass_infinity(isolated), InputError);
  EXPECT_THROW(max_ideal_in_ass(isolated, 2), InputError);
  EXPECT_THROW(depth_positive_test(g, 4), PreconditionError);
}

TEST(AssPrimes, MaximalIdealExamples) {
  for (int t = 1; t <= 5; ++t) {
    EXPECT_EQ(max_ideal_in_ass(fixtures::bowtie_pendants(), t), t >= 3) << t;
    EXPECT_EQ(max_ideal_in_ass(fixtures::triangle(), t), t >= 2) << t;
    EXPECT_FALSE(max_ideal_in_ass(cycle_graph(6), t));
  }
}

TEST(AssPrimes, DepthExamples) {
  EXPECT_FALSE(depth_positive_test(fixtures::triangle(), 2));
  EXPECT_TRUE(depth_positive_test(cycle_graph(5), 2));
  EXPECT_FALSE(depth_positive_test(cycle_graph(5), 3));
  EXPECT_TRUE(depth_positive_test(cycle_graph(7), 2));
  EXPECT_TRUE(depth_positive_test(cycle_graph(7), 3));
  EXPECT_FALSE(depth_positive_test(fixtures::two_triangles(), 3));
}

TEST(AssPrimes, DepthCatalogAgreesOnSmallGraphs) {
  for (const Graph& g : small_corpus(7))
    for (int t : {2, 3}) ASSERT_NO_THROW(depth_positive_test(g, t)) << to_text(g);
}

// The t = 3 catalog must be read component by component: this graph has a
// dominating U spanned by two disjoint triangles, yet μ*(Γ_U) = 3.
TEST(AssPrimes, CatalogNeedsComponents) {
  const Graph g = bridged_triangles_with_pendants();
  EXPECT_TRUE(literal_catalog(g));
  EXPECT_FALSE(has_dominating_catalog_base(g, 3));
  EXPECT_FALSE(max_ideal_in_ass(g, 3));
  EXPECT_TRUE(max_ideal_in_ass(g, 4));
}

TEST(AssPrimes, MatchesDefiningCondition) {
  auto corpus = small_corpus(6);
  for (const Graph& g : random_sample(7, 40, 17)) corpus.push_back(g);
  for (const Graph& g : corpus) {
    const DirectEmbedded direct(g);
    for (int t = 1; t <= 4; ++t)
      ASSERT_EQ(covers_of(associated_primes(g, t).embedded_primes), direct.embedded(t)) << to_text(g) << t;
  }
}

TEST(AssPrimes, NoEmbeddedIffNoShortOddCycle) {
  for (const Graph& g : small_corpus(7))
    for (int t = 1; t <= 4; ++t) {
      const auto odd = shortest_odd_cycle(g);
      const bool short_cycle = odd && *odd <= 2 * t - 1;
      ASSERT_EQ(associated_primes(g, t).embedded_primes.empty(), !short_cycle) << to_text(g) << t;
    }
}

TEST(AssPrimes, MonotoneInPower) {
  for (const Graph& g : small_corpus(7)) {
    auto prev = covers_of(associated_primes(g, 1).embedded_primes);
    for (int t = 2; t <= 5; ++t) {
      auto next = covers_of(associated_primes(g, t).embedded_primes);
      ASSERT_TRUE(std::includes(next.begin(), next.end(), prev.begin(), prev.end())) << to_text(g) << t;
      prev = std::move(next);
    }
  }
}

TEST(AssPrimes, StabilityConsistency) {
  auto corpus = small_corpus(6);
  for (const Graph& g : random_sample(7, 40, 23)) corpus.push_back(g);
  for (const Graph& g : corpus) {
    const auto r = ass_infinity(g);
    const auto minimal = minimal_covers(g);
    const Mask all = full_mask(g.n());
    for (Mask f = 0; f <= all; ++f) {
      const VertexSet fs(f);
      if (!brute::is_cover(g, f) || is_minimal_cover(g, fs)) continue;
      const auto it = r.per_prime_index.find(fs);
      // C(Γ): non-minimal covers whose core graph is strongly non-bipartite.
      const VertexSet c = core(g, fs);
      ASSERT_EQ(it != r.per_prime_index.end(), is_strongly_non_bipartite(g, c)) << to_text(g) << to_string(fs);
      for (int t = 1; t <= r.astab + 1; ++t) {
        const bool in = embedded_prime_test(g, fs, t).has_value();
        ASSERT_EQ(in, it != r.per_prime_index.end() && t >= it->second) << to_text(g) << to_string(fs) << t;
      }
    }
    // Saturation: Ass(I^astab) already holds every member of Ass^∞.
    auto members = covers_of(associated_primes(g, r.astab).minimal_primes);
    for (const auto& e : associated_primes(g, r.astab).embedded_primes) members.push_back(e.cover);
    std::sort(members.begin(), members.end());
    auto infinity = covers_of(r.ass_infty_members);
    std::sort(infinity.begin(), infinity.end());
    ASSERT_EQ(members, infinity) << to_text(g);
    if (r.astab > 1) {
      ASSERT_LT(associated_primes(g, r.astab - 1).embedded_primes.size(),
                associated_primes(g, r.astab).embedded_primes.size());
    }
    ASSERT_EQ(r.astab == 1, r.per_prime_index.empty());
  }
}

TEST(AssPrimes, WitnessStructure) {
  for (const Graph& g : small_corpus(7))
    for (int t = 2; t <= 4; ++t)
      for (const auto& r : associated_primes(g, t).embedded_primes) {
        ASSERT_TRUE(r.witness && r.witness_mu_star);
        const VertexSet u = *r.witness;
        ASSERT_TRUE(is_cover(g, r.cover));
        ASSERT_FALSE(r.is_minimal_cover);
        ASSERT_TRUE(is_strongly_non_bipartite(g, u));
        ASSERT_EQ(mu_star(induced_subgraph(g, u).graph), *r.witness_mu_star);
        ASSERT_LT(*r.witness_mu_star, t);
        const VertexSet closed = closed_neighborhood(g, u);
        ASSERT_TRUE(closed.is_subset_of(r.cover));
        for (int v : (r.cover - closed).members())
          ASSERT_FALSE(is_cover(g, r.cover - VertexSet{v})) << to_text(g) << to_string(r.cover);
      }
}

TEST(AssPrimes, StabilityBound) {
  for (const Graph& g : small_corpus(7)) {
    const auto r = ass_infinity(g);
    if (r.cms_bound && *r.cms_bound >= 1) ASSERT_LE(r.astab, *r.cms_bound) << to_text(g);
  }
}

TEST(AssPrimes, JsonShape) {
  const Json j = to_json(associated_primes(fixtures::intro_graph(), 2));
  EXPECT_EQ(j["t"], 2);
  EXPECT_EQ(j["embedded"][0]["cover"], Json::parse("[1,2,3,4,5]"));
  EXPECT_EQ(j["embedded"][0]["witness"], Json::parse("[1,2,3]"));
  EXPECT_EQ(j["embedded"][0]["mu_star"], 1);
  EXPECT_EQ(j["minimal"].size(), minimal_covers(fixtures::intro_graph()).size());
  EXPECT_EQ(j["graph_hash"], canonical_hash(fixtures::intro_graph()));
  const std::string table = to_table(associated_primes(fixtures::intro_graph(), 2));
  EXPECT_NE(table.find("(x1,x2,x3,x4,x5)"), std::string::npos);
}

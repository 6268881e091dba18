#include <gtest/gtest.h>

#include <map>
#include <set>

#include "edgepow/canonical.hpp"
#include "edgepow/ears.hpp"
#include "edgepow/error.hpp"
#include "edgepow/graph_io.hpp"
#include "edgepow/report.hpp"
#include "edgepow/sbases.hpp"
#include "fixtures.hpp"

using namespace edgepow;

namespace {

using Key = std::pair<int, std::vector<Mask>>;

Key key_of(const Graph& g) {
  const Graph c = canonical_form(g).graph;
  return {c.n(), c.adjacency()};
}

std::set<Key> keys_of(const std::vector<SBase>& bases) {
  std::set<Key> out;
  for (const auto& b : bases) out.insert(key_of(b.graph));
  return out;
}

// Minimal s-bases on exactly n vertices, from every labeled graph on n
// vertices: μ* by the weight search, minimality by scanning all edge
// submasks of K_n.
std::map<int, std::set<Key>> labeled_catalog(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  const Mask count = Mask{1} << pairs.size();
  auto graph_of = [&](Mask m) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (m >> k & 1) edges.push_back(pairs[k]);
    return Graph(n, edges);
  };
  std::map<Key, int> by_class;
  std::vector<int> mu(count, -1);
  for (Mask m = 0; m < count; ++m) {
    const Graph g = graph_of(m);
    if (!is_strongly_non_bipartite(g)) continue;
    const Key k = key_of(g);
    auto it = by_class.find(k);
    if (it == by_class.end()) it = by_class.emplace(k, mu_star_via_weights(g, 64).mu_star).first;
    mu[m] = it->second;
  }
  std::map<int, std::set<Key>> out;
  for (Mask m = 0; m < count; ++m) {
    if (mu[m] < 0) continue;
    bool minimal = true;
    for (Mask sub = (m - 1) & m; minimal; sub = (sub - 1) & m) {
      if (mu[sub] == mu[m]) minimal = false;
      if (sub == 0) break;
    }
    if (minimal) out[mu[m]].insert(key_of(graph_of(m)));
  }
  return out;
}

}  // namespace

TEST(SBases, OneBaseIsTriangle) {
  const auto bases = enumerate_minimal_sbases(1);
  ASSERT_EQ(bases.size(), 1u);
  EXPECT_TRUE(isomorphic(bases[0].graph, fixtures::triangle()));
  EXPECT_EQ(bases[0].s, 1);
  EXPECT_TRUE(bases[0].minimal);
}

TEST(SBases, TwoBasesAreTheFourGraphs) {
  const auto bases = enumerate_minimal_sbases(2);
  std::set<Key> expected{key_of(fixtures::triangle_pendant()), key_of(fixtures::bowtie()),
                         key_of(cycle_graph(5)), key_of(fixtures::two_triangles())};
  EXPECT_EQ(bases.size(), 4u);
  EXPECT_EQ(keys_of(bases), expected);
  EXPECT_EQ(bases[0].graph.n(), 4);
  for (const auto& b : bases) {
    EXPECT_TRUE(is_minimal_sbase(b.graph, 2));
    EXPECT_EQ(b.graph, canonical_form(b.graph).graph);
  }
}

TEST(SBases, VertexBudget) {
  const auto bases = enumerate_minimal_sbases(2, 4);
  ASSERT_EQ(bases.size(), 1u);
  EXPECT_TRUE(isomorphic(bases[0].graph, fixtures::triangle_pendant()));
  EXPECT_TRUE(enumerate_minimal_sbases(3, 3).empty());
  EXPECT_THROW(enumerate_minimal_sbases(0), PreconditionError);
}

TEST(SBases, ThreeBasesIncludeBridgedTriangles) {
  const auto bases = keys_of(enumerate_minimal_sbases(3));
  EXPECT_TRUE(bases.count(key_of(fixtures::two_triangles_bridge())));
  EXPECT_FALSE(bases.count(key_of(fixtures::two_triangles_bridge_ear())));
  EXPECT_TRUE(bases.count(key_of(cycle_graph(7))));
  EXPECT_TRUE(bases.count(key_of(disjoint_union(fixtures::triangle(), fixtures::bowtie()))));
}

TEST(SBases, ExampleBases) {
  EXPECT_EQ(mu_star(fixtures::two_triangles()), 2);
  EXPECT_TRUE(is_minimal_sbase(fixtures::two_triangles_bridge(), 3));
  EXPECT_TRUE(is_minimal_sbase(fixtures::two_triangles_path(), 4));
  EXPECT_FALSE(is_minimal_sbase(fixtures::two_triangles_bridge(), 2));
  EXPECT_FALSE(is_sbase(cycle_graph(4), 2));
  // K4 is a 2-base that contains the triangle-with-pendant.
  EXPECT_TRUE(is_sbase(complete_graph(4), 2));
  EXPECT_FALSE(is_minimal_sbase(complete_graph(4), 2));
}

// Adding the extra path keeps μ* but creates a spanning odd cycle with the
// same value, so these graphs are bases without being minimal.
TEST(SBases, ExtraPathBreaksMinimality) {
  const Graph g3 = fixtures::two_triangles_bridge_ear();
  const Graph g4 = fixtures::two_triangles_double_path();
  EXPECT_TRUE(is_sbase(g3, 3));
  EXPECT_TRUE(is_sbase(g4, 4));
  EXPECT_FALSE(is_minimal_sbase(g3, 3));
  EXPECT_FALSE(is_minimal_sbase(g4, 4));
  const Graph c7(7, {{1, 2}, {2, 7}, {7, 6}, {6, 5}, {5, 4}, {4, 3}, {3, 1}});
  const Graph c9(9, {{1, 2}, {2, 8}, {8, 9}, {9, 6}, {6, 7}, {7, 5}, {5, 4}, {4, 3}, {3, 1}});
  for (auto e : c7.edges()) EXPECT_TRUE(g3.adjacent(e.u, e.v));
  for (auto e : c9.edges()) EXPECT_TRUE(g4.adjacent(e.u, e.v));
  EXPECT_TRUE(isomorphic(c7, cycle_graph(7)));
  EXPECT_TRUE(isomorphic(c9, cycle_graph(9)));
}

TEST(SBases, MatchesLabeledScan) {
  std::map<int, std::set<Key>> brute;
  for (int n = 3; n <= 6; ++n)
    for (auto& [s, keys] : labeled_catalog(n)) brute[s].insert(keys.begin(), keys.end());
  for (int s = 1; s <= 4; ++s)
    EXPECT_EQ(keys_of(enumerate_minimal_sbases(s, 6)), brute[s]) << s;
  EXPECT_LE(brute.rbegin()->first, 4);
}

// Minimality of a disconnected base is not decided component by component:
// each part here is minimal, but the union has a spanning 5-base made of two
// disjoint triangles and a triangle with two pendants.
TEST(SBases, MinimalityIsNotComponentwise) {
  const Graph g = disjoint_union(fixtures::two_triangles_bridge(), fixtures::bowtie());
  EXPECT_TRUE(is_minimal_sbase(fixtures::two_triangles_bridge(), 3));
  EXPECT_TRUE(is_minimal_sbase(fixtures::bowtie(), 2));
  EXPECT_TRUE(is_sbase(g, 5));
  EXPECT_FALSE(is_minimal_sbase(g, 5));
  const Graph spanning = disjoint_union(fixtures::two_triangles(),
                                        Graph(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}}));
  EXPECT_TRUE(is_sbase(spanning, 5));
}

TEST(SBases, EveryEnumeratedBaseVerifies) {
  for (int s = 1; s <= 3; ++s)
    for (const auto& b : enumerate_minimal_sbases(s)) {
      EXPECT_TRUE(is_strongly_non_bipartite(b.graph)) << to_text(b.graph);
      EXPECT_EQ(mu_star_via_weights(b.graph, 64).mu_star, s) << to_text(b.graph);
      EXPECT_TRUE(b.minimal);
    }
}

TEST(SBases, JsonAndTable) {
  const Json j = to_json(enumerate_minimal_sbases(1));
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["s"], 1);
  EXPECT_EQ(j[0]["n"], 3);
  EXPECT_EQ(j[0]["edges"], Json::parse("[[1,2],[1,3],[2,3]]"));
  EXPECT_FALSE(to_table(enumerate_minimal_sbases(2)).empty());
}

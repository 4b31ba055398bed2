#include <gtest/gtest.h>

#include <set>

#include "chroma/canonical.hpp"
#include "chroma/generators.hpp"
#include "chroma/graph.hpp"
#include "oracles.hpp"

using namespace chroma;

TEST(Graph, EdgesAreNormalizedAndDeduplicated) {
  Graph g(4, {{2, 1}, {1, 2}, {0, 3}, {3, 2}});
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 3}, {1, 2}, {2, 3}}));
  EXPECT_TRUE(g.has_edge(3, 0));
  EXPECT_FALSE(g.has_edge(0, 1));
  EXPECT_EQ(g.degree(2), 2u);
}

TEST(Graph, RejectsSelfLoopsAndRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST(Graph, LargeGraphsWithoutBitset) {
  const std::size_t n = Graph::kBitsetLimit + 10;
  Graph g = cycle_graph(n);
  EXPECT_TRUE(g.has_edge(0, static_cast<Vertex>(n - 1)));
  EXPECT_TRUE(g.has_edge(17, 18));
  EXPECT_FALSE(g.has_edge(17, 19));
}

TEST(EdgeList, ParsesHeaderCommentsAndIsolatedVertices) {
  Graph g = parse_edge_list("# a path\nn 5\n0 1\n1 2  # trailing\n\n2 3\n");
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
}

TEST(EdgeList, InfersVertexCountWithoutHeader) {
  Graph g = parse_edge_list("0 4\n");
  EXPECT_EQ(g.vertex_count(), 5u);
}

TEST(EdgeList, Errors) {
  EXPECT_THROW(parse_edge_list("0 0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 x\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 2\n0 5\n"), ParseError);
  EXPECT_THROW(read_edge_list_file("/nonexistent/graph.edges"), ParseError);
}

TEST(Graph, ComponentsAndInducedSubgraphs) {
  Graph g(6, {{0, 1}, {1, 2}, {4, 5}});
  EXPECT_FALSE(is_connected(g));
  auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(comps[1], (std::vector<Vertex>{3}));
  std::vector<Vertex> s{5, 1, 2};
  Graph sub = induced_subgraph(g, s);
  EXPECT_EQ(sub.edges(), (std::vector<Edge>{{0, 1}}));
  std::vector<Vertex> repeat{1, 1};
  EXPECT_THROW(induced_subgraph(g, repeat), std::invalid_argument);
  EXPECT_TRUE(is_connected(wheel_graph(5)));
}

TEST(Generators, Sizes) {
  EXPECT_EQ(complete_graph(6).edge_count(), 15u);
  EXPECT_EQ(cycle_graph(7).edge_count(), 7u);
  EXPECT_EQ(path_graph(4).edge_count(), 3u);
  EXPECT_EQ(star_graph(5).vertex_count(), 6u);
  EXPECT_EQ(wheel_graph(8).vertex_count(), 9u);
  EXPECT_EQ(wheel_graph(8).edge_count(), 16u);
  std::vector<std::size_t> parts{2, 3, 4};
  EXPECT_EQ(complete_multipartite(parts).edge_count(), 6u + 8u + 12u);
  EXPECT_EQ(disjoint_copies(complete_graph(3), 4).edge_count(), 12u);
}

TEST(Generators, ErdosRenyiIsSeededAndExtremes) {
  EXPECT_EQ(erdos_renyi(40, 0.3, 7), erdos_renyi(40, 0.3, 7));
  EXPECT_NE(erdos_renyi(40, 0.3, 7), erdos_renyi(40, 0.3, 8));
  EXPECT_EQ(erdos_renyi(12, 1.0, 1), complete_graph(12));
  EXPECT_EQ(erdos_renyi(12, 0.0, 1).edge_count(), 0u);
  std::size_t edges = erdos_renyi(400, 0.25, 3).edge_count();
  const double expected = 0.25 * 400 * 399 / 2;
  EXPECT_NEAR(static_cast<double>(edges), expected, 5 * std::sqrt(expected));
}

TEST(Generators, PyramidOfC4IsCompleteBipartite) {
  Graph p = pyramid(cycle_graph(4), 2);
  EXPECT_EQ(p.vertex_count(), 5u);
  EXPECT_EQ(p.edge_count(), 6u);
  std::vector<std::size_t> k25{2, 5};
  EXPECT_TRUE(are_isomorphic(pyramid(cycle_graph(4), 4), complete_multipartite(k25)));
  // |E| = n|E(h)| - (n-1)|E(h[base])|
  Graph k = named_graph("diamond");
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(pyramid(k, n).edge_count(), n * 5 - (n - 1) * 3);
  }
}

TEST(Generators, CounterexampleGraph) {
  Graph g = counterexample_graph(cycle_graph(4), 10, 1.0);
  EXPECT_EQ(g.vertex_count(), 13u + 40u);
  EXPECT_THROW(counterexample_graph(star_graph(3), 10, 1.0), std::invalid_argument);
  EXPECT_TRUE(is_star(star_graph(4)));
  EXPECT_FALSE(is_star(cycle_graph(4)));
}

TEST(Generators, NamedFixtures) {
  EXPECT_EQ(named_graph("k4"), complete_graph(4));
  EXPECT_EQ(named_graph("k_5"), complete_graph(5));
  EXPECT_EQ(named_graph("k12").vertex_count(), 12u);
  EXPECT_EQ(named_graph("k1_3"), star_graph(3));
  EXPECT_EQ(named_graph("c5"), cycle_graph(5));
  EXPECT_EQ(named_graph("path4"), path_graph(4));
  EXPECT_EQ(named_graph("p4"), path_graph(4));
  EXPECT_EQ(named_graph("wheel6"), wheel_graph(6));
  EXPECT_EQ(named_graph("diamond").edge_count(), 5u);
  EXPECT_EQ(named_graph("tadpole").edge_count(), 4u);
  EXPECT_EQ(named_graph("bowtie").vertex_count(), 5u);
  EXPECT_EQ(named_graph("k4-pendant").edge_count(), 7u);
  EXPECT_THROW(named_graph("petersen"), ParseError);
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::vector<Graph> fixtures{named_graph("diamond"), named_graph("bowtie"), named_graph("k4-pendant"),
                              named_graph("tadpole"), cycle_graph(6),        wheel_graph(5),
                              pyramid(cycle_graph(4), 3), oracle::random_graph(9, 0.4, 11),
                              oracle::random_graph(12, 0.5, 12), Graph(4)};
  Stream s(99, 0);
  for (const Graph& g : fixtures) {
    const CanonicalForm form = canonical_form(g);
    const Graph canon = canonical_graph(g);
    for (int trial = 0; trial < 120; ++trial) {
      Graph h = relabel(g, oracle::random_permutation(g.vertex_count(), s));
      ASSERT_EQ(canonical_form(h), form);
      ASSERT_EQ(canonical_graph(h), canon);
    }
  }
}

TEST(Canonical, SeparatesNonIsomorphicGraphs) {
  // Every graph on 5 vertices: 34 isomorphism classes.
  std::set<CanonicalForm> forms;
  std::vector<Edge> pairs;
  for (Vertex a = 0; a < 5; ++a)
    for (Vertex b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1u) edges.push_back(pairs[i]);
    forms.insert(canonical_form(Graph(5, edges)));
  }
  EXPECT_EQ(forms.size(), 34u);
  EXPECT_FALSE(are_isomorphic(named_graph("c4"), named_graph("k1_3")));
  EXPECT_FALSE(are_isomorphic(named_graph("c4"), named_graph("p4")));
}

TEST(Canonical, RegularGraphsThatRefinementCannotSplit) {
  // C6 and two triangles are both 2-regular on 6 vertices.
  Graph two_triangles = disjoint_copies(complete_graph(3), 2);
  EXPECT_FALSE(are_isomorphic(cycle_graph(6), two_triangles));
  // Two 4-regular circulants on 8 vertices.
  auto circulant = [](std::size_t n, std::vector<std::size_t> jumps) {
    std::vector<Edge> e;
    for (std::size_t v = 0; v < n; ++v)
      for (auto j : jumps) e.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>((v + j) % n));
    return Graph(n, e);
  };
  EXPECT_FALSE(are_isomorphic(circulant(8, {1, 2}), circulant(8, {1, 3})));
  EXPECT_TRUE(are_isomorphic(circulant(8, {1, 3}), circulant(8, {3, 1})));
}

TEST(Automorphisms, KnownGroups) {
  EXPECT_EQ(automorphism_count(complete_graph(5)), 120);
  EXPECT_EQ(automorphism_count(cycle_graph(4)), 8);
  EXPECT_EQ(automorphism_count(star_graph(4)), 24);
  EXPECT_EQ(automorphism_count(named_graph("bowtie")), 8);
  EXPECT_EQ(automorphism_count(Graph(6)), 720);
  EXPECT_EQ(automorphism_count(complete_graph(20)), mpz_class("2432902008176640000"));
}

TEST(Automorphisms, MatchBruteForce) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = oracle::random_graph(6, seed % 2 ? 0.3 : 0.6, seed);
    EXPECT_EQ(automorphism_count(g), oracle::automorphisms(g)) << "seed " << seed;
  }
}

TEST(SymmetryBreaking, OneRepresentativePerClass) {
  for (const char* name : {"k4", "c4", "c5", "k1_3", "diamond", "bowtie", "tadpole", "k4-pendant", "p4"}) {
    Graph h = named_graph(name);
    const auto pairs = symmetry_breaking_pairs(h);
    std::uint64_t kept = 0;
    oracle::for_each_injection(h.vertex_count(), h.vertex_count(), [&](const std::vector<Vertex>& m) {
      for (auto [a, b] : h.edges())
        if (!h.has_edge(m[a], m[b])) return;
      for (auto [a, b] : pairs)
        if (m[a] >= m[b]) return;
      ++kept;
    });
    EXPECT_EQ(kept, 1u) << name;
  }
}

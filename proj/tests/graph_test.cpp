#include <gtest/gtest.h>

#include "gorenstein/edge_polytope.hpp"
#include "gorenstein/graph.hpp"

using namespace gorenstein;
using namespace gorenstein::graph;

namespace {

Graph bowtie() {
  return Graph(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

Graph two_triangles_joined_by_path() {
  return Graph(7, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {6, 7}});
}

}  // namespace

TEST(VertexSet, BasicOperations) {
  VertexSet s{1, 3, 5};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.least(), 1);
  EXPECT_EQ((s - VertexSet{1}).members(), (std::vector<Vertex>{3, 5}));
  EXPECT_TRUE(VertexSet{3}.is_subset_of(s));
  EXPECT_THROW(s.insert(0), InputError);
  EXPECT_THROW(s.insert(65), InputError);
}

TEST(VertexSet, LexicographicOrder) {
  EXPECT_TRUE(lexicographic_less(VertexSet{1, 4}, VertexSet{2}));
  EXPECT_TRUE(lexicographic_less(VertexSet{1}, VertexSet{1, 2}));
  EXPECT_FALSE(lexicographic_less(VertexSet{2}, VertexSet{1, 5}));
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{1, 4}}), InputError);
  EXPECT_THROW(Graph(3, {{2, 2}}), InputError);
  EXPECT_THROW(Graph(3, {{1, 2}, {2, 1}}), InputError);
  EXPECT_THROW(Graph(65, {}), InputError);
}

TEST(Graph, EdgesAreSorted) {
  Graph g(3, {{2, 3}, {1, 3}, {1, 2}});
  ASSERT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.edges()[0], Edge(1, 2));
  EXPECT_EQ(g.edges()[2], Edge(2, 3));
}

TEST(Poset, ComparabilityGraphOfChainIsComplete) {
  Poset p(3, {{1, 2}, {2, 3}});
  EXPECT_TRUE(p.less(1, 3));
  EXPECT_EQ(comparability_graph(p), complete_graph(3));
}

TEST(Poset, AntichainGivesEdgelessGraph) {
  EXPECT_EQ(comparability_graph(Poset(4, {})).edge_count(), 0u);
}

TEST(Poset, RejectsCycles) {
  EXPECT_THROW(Poset(3, {{1, 2}, {2, 3}, {3, 1}}), InputError);
  EXPECT_THROW(Poset(2, {{1, 1}}), InputError);
}

TEST(Poset, VShapeGivesPath) {
  EXPECT_EQ(comparability_graph(Poset(3, {{1, 3}, {2, 3}})), Graph(3, {{1, 3}, {2, 3}}));
}

TEST(StableSets, PathOnThreeVertices) {
  const auto s = stable_sets(path_graph(3));
  // ∅, {1}, {1,3}, {2}, {3}
  ASSERT_EQ(s.size(), 5u);
  EXPECT_TRUE(s.front().empty());
  EXPECT_EQ(s[2], (VertexSet{1, 3}));
}

TEST(StableSets, CompleteGraphHasOnlySingletons) {
  EXPECT_EQ(stable_sets(complete_graph(5)).size(), 6u);
  EXPECT_TRUE(is_clique(complete_graph(5), VertexSet::range(5)));
}

TEST(Neighborhood, OfStableSet) {
  const Graph c6 = cycle_graph(6);
  EXPECT_EQ(neighborhood(c6, VertexSet{1}), (VertexSet{2, 6}));
  EXPECT_EQ(neighborhood(c6, VertexSet{1, 3}), (VertexSet{2, 4, 6}));
}

TEST(InducedBipartite, KeepsOnlyEdgesBetweenSides) {
  const Graph k4 = complete_graph(4);
  const auto b = induced_bipartite_graph(k4, VertexSet{1});
  EXPECT_EQ(b.neighbor_side, (VertexSet{2, 3, 4}));
  EXPECT_EQ(b.graph.edge_count(), 3u);
  EXPECT_TRUE(b.connected());
  EXPECT_TRUE(induced_bipartite_connected(k4, VertexSet{1}));
  EXPECT_THROW(induced_bipartite_graph(k4, VertexSet{1, 2}), PreconditionError);
  EXPECT_THROW(induced_bipartite_graph(k4, VertexSet{}), PreconditionError);
}

TEST(InducedBipartite, DisconnectedCase) {
  // T = {1, 4} in the path 1-2-3-4-5: N = {2, 3, 5}; 1-2 and 3-4-5 are separate.
  EXPECT_FALSE(induced_bipartite_connected(path_graph(5), VertexSet{1, 4}));
  EXPECT_TRUE(induced_bipartite_connected(path_graph(5), VertexSet{1, 3}));
}

TEST(Connectivity, TwoConnectedExamples) {
  EXPECT_TRUE(is_connected(cycle_graph(4)));
  EXPECT_TRUE(is_two_connected(cycle_graph(4)));
  EXPECT_FALSE(is_two_connected(path_graph(3)));
  EXPECT_TRUE(is_connected(bowtie()));
  EXPECT_FALSE(is_two_connected(bowtie()));
  EXPECT_FALSE(is_two_connected(complete_graph(2)));
  EXPECT_FALSE(is_connected(Graph(3, {{1, 2}})));
}

TEST(Bipartition, Examples) {
  const auto b = bipartition(cycle_graph(6));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->first, (VertexSet{1, 3, 5}));
  EXPECT_FALSE(bipartition(cycle_graph(5)));
  EXPECT_THROW(bipartition(Graph(3, {{1, 2}})), PreconditionError);
}

TEST(ChordlessCycles, CountsInK4) {
  // K4 has four triangles and no chordless 4-cycles.
  EXPECT_EQ(chordless_cycles(complete_graph(4)).size(), 4u);
  EXPECT_EQ(chordless_odd_cycles(complete_graph(4)).size(), 4u);
  EXPECT_EQ(chordless_cycles(cycle_graph(7)).size(), 1u);
}

TEST(OddCycleCondition, DisjointTrianglesJoinedByEdgeSatisfyIt) {
  EXPECT_TRUE(odd_cycle_condition(edge::prism_graph(3)).holds);
  EXPECT_TRUE(odd_cycle_condition(complete_graph(6)).holds);
  EXPECT_TRUE(odd_cycle_condition(cycle_graph(6)).holds);
}

TEST(OddCycleCondition, WitnessForTrianglesJoinedByPath) {
  const auto r = odd_cycle_condition(two_triangles_joined_by_path());
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->first.vertex_set(), (VertexSet{1, 2, 3}));
  EXPECT_EQ(r.witness->second.vertex_set(), (VertexSet{5, 6, 7}));
  EXPECT_THROW(odd_cycle_condition(Graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}})), PreconditionError);
}

TEST(OddCycleCondition, LongOddCycleWithChordIsReducedToTriangles) {
  // C_7 with a chord 1-3 splits into a triangle and a 6-cycle; no two disjoint odd cycles.
  Graph g(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 7}, {1, 3}});
  EXPECT_TRUE(odd_cycle_condition(g).holds);
}

TEST(OddCyclesIntersect, Examples) {
  EXPECT_TRUE(odd_cycles_pairwise_intersect(cycle_graph(6)));
  EXPECT_TRUE(odd_cycles_pairwise_intersect(bowtie()));
  EXPECT_FALSE(odd_cycles_pairwise_intersect(edge::prism_graph(3)));
  EXPECT_TRUE(odd_cycles_pairwise_intersect(complete_graph(5)));
  EXPECT_FALSE(odd_cycles_pairwise_intersect(complete_graph(6)));
}

TEST(DeletionComponents, Examples) {
  EXPECT_TRUE(deletion_components_all_have_odd_cycle(complete_graph(4)));
  EXPECT_FALSE(deletion_components_all_have_odd_cycle(complete_graph(3)));
  EXPECT_TRUE(deletion_components_all_have_odd_cycle(edge::prism_graph(3)));
  EXPECT_FALSE(deletion_components_all_have_odd_cycle(bowtie()));
}

TEST(PerfectMatching, Examples) {
  const auto m = perfect_matching(edge::prism_graph(3));
  ASSERT_TRUE(m);
  EXPECT_TRUE(is_perfect_matching(edge::prism_graph(3), *m));
  EXPECT_FALSE(perfect_matching(cycle_graph(5)));
  EXPECT_FALSE(perfect_matching(Graph(4, {{1, 2}, {1, 3}, {1, 4}})));
  EXPECT_FALSE(is_perfect_matching(cycle_graph(4), {{1, 2}, {2, 3}}));
}

TEST(PerfectMatching, SumOfEdgeVectorsIsAllOnes) {
  const Graph g = edge::prism_graph(5);
  const auto m = perfect_matching(g);
  ASSERT_TRUE(m);
  IntVector sum(static_cast<std::size_t>(g.order()), 0);
  for (const auto& e : *m) {
    const auto v = edge::edge_vector(g.order(), e);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += v[i];
  }
  EXPECT_EQ(sum, IntVector(sum.size(), 1));
}

TEST(Cliques, MaximalCliquesAndNumber) {
  const Graph g(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
  const auto c = maximal_cliques(g);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], (VertexSet{1, 2, 3}));
  EXPECT_EQ(c[1], (VertexSet{3, 4}));
  EXPECT_EQ(clique_number(g), 3);
  EXPECT_EQ(maximal_cliques(Graph(3, {})).size(), 3u);
}

TEST(Coloring, ChromaticNumbers) {
  EXPECT_EQ(chromatic_number(cycle_graph(5)), 3);
  EXPECT_EQ(chromatic_number(cycle_graph(6)), 2);
  EXPECT_EQ(chromatic_number(complete_graph(4)), 4);
  const auto c = proper_coloring(cycle_graph(6), 2);
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, (std::vector<int>{1, 2, 1, 2, 1, 2}));
  EXPECT_FALSE(proper_coloring(cycle_graph(5), 2));
}

TEST(Perfection, Examples) {
  EXPECT_FALSE(is_perfect(cycle_graph(5)));
  EXPECT_FALSE(is_perfect(cycle_graph(7)));
  EXPECT_TRUE(is_perfect(cycle_graph(6)));
  EXPECT_TRUE(is_perfect(complete_graph(5)));
  EXPECT_TRUE(is_perfect(comparability_graph(Poset(5, {{1, 3}, {2, 3}, {3, 4}, {3, 5}}))));
  EXPECT_THROW(is_perfect(path_graph(13)), PreconditionError);
  EXPECT_TRUE(is_perfect(path_graph(13), 13));
}

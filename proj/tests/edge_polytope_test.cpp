#include <gtest/gtest.h>

#include "gorenstein/edge_polytope.hpp"
#include "gorenstein/sweep.hpp"

using namespace gorenstein;
using namespace gorenstein::edge;
using graph::Graph;
using graph::VertexSet;

namespace {

Graph bowtie() { return Graph(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}); }

Graph subdivided_prism5() {
  std::vector<graph::Edge> e;
  const Graph p = prism_graph(5);
  for (const auto& ed : p.edges())
    if (ed != graph::Edge(1, 6)) e.push_back(ed);
  e.emplace_back(1, 11);
  e.emplace_back(6, 11);
  return Graph(11, e);
}

// Square of the 7-cycle: i adjacent to i±1, i±2.
Graph circulant7() {
  std::vector<graph::Edge> e;
  for (int i = 1; i <= 7; ++i) {
    e.emplace_back(i, i % 7 + 1);
    e.emplace_back(i, (i + 1) % 7 + 1);
  }
  return Graph(7, e);
}

graph::Matching spokes(int n) {
  graph::Matching m;
  for (int i = 1; i <= n; ++i) m.emplace_back(i, i + n);
  return m;
}

}  // namespace

TEST(EdgePolytope, Construction) {
  const auto c3 = edge_polytope(graph::cycle_graph(3));
  EXPECT_EQ(c3.vertices(), (std::vector<IntVector>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(edge_polytope(graph::complete_graph(2)).vertices(), (std::vector<IntVector>{{1, 1}}));
  EXPECT_EQ(edge_polytope(prism_graph(3)).size(), 9u);
  EXPECT_THROW(edge_polytope(Graph(3, {})), PreconditionError);
}

TEST(EdgePolytopeFacets, MatchBruteForceOnFixtures) {
  for (const auto& g : {prism_graph(3), prism_graph(5), graph::complete_graph(4), graph::complete_graph(7),
                        circulant7()}) {
    const auto h = edge_polytope_facets(g);
    const auto v = edge_polytope(g);
    EXPECT_TRUE(lattice::same_facets(h, lattice::facets_bruteforce(v)));
    for (const auto& p : v.vertices())
      for (const auto& hs : h.halfspaces) EXPECT_LE(hs.evaluate(p), hs.offset);
  }
}

TEST(EdgePolytopeFacets, CompleteGraphOnFourUsesSingletons) {
  const auto sets = fundamental_stable_sets(graph::complete_graph(4));
  ASSERT_EQ(sets.size(), 4u);
  for (const auto& f : sets) {
    EXPECT_EQ(f.t.size(), 1);
    EXPECT_TRUE(f.covers_all);
  }
  EXPECT_EQ(edge_polytope_facets(graph::complete_graph(4)).halfspaces.size(), 8u);
}

TEST(EdgePolytopeFacets, MatchBruteForceOnAllSmallGraphs) {
  int checked = 0;
  for (int n = 4; n <= 6; ++n) {
    sweep::for_each_connected_graph(n, [&](const Graph& g) {
      if (!all_hold(odd_branch_hypotheses(g))) return true;
      EXPECT_TRUE(lattice::same_facets(edge_polytope_facets(g), lattice::facets_bruteforce(edge_polytope(g))))
          << io::to_json(g).dump();
      ++checked;
      return true;
    });
  }
  EXPECT_GT(checked, 1000);
}

TEST(EdgePolytopeFacets, RejectsGraphsOutsideHypotheses) {
  EXPECT_THROW(edge_polytope_facets(bowtie()), PreconditionError);
  EXPECT_THROW(edge_polytope_facets(graph::cycle_graph(6)), PreconditionError);
}

TEST(StandardTypePrism, FacetsHaveUnitOffsetsAfterProjectionAndTranslation) {
  const Graph g = prism_graph(3);
  const auto projected = lattice::project_onto_sum2_hyperplane(edge_polytope(g));
  const auto facets = lattice::facets_bruteforce(projected);
  const auto flat = lattice::translate_to_standard_type(facets, 3, IntVector(5, 1));
  EXPECT_EQ(flat.halfspaces.size(), edge_polytope_facets(g).halfspaces.size());
  for (const auto& hs : flat.halfspaces) EXPECT_EQ(hs.offset, 1);
  auto has = [&](IntVector a) {
    return std::find(flat.halfspaces.begin(), flat.halfspaces.end(), lattice::HalfSpace(a, 1)) != flat.halfspaces.end();
  };
  // z_i >= −1 for i < n, and z_n >= 0 becomes z_1 + ... + z_{n−1} <= 1.
  for (int i = 0; i < 5; ++i) {
    IntVector a(5, 0);
    a[i] = -1;
    EXPECT_TRUE(has(a));
  }
  EXPECT_TRUE(has(IntVector(5, 1)));
  // T = {1, 5} (n in N): z_1 + z_5 <= z_2 + z_3 + z_4 + z_6 becomes z_1 + z_5 <= 1.
  EXPECT_TRUE(has({1, 0, 0, 0, 1}));
  // T = {1, 6} (n in T): z_1 + z_6 <= z_2 + z_3 + z_4 + z_5 becomes −z_2 − z_3 − z_4 − z_5 <= 1.
  EXPECT_TRUE(has({0, -1, -1, -1, -1}));
  // Every fundamental stable set of this graph covers all vertices.
  for (const auto& f : fundamental_stable_sets(g)) EXPECT_TRUE(f.covers_all);
}

TEST(GorensteinOdd, Prism3) {
  const auto r = gorenstein_edge_odd(prism_graph(3), {.crosscheck = true});
  EXPECT_EQ(r.branch, Branch::odd);
  ASSERT_TRUE(r.verdict);
  EXPECT_TRUE(*r.verdict);
  ASSERT_TRUE(r.matching);
  EXPECT_TRUE(graph::is_perfect_matching(prism_graph(3), *r.matching));
  EXPECT_EQ(r.delta, 3);
  ASSERT_TRUE(r.geometric);
  EXPECT_EQ(r.geometric->delta, 3);
  EXPECT_EQ(r.geometric->witness, IntVector(6, 1));
  EXPECT_EQ(r.geometric_crosscheck(), true);
}

TEST(GorensteinOdd, CompleteGraphOnFour) {
  const auto r = gorenstein_edge_odd(graph::complete_graph(4), {.crosscheck = true});
  EXPECT_EQ(r.verdict, true);
  EXPECT_EQ(r.geometric_crosscheck(), true);
}

TEST(GorensteinOdd, BowtieIsOutsideHypotheses) {
  const auto r = gorenstein_edge_odd(bowtie());
  EXPECT_EQ(r.branch, Branch::none);
  EXPECT_FALSE(r.verdict);
  EXPECT_FALSE(r.hypotheses.at("deletion_components_non_bipartite"));
  EXPECT_EQ(gorenstein_edge(bowtie()).branch, Branch::none);
}

TEST(GorensteinOdd, SubdividedPrismFailsWithoutPerfectMatching) {
  const auto r = gorenstein_edge_odd(subdivided_prism5());
  EXPECT_EQ(r.branch, Branch::odd);
  EXPECT_EQ(r.verdict, false);
  EXPECT_FALSE(r.conditions.at("perfect_matching"));
  ASSERT_TRUE(r.violation);
}

TEST(GorensteinOdd, NonGorensteinCarriesWitness) {
  // K_4 plus a vertex 5 adjacent to 1, 2, 3 and a vertex 6 adjacent to 4, 5.
  const Graph g(6, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 6}, {5, 6}});
  const auto r = gorenstein_edge_odd(g, {.crosscheck = true});
  ASSERT_EQ(r.branch, Branch::odd);
  EXPECT_EQ(r.geometric_crosscheck(), true);
  if (!*r.verdict && r.conditions.at("perfect_matching")) {
    ASSERT_TRUE(r.violation);
    const auto& w = *r.violation;
    EXPECT_EQ(graph::neighborhood(g, w.t), w.neighbors);
    if (w.condition == "neighborhood")
      EXPECT_NE(w.neighbors.size(), w.t.size() + 1);
    else
      EXPECT_NE(2 * w.t.size(), g.order() - 2);
  }
}

TEST(GorensteinBipartite, Examples) {
  for (const auto& g : {graph::cycle_graph(4), graph::cycle_graph(6), graph::complete_bipartite_graph(3, 3)}) {
    const auto r = gorenstein_edge_bipartite(g, {.crosscheck = true});
    EXPECT_EQ(r.branch, Branch::bipartite);
    EXPECT_EQ(r.verdict, true);
    EXPECT_EQ(r.geometric_crosscheck(), true);
    EXPECT_EQ(r.geometric->delta, g.order() / 2);
  }
}

TEST(GorensteinBipartite, CycleOfLengthEightIsGorenstein) {
  // T = {1, 3} has N = {2, 4, 8} but its complement {5, 6, 7} is a path while
  // G_{T ∪ N} is connected: |N| = 3 = |T| + 1, so no violation arises.
  const Graph c8 = graph::cycle_graph(8);
  EXPECT_EQ(graph::neighborhood(c8, VertexSet{1, 3}), (VertexSet{2, 4, 8}));
  const auto r = gorenstein_edge_bipartite(c8, {.crosscheck = true});
  EXPECT_EQ(r.verdict, true);
  EXPECT_EQ(r.geometric_crosscheck(), true);
}

TEST(GorensteinBipartite, EvenPrismIsNotGorenstein) {
  const auto r = gorenstein_edge(prism_graph(4), {.crosscheck = true});
  EXPECT_EQ(r.branch, Branch::bipartite);
  EXPECT_EQ(r.verdict, false);
  ASSERT_TRUE(r.violation);
  EXPECT_EQ(r.violation->t, VertexSet{1});
  EXPECT_EQ(r.geometric_crosscheck(), true);
}

TEST(GorensteinBipartite, OutsideHypotheses) {
  EXPECT_EQ(gorenstein_edge_bipartite(graph::path_graph(4)).branch, Branch::none);
  EXPECT_EQ(gorenstein_edge_bipartite(graph::cycle_graph(5)).branch, Branch::none);
  EXPECT_EQ(gorenstein_edge_bipartite(graph::complete_graph(2)).branch, Branch::none);
}

TEST(DeciderOracleAgreement, AllConnectedGraphsUpToFive) {
  const auto s = sweep::run(5, analysis::PolytopeKind::edge, {}, [](const io::json&) {});
  EXPECT_GT(s.applicable, 0u);
  EXPECT_EQ(s.disagreements, 0u);
}

TEST(SpecialSimplexFromMatching, Examples) {
  const Graph p = prism_graph(3);
  const auto s = special_simplex_from_matching(p, spokes(3));
  EXPECT_EQ(s.q(), 3u);
  const auto v = edge_polytope(p);
  EXPECT_TRUE(lattice::is_special_simplex(v, edge_polytope_facets(p), s).special);

  const Graph c4 = graph::cycle_graph(4);
  const auto s4 = special_simplex_from_matching(c4, {{1, 2}, {3, 4}});
  EXPECT_TRUE(lattice::is_special_simplex(edge_polytope(c4), lattice::facets_bruteforce(edge_polytope(c4)), s4).special);

  const Graph c6 = graph::cycle_graph(6);
  const auto s6 = special_simplex_from_matching(c6, {{1, 2}, {3, 4}, {5, 6}});
  EXPECT_EQ(s6.q(), 3u);
  EXPECT_TRUE(lattice::is_special_simplex(edge_polytope(c6), lattice::facets_bruteforce(edge_polytope(c6)), s6).special);

  EXPECT_THROW(special_simplex_from_matching(c6, {{1, 2}, {3, 4}}), PreconditionError);
}

TEST(Prism, Construction) {
  const Graph p = prism_graph(3);
  EXPECT_EQ(p.order(), 6);
  EXPECT_EQ(p.edge_count(), 9u);
  EXPECT_TRUE(graph::odd_cycle_condition(p).holds);
  EXPECT_TRUE(graph::deletion_components_all_have_odd_cycle(p));
  EXPECT_THROW(prism_graph(2), InputError);
}

TEST(Prism, HVectorFormula) {
  EXPECT_EQ(prism_hvector_formula(3).coefficients, (std::vector<Int>{1, 3, 3, 1}));
  EXPECT_EQ(prism_hvector_formula(5).coefficients, (std::vector<Int>{1, 5, 10, 10, 5, 1}));
  for (int n : {3, 5, 7, 9}) {
    const auto hv = prism_hvector_formula(n);
    EXPECT_TRUE(ehrhart::is_symmetric(hv));
    EXPECT_TRUE(ehrhart::is_unimodal(hv));
  }
  EXPECT_THROW(prism_hvector_formula(4), InputError);
}

TEST(Prism, OddPrismsAreGorensteinWithFormulaHVector) {
  for (int n : {3, 5}) {
    const Graph g = prism_graph(n);
    EXPECT_EQ(gorenstein_edge_odd(g).verdict, true);
    EXPECT_EQ(ehrhart::h_star(edge_polytope_facets(g)), prism_hvector_formula(n));
  }
}

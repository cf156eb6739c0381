#include <gtest/gtest.h>

#include <sstream>

#include "gorenstein/edge_polytope.hpp"
#include "gorenstein/ehrhart.hpp"
#include "gorenstein/stable_polytope.hpp"
#include "gorenstein/sweep.hpp"

using namespace gorenstein;
using namespace gorenstein::ehrhart;
using graph::Graph;

namespace {

lattice::HPolytope triangle_h() { return {2, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 1}, 1}}, {}}; }
lattice::HPolytope square_h() { return {2, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 0}, 1}, {{0, 1}, 1}}, {}}; }

Graph two_triangles_joined_by_path() {
  return Graph(7, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {6, 7}});
}

lattice::HPolytope edge_facets(const Graph& g) { return lattice::facets_bruteforce(edge::edge_polytope(g)); }
lattice::HPolytope stable_facets(const Graph& g) { return lattice::facets_bruteforce(stable::stable_polytope(g)); }

// Reference counts and h*-vectors from tests/oracles/derived_values.json.
struct Reference {
  const char* name;
  lattice::HPolytope facets;
  std::vector<Int> counts;  // L(0), L(1), ...
  std::vector<Int> h;
};

std::vector<Reference> references() {
  return {
      {"edge C3", edge_facets(graph::cycle_graph(3)), {1, 3, 6, 10, 15}, {1}},
      {"edge K4", edge_facets(graph::complete_graph(4)), {1, 6, 19, 44}, {1, 2, 1}},
      {"edge C4", edge_facets(graph::cycle_graph(4)), {1, 4, 9}, {1, 1}},
      {"edge C6", edge_facets(graph::cycle_graph(6)), {1, 6, 21, 55, 120}, {1, 1, 1}},
      {"edge C8", edge_facets(graph::cycle_graph(8)), {1, 8, 36, 120, 329, 784, 1680}, {1, 1, 1, 1}},
      {"edge K33", edge_facets(graph::complete_bipartite_graph(3, 3)), {1, 9, 36, 100, 225}, {1, 4, 1}},
      {"edge prism3", edge_facets(edge::prism_graph(3)), {1, 9, 42, 138, 363, 819}, {1, 3, 3, 1}},
      {"edge triangles+path", edge_facets(two_triangles_joined_by_path()), {1, 8, 36, 121, 336, 812, 1764}, {1, 1, 1, 2}},
      {"stable 2K2", stable_facets(Graph(4, {{1, 2}, {3, 4}})), {1, 9, 36, 100, 225}, {1, 4, 1}},
      {"stable C4", stable_facets(graph::cycle_graph(4)), {1, 7, 26, 70, 155}, {1, 2, 1}},
      {"stable K3+pendant", stable_facets(Graph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}})), {1, 7, 25, 65, 140}, {1, 2}},
      {"stable P3", stable_facets(graph::path_graph(3)), {1, 5, 14, 30}, {1, 1}},
  };
}

}  // namespace

TEST(EhrhartCounts, SmallExamples) {
  EXPECT_EQ(ehrhart_counts(triangle_h(), 3), (std::vector<Int>{3, 6, 10}));
  EXPECT_EQ(ehrhart_counts(square_h(), 3), (std::vector<Int>{4, 9, 16}));
  EXPECT_EQ(ehrhart_counts(edge::edge_polytope_facets(edge::prism_graph(3)), 1), (std::vector<Int>{9}));
}

TEST(EhrhartCounts, MatchReferenceValues) {
  for (const auto& r : references()) {
    const auto counts = ehrhart_counts(r.facets, static_cast<Int>(r.counts.size()) - 1);
    EXPECT_EQ(counts, std::vector<Int>(r.counts.begin() + 1, r.counts.end())) << r.name;
  }
}

TEST(HStar, MatchReferenceValues) {
  for (const auto& r : references()) {
    const auto hv = h_star(r.facets);
    EXPECT_EQ(hv.coefficients, r.h) << r.name;
    EXPECT_EQ(hv.d, r.facets.dim()) << r.name;
  }
}

TEST(HStar, SimpleCases) {
  EXPECT_EQ(h_star(triangle_h()).coefficients, (std::vector<Int>{1}));
  const lattice::HPolytope point{2, {}, {{{1, 0}, 3}, {{0, 1}, 4}}};
  const auto hv = h_star(point);
  EXPECT_EQ(hv.coefficients, (std::vector<Int>{1}));
  EXPECT_EQ(hv.d, 0);
  EXPECT_THROW(h_star_from_counts({1, 2}, 2), PreconditionError);
}

TEST(HStar, NegativeEntriesAreReported) {
  // Counts 1, 1, 5 are not those of a lattice polygon.
  const auto hv = h_star_from_counts({1, 1, 5}, 2);
  EXPECT_FALSE(is_nonnegative(hv));
}

TEST(HStar, RoundTripReproducesCounts) {
  for (const auto& r : references()) {
    const auto hv = h_star(r.facets);
    EXPECT_EQ(recompose_counts(hv, static_cast<Int>(r.counts.size()) - 1), r.counts) << r.name;
    std::vector<Int> more{1};
    for (Int c : ehrhart_counts(r.facets, hv.d + 2)) more.push_back(c);
    EXPECT_EQ(recompose_counts(hv, hv.d + 2), more) << r.name;
  }
}

TEST(HStar, SumEqualsNormalizedVolume) {
  for (const auto& r : references()) {
    if (r.facets.dim() > 5) continue;
    std::vector<Int> counts{1};
    for (Int c : ehrhart_counts(r.facets, r.facets.dim())) counts.push_back(c);
    Int sum = 0;
    for (Int h : h_star(r.facets).coefficients) sum += h;
    EXPECT_EQ(sum, normalized_volume_from_counts(counts, r.facets.dim())) << r.name;
  }
}

TEST(Predicates, Examples) {
  const HVector a{{1, 3, 3, 1}, 5};
  EXPECT_TRUE(is_nonnegative(a));
  EXPECT_TRUE(is_symmetric(a));
  EXPECT_TRUE(is_unimodal(a));
  const HVector b{{1, 0, 1}, 3};
  EXPECT_TRUE(is_symmetric(b));
  EXPECT_FALSE(is_unimodal(b));
  EXPECT_FALSE(is_symmetric(HVector{{1, 2, 1, 1}, 4}));
}

TEST(SemigroupCount, Examples) {
  const Graph c3 = graph::cycle_graph(3);
  EXPECT_EQ(semigroup_count(c3, 1), 3u);
  EXPECT_EQ(semigroup_count(c3, 2), 6u);
  EXPECT_EQ(semigroup_count(c3, 2), static_cast<std::uint64_t>(ehrhart_counts(edge_facets(c3), 2)[1]));
  EXPECT_EQ(semigroup_count(edge::prism_graph(3), 1), 9u);
}

TEST(SemigroupCount, GapForTrianglesJoinedByPath) {
  const Graph g = two_triangles_joined_by_path();
  const auto counts = ehrhart_counts(edge_facets(g), 3);
  EXPECT_EQ(semigroup_count(g, 1), static_cast<std::uint64_t>(counts[0]));
  EXPECT_EQ(semigroup_count(g, 2), static_cast<std::uint64_t>(counts[1]));
  EXPECT_EQ(semigroup_count(g, 3), 120u);
  EXPECT_EQ(counts[2], 121);
}

TEST(SemigroupCount, FillsDilatesUnderOddCycleCondition) {
  for (int n = 2; n <= 5; ++n) {
    sweep::for_each_connected_graph(n, [&](const Graph& g) {
      if (!graph::odd_cycle_condition(g).holds || g.edge_count() < 2) return true;
      const auto counts = ehrhart_counts(edge_facets(g), 3);
      for (Int t = 1; t <= 3; ++t)
        EXPECT_EQ(semigroup_count(g, t), static_cast<std::uint64_t>(counts[t - 1])) << io::to_json(g).dump();
      return true;
    });
  }
}

TEST(Symmetry, GorensteinFixturesHaveSymmetricHVectors) {
  for (const auto& g : {edge::prism_graph(3), graph::complete_graph(4), graph::cycle_graph(6)}) {
    ASSERT_EQ(edge::gorenstein_edge(g).verdict, true);
    EXPECT_TRUE(is_symmetric(h_star(edge_facets(g))));
  }
}

TEST(Csv, WritesHeaderAndRows) {
  std::ostringstream os;
  write_counts_csv(os, {1, 3, 6});
  EXPECT_EQ(os.str(), "t,L\n0,1\n1,3\n2,6\n");
}

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gorenstein/arith.hpp"
#include "gorenstein/graph.hpp"
#include "gorenstein/polytope.hpp"

namespace gorenstein {

/// Which Gorenstein criterion applies: edge polytope of a non-bipartite
/// graph, edge polytope of a 2-connected bipartite graph, stable polytope of
/// a perfect graph, or none.
enum class Branch { odd, bipartite, stable, none };

inline const char* to_string(Branch b) {
  switch (b) {
    case Branch::odd:
      return "odd";
    case Branch::bipartite:
      return "bipartite";
    case Branch::stable:
      return "stable";
    case Branch::none:
      return "none";
  }
  return "none";
}

/// A stable set T violating a neighborhood-size condition.
struct StableSetWitness {
  graph::VertexSet t;
  graph::VertexSet neighbors;
  /// "neighborhood" (|N(G;T)| != |T| + 1) or "cover" (|T| != n/2 − 1).
  std::string condition;
};

struct GeometricCrosscheck {
  Int delta = 0;
  IntVector witness;
  bool dual_integral = false;
};

struct GorensteinReport {
  Branch branch = Branch::none;
  std::map<std::string, bool> hypotheses;
  /// Absent when no branch applies.
  std::optional<bool> verdict;
  /// Individual conditions of the applicable criterion, by name.
  std::map<std::string, bool> conditions;
  std::optional<graph::Matching> matching;
  std::optional<StableSetWitness> violation;
  std::vector<int> clique_sizes;  // sorted descending, stable branch only
  std::optional<Int> delta;
  std::optional<lattice::SpecialSimplex> special_simplex;
  std::optional<GeometricCrosscheck> geometric;
  bool perfection_asserted = false;

  /// Whether the geometric test, when run, agrees with the verdict.
  std::optional<bool> geometric_crosscheck() const {
    if (!geometric || !verdict) return std::nullopt;
    return geometric->dual_integral == *verdict;
  }
};

struct DeciderOptions {
  bool crosscheck = false;
  bool assert_perfect = false;
  int perfection_bound = graph::kDefaultPerfectionBound;
  std::uint64_t facet_budget = lattice::kDefaultFacetBudget;
  std::uint64_t node_budget = 100'000'000;
};

}  // namespace gorenstein

#pragma once

// Stable polytopes Q_G = conv{ρ(W) : W stable}: construction, the clique
// facets of perfect graphs, the Gorenstein criterion for perfect graphs, the
// special simplex built from a minimum coloring, and chain polytopes.

#include <algorithm>
#include <string>
#include <vector>

#include "gorenstein/geometric.hpp"
#include "gorenstein/graph.hpp"
#include "gorenstein/polytope.hpp"
#include "gorenstein/report.hpp"

namespace gorenstein::stable {

using graph::Graph;
using graph::VertexSet;

inline IntVector indicator(int n, VertexSet w) {
  IntVector v(static_cast<std::size_t>(n), 0);
  for (auto i : w.members()) v[i - 1] = 1;
  return v;
}

/// Vertices ρ(W) in lexicographic order of W, starting with ρ(∅) = 0.
inline lattice::VPolytope stable_polytope(const Graph& g) {
  std::vector<IntVector> pts;
  graph::for_each_stable_set(g, [&](VertexSet w) {
    pts.push_back(indicator(g.order(), w));
    return true;
  });
  return lattice::VPolytope(g.order(), std::move(pts));
}

/// Throws unless g is known to be perfect (or perfection is asserted).
inline void require_perfect(const Graph& g, const DeciderOptions& opt) {
  if (opt.assert_perfect) return;
  if (!graph::is_perfect(g, opt.perfection_bound)) throw PreconditionError("the graph is not perfect");
}

/// z_i >= 0 for every i and Σ_{i∈W} z_i <= 1 for every maximal clique W.
inline lattice::HPolytope stable_polytope_facets_perfect(const Graph& g, const DeciderOptions& opt = {}) {
  require_perfect(g, opt);
  const int n = g.order();
  lattice::HPolytope h{n, {}, {}};
  for (int i = 0; i < n; ++i) {
    IntVector a(static_cast<std::size_t>(n), 0);
    a[i] = -1;
    h.halfspaces.emplace_back(std::move(a), 0);
  }
  for (VertexSet w : graph::maximal_cliques(g)) h.halfspaces.emplace_back(indicator(n, w), 1);
  return h;
}

struct ColoringSimplex {
  lattice::SpecialSimplex simplex;
  /// W_0 = {i_0}, W_1, ..., W_q; a partition of [n].
  std::vector<VertexSet> parts;
};

/// For a perfect graph whose maximal cliques all have q vertices: a proper
/// q-coloring with classes W'_1..W'_q; the least class with two or more
/// vertices loses its least vertex i_0, giving W_0 = {i_0}, W_1, ..., W_q.
/// The simplex on ρ(W_0), ..., ρ(W_q) is special in Q_G.
inline ColoringSimplex special_simplex_coloring(const Graph& g, const DeciderOptions& opt = {}) {
  require_perfect(g, opt);
  const int n = g.order();
  if (n == 0) throw PreconditionError("the stable polytope of the empty graph is a point");
  const auto cliques = graph::maximal_cliques(g);
  const int q = cliques.front().size();
  for (VertexSet w : cliques)
    if (w.size() != q) throw PreconditionError("maximal cliques do not all have the same size");
  if (q == n) throw PreconditionError("the stable polytope is a simplex");
  const auto coloring = graph::proper_coloring(g, q);
  if (!coloring) throw PreconditionError("no proper coloring with clique-number colors; the graph is not perfect");
  std::vector<VertexSet> classes(static_cast<std::size_t>(q));
  for (int v = 1; v <= n; ++v) classes[(*coloring)[v - 1] - 1].insert(v);
  auto split = std::find_if(classes.begin(), classes.end(), [](VertexSet c) { return c.size() >= 2; });
  if (split == classes.end()) throw PreconditionError("no color class can be split; the stable polytope is a simplex");
  const auto i0 = split->least();
  split->erase(i0);
  ColoringSimplex out;
  out.parts.push_back(VertexSet{i0});
  out.parts.insert(out.parts.end(), classes.begin(), classes.end());

  const auto p = stable_polytope(g);
  IntVector total(static_cast<std::size_t>(n), 0);
  for (VertexSet w : out.parts) {
    const IntVector v = indicator(n, w);
    for (int i = 0; i < n; ++i) total[i] += v[i];
    out.simplex.vertex_indices.push_back(*p.index_of(v));
  }
  if (total != IntVector(static_cast<std::size_t>(n), 1))
    throw PreconditionError("color classes do not partition the vertex set");
  return out;
}

inline lattice::SpecialSimplex special_simplex_from_coloring(const Graph& g, const DeciderOptions& opt = {}) {
  return special_simplex_coloring(g, opt).simplex;
}

/// Q_G of a perfect graph is Gorenstein iff all maximal cliques have the same
/// size q; then δ = q + 1.
inline GorensteinReport gorenstein_stable(const Graph& g, const DeciderOptions& opt = {}) {
  GorensteinReport r;
  r.perfection_asserted = opt.assert_perfect;
  const bool perfect = opt.assert_perfect || graph::is_perfect(g, opt.perfection_bound);
  r.hypotheses["perfect"] = perfect;
  if (!perfect || g.order() == 0) return r;
  r.branch = Branch::stable;
  for (VertexSet w : graph::maximal_cliques(g)) r.clique_sizes.push_back(w.size());
  std::sort(r.clique_sizes.begin(), r.clique_sizes.end(), std::greater<>());
  const bool uniform = r.clique_sizes.front() == r.clique_sizes.back();
  r.conditions["uniform_clique_size"] = uniform;
  r.verdict = uniform;
  r.delta = r.clique_sizes.front() + 1;
  if (uniform && r.clique_sizes.front() < g.order()) r.special_simplex = special_simplex_from_coloring(g, opt);
  if (opt.crosscheck) {
    const auto geo = lattice::geometric_gorenstein(stable_polytope(g), opt.facet_budget, opt.node_budget);
    r.geometric = GeometricCrosscheck{geo.delta, geo.witness, geo.dual_integral};
  }
  return r;
}

/// The chain polytope of a poset, i.e. the stable polytope of its
/// comparability graph.
inline lattice::VPolytope chain_polytope(const graph::Poset& p) { return stable_polytope(graph::comparability_graph(p)); }

}  // namespace gorenstein::stable

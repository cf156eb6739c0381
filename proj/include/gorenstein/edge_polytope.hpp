#pragma once

// Edge polytopes P_G = conv{e_i + e_j : {i,j} ∈ E(G)}: construction, facets
// for the non-bipartite case, the two Gorenstein criteria (non-bipartite with
// the odd cycle condition, and 2-connected bipartite), the special simplex
// spanned by a perfect matching, and the prism family.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "gorenstein/ehrhart.hpp"
#include "gorenstein/geometric.hpp"
#include "gorenstein/graph.hpp"
#include "gorenstein/polytope.hpp"
#include "gorenstein/report.hpp"

namespace gorenstein::edge {

using graph::Edge;
using graph::Graph;
using graph::Matching;
using graph::VertexSet;

inline IntVector edge_vector(int n, const Edge& e) {
  IntVector v(static_cast<std::size_t>(n), 0);
  v[e.u - 1] = 1;
  v[e.v - 1] = 1;
  return v;
}

/// Vertices ρ(e) in the sorted edge order of g.
inline lattice::VPolytope edge_polytope(const Graph& g) {
  if (g.edge_count() == 0) throw PreconditionError("the edge polytope of an edgeless graph is empty");
  std::vector<IntVector> pts;
  for (const Edge& e : g.edges()) pts.push_back(edge_vector(g.order(), e));
  return lattice::VPolytope(g.order(), std::move(pts));
}

inline std::map<std::string, bool> odd_branch_hypotheses(const Graph& g) {
  std::map<std::string, bool> h;
  h["connected"] = graph::is_connected(g);
  h["non_bipartite"] = h["connected"] && !graph::bipartition(g).has_value();
  h["odd_cycle_condition"] = h["connected"] && graph::odd_cycle_condition(g).holds;
  h["deletion_components_non_bipartite"] = g.order() > 0 && graph::deletion_components_all_have_odd_cycle(g);
  return h;
}

inline std::map<std::string, bool> bipartite_branch_hypotheses(const Graph& g) {
  std::map<std::string, bool> h;
  h["connected"] = graph::is_connected(g);
  h["bipartite"] = h["connected"] && graph::bipartition(g).has_value();
  h["two_connected"] = graph::is_two_connected(g);
  return h;
}

inline bool all_hold(const std::map<std::string, bool>& h) {
  for (const auto& [name, ok] : h)
    if (!ok) return false;
  return true;
}

inline std::string failing(const std::map<std::string, bool>& h) {
  std::string out;
  for (const auto& [name, ok] : h)
    if (!ok) out += (out.empty() ? "" : ", ") + name;
  return out;
}

/// A nonempty stable set T whose induced bipartite graph on T ∪ N(G;T) is
/// connected, and such that T ∪ N(G;T) = [n] or every component of the rest
/// of G is non-bipartite.
struct FundamentalSet {
  VertexSet t;
  VertexSet neighbors;
  bool covers_all = false;
};

/// All fundamental stable sets, in lexicographic order of T.
inline std::vector<FundamentalSet> fundamental_stable_sets(const Graph& g) {
  std::vector<FundamentalSet> out;
  graph::for_each_stable_set(g, [&](VertexSet t) {
    if (t.empty() || !graph::induced_bipartite_connected(g, t)) return true;
    const VertexSet nb = graph::neighborhood(g, t);
    const VertexSet rest = g.vertices() - (t | nb);
    bool ok = true;
    for (VertexSet c : graph::components(g, rest))
      if (graph::two_coloring(g, c)) ok = false;
    if (ok) out.push_back({t, nb, rest.empty()});
    return true;
  });
  std::sort(out.begin(), out.end(),
            [](const FundamentalSet& a, const FundamentalSet& b) { return graph::lexicographic_less(a.t, b.t); });
  return out;
}

/// Facets of P_G for a connected graph with the odd cycle condition whose
/// vertex deletions leave only non-bipartite components: z_i >= 0 for every
/// i, Σ_{T} z <= Σ_{N(G;T)} z for every fundamental stable set T, and the
/// equation Σ z = 2.
inline lattice::HPolytope edge_polytope_facets(const Graph& g) {
  const auto hyp = odd_branch_hypotheses(g);
  if (!all_hold(hyp)) throw PreconditionError("combinatorial facets need hypotheses that fail: " + failing(hyp));
  const int n = g.order();
  lattice::HPolytope h{n, {}, {{IntVector(static_cast<std::size_t>(n), 1), 2}}};
  for (int i = 0; i < n; ++i) {
    IntVector a(static_cast<std::size_t>(n), 0);
    a[i] = -1;
    h.halfspaces.emplace_back(std::move(a), 0);
  }
  for (const auto& f : fundamental_stable_sets(g)) {
    IntVector a(static_cast<std::size_t>(n), 0);
    for (auto v : f.t.members()) a[v - 1] = 1;
    for (auto v : f.neighbors.members()) a[v - 1] = -1;
    h.halfspaces.emplace_back(std::move(a), 0);
  }
  return h;
}

/// The simplex on ρ(e), e ∈ m, as indices into edge_polytope(g).
inline lattice::SpecialSimplex special_simplex_from_matching(const Graph& g, const Matching& m) {
  if (!graph::is_perfect_matching(g, m)) throw PreconditionError("the matching is not a perfect matching of the graph");
  const auto p = edge_polytope(g);
  lattice::SpecialSimplex s;
  std::vector<IntVector> pts;
  for (const Edge& e : m) {
    auto idx = p.index_of(edge_vector(g.order(), e));
    s.vertex_indices.push_back(*idx);
    pts.push_back(edge_vector(g.order(), e));
  }
  if (!lattice::affinely_independent(pts)) throw PreconditionError("matching edges are affinely dependent");
  return s;
}

namespace detail {

inline void attach_crosscheck(const Graph& g, const DeciderOptions& opt, GorensteinReport& r) {
  if (!opt.crosscheck) return;
  const auto geo = lattice::geometric_gorenstein(edge_polytope(g), opt.facet_budget, opt.node_budget);
  r.geometric = GeometricCrosscheck{geo.delta, geo.witness, geo.dual_integral};
}

inline void attach_matching(const Graph& g, GorensteinReport& r) {
  const auto m = graph::perfect_matching(g);
  r.conditions["perfect_matching"] = m.has_value();
  if (m) r.matching = *m;
}

inline void finish_positive(const Graph& g, GorensteinReport& r) {
  if (!*r.verdict) return;
  r.delta = g.order() / 2;
  r.special_simplex = special_simplex_from_matching(g, *r.matching);
}

}  // namespace detail

/// The criterion for connected non-bipartite graphs with the odd cycle
/// condition whose vertex deletions leave non-bipartite components: P_G is
/// Gorenstein iff G has a perfect matching, |N(G;T)| = |T| + 1 for every
/// fundamental T with T ∪ N(G;T) ≠ [n], and |T| = n/2 − 1 for every
/// fundamental T with T ∪ N(G;T) = [n].
inline GorensteinReport gorenstein_edge_odd(const Graph& g, const DeciderOptions& opt = {}) {
  GorensteinReport r;
  r.hypotheses = odd_branch_hypotheses(g);
  if (!all_hold(r.hypotheses)) return r;
  r.branch = Branch::odd;
  detail::attach_matching(g, r);
  bool neighborhood_ok = true;
  bool cover_ok = true;
  for (const auto& f : fundamental_stable_sets(g)) {
    const int t = f.t.size();
    const int nb = f.neighbors.size();
    if (f.covers_all) {
      if (2 * t != g.order() - 2 && cover_ok) {
        cover_ok = false;
        if (!r.violation) r.violation = StableSetWitness{f.t, f.neighbors, "cover"};
      }
    } else if (nb != t + 1 && neighborhood_ok) {
      neighborhood_ok = false;
      if (!r.violation) r.violation = StableSetWitness{f.t, f.neighbors, "neighborhood"};
    }
  }
  r.conditions["neighborhood_size"] = neighborhood_ok;
  r.conditions["cover_size"] = cover_ok;
  r.verdict = r.conditions["perfect_matching"] && neighborhood_ok && cover_ok;
  detail::finish_positive(g, r);
  detail::attach_crosscheck(g, opt, r);
  return r;
}

/// The criterion for 2-connected bipartite graphs on V_1 ∪ V_2 (V_1 holds
/// vertex 1): P_G is Gorenstein iff G has a perfect matching and
/// |N(G;T)| = |T| + 1 for every nonempty T ⊂ V_1 such that G_{T ∪ N(G;T)} is
/// connected and G_{[n] \ (T ∪ N(G;T))} is connected with at least one edge.
inline GorensteinReport gorenstein_edge_bipartite(const Graph& g, const DeciderOptions& opt = {}) {
  GorensteinReport r;
  r.hypotheses = bipartite_branch_hypotheses(g);
  if (!all_hold(r.hypotheses)) return r;
  r.branch = Branch::bipartite;
  detail::attach_matching(g, r);
  const VertexSet v1 = graph::bipartition(g)->first;
  const auto members = v1.members();
  std::vector<VertexSet> candidates;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << members.size()); ++mask) {
    VertexSet t;
    for (std::size_t k = 0; k < members.size(); ++k)
      if (mask >> k & 1) t.insert(members[k]);
    candidates.push_back(t);
  }
  std::sort(candidates.begin(), candidates.end(), graph::lexicographic_less);
  bool neighborhood_ok = true;
  for (VertexSet t : candidates) {
    const VertexSet nb = graph::neighborhood(g, t);
    const VertexSet rest = g.vertices() - (t | nb);
    if (!graph::is_connected(g, t | nb) || rest.empty() || !graph::is_connected(g, rest)) continue;
    bool has_edge = false;
    for (auto v : rest.members()) has_edge = has_edge || g.neighbors(v).intersects(rest);
    if (!has_edge) continue;
    if (nb.size() != t.size() + 1) {
      neighborhood_ok = false;
      r.violation = StableSetWitness{t, nb, "neighborhood"};
      break;
    }
  }
  r.conditions["neighborhood_size"] = neighborhood_ok;
  r.verdict = r.conditions["perfect_matching"] && neighborhood_ok;
  detail::finish_positive(g, r);
  detail::attach_crosscheck(g, opt, r);
  return r;
}

/// Runs whichever criterion applies; branch none when neither does.
inline GorensteinReport gorenstein_edge(const Graph& g, const DeciderOptions& opt = {}) {
  if (g.order() > 0 && graph::is_connected(g) && graph::bipartition(g)) {
    auto r = gorenstein_edge_bipartite(g, opt);
    if (r.branch != Branch::none) return r;
    auto odd = odd_branch_hypotheses(g);
    r.hypotheses.insert(odd.begin(), odd.end());
    return r;
  }
  auto r = gorenstein_edge_odd(g, opt);
  if (r.branch != Branch::none) return r;
  auto bip = bipartite_branch_hypotheses(g);
  r.hypotheses.insert(bip.begin(), bip.end());
  return r;
}

/// Two n-cycles 1..n and n+1..2n joined by the spokes {i, n+i}.
inline Graph prism_graph(int n) {
  if (n < 3) throw InputError("prism needs n >= 3");
  if (n > graph::kMaxVertices / 2) throw InputError("prism too large");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    const int j = i % n + 1;
    edges.emplace_back(i, j);
    edges.emplace_back(i + n, j + n);
    edges.emplace_back(i, i + n);
  }
  return Graph(2 * n, std::move(edges));
}

/// (C(n,0), C(n,1), ..., C(n,n)) with d = 2n − 1.
inline ehrhart::HVector prism_hvector_formula(int n) {
  if (n < 3 || n % 2 == 0) throw InputError("the prism h-vector formula needs odd n >= 3");
  ehrhart::HVector hv{{}, 2 * n - 1};
  for (int k = 0; k <= n; ++k) hv.coefficients.push_back(binomial(n, k));
  return hv;
}

}  // namespace gorenstein::edge

#pragma once

// Finite simple graphs on [n] = {1, ..., n}, posets, and the combinatorial
// predicates the Gorenstein criteria quantify over. Vertex sets are 64-bit
// masks, so graphs are limited to 64 vertices; every search below is
// exponential and meant for desk-scale inputs anyway.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gorenstein/error.hpp"

namespace gorenstein::graph {

using Vertex = int;

inline constexpr int kMaxVertices = 64;

/// A subset of [n], stored as a bit mask (vertex i is bit i-1).
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }

  /// The full vertex set {1, ..., n}.
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet of(const std::vector<Vertex>& members) {
    VertexSet s;
    for (Vertex v : members) s.insert(v);
    return s;
  }

  constexpr bool contains(Vertex v) const { return (bits_ >> (v - 1)) & 1U; }
  void insert(Vertex v) {
    if (v < 1 || v > kMaxVertices) throw InputError("vertex label out of range: " + std::to_string(v));
    bits_ |= std::uint64_t{1} << (v - 1);
  }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << (v - 1)); }

  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  /// Smallest member; undefined on the empty set.
  constexpr Vertex least() const { return std::countr_zero(bits_) + 1; }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;


 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted member lists.
inline bool lexicographic_less(VertexSet a, VertexSet b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

/// An unordered pair {u, v}, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  VertexSet ends() const { return VertexSet{u, v}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using Matching = std::vector<Edge>;

class Graph {
 public:
  Graph() = default;

  /// Validates labels (1..n), rejects loops and duplicate edges.
  Graph(int n, std::vector<Edge> edges) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
    if (n < 0 || n > kMaxVertices)
      throw InputError("vertex count must be in 0.." + std::to_string(kMaxVertices) + ", got " + std::to_string(n));
    for (const Edge& e : edges) {
      if (e.u < 1 || e.v > n)
        throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} has an endpoint outside 1.." +
                         std::to_string(n));
      if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
      if (adjacent(e.u, e.v))
        throw InputError("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
      adj_[e.u - 1] |= std::uint64_t{1} << (e.v - 1);
      adj_[e.v - 1] |= std::uint64_t{1} << (e.u - 1);
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
  }

  int order() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  VertexSet vertices() const { return VertexSet::range(n_); }

  bool adjacent(Vertex a, Vertex b) const { return (adj_[a - 1] >> (b - 1)) & 1U; }
  VertexSet neighbors(Vertex v) const { return VertexSet(adj_[v - 1]); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
  return Graph(n, std::move(edges));
}

inline Graph complete_graph(int n) {
  if (n < 1) throw InputError("a complete graph needs at least 1 vertex");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

/// K_{a,b} with sides 1..a and a+1..a+b.
inline Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw InputError("both sides of a complete bipartite graph need a vertex");
  std::vector<Edge> edges;
  for (int i = 1; i <= a; ++i)
    for (int j = a + 1; j <= a + b; ++j) edges.emplace_back(i, j);
  return Graph(a + b, std::move(edges));
}

/// Finite poset on [n]; the strict order is transitively closed on construction.
class Poset {
 public:
  Poset(int n, const std::vector<std::pair<int, int>>& less_than)
      : n_(n), above_(static_cast<std::size_t>(std::max(n, 0)), 0) {
    if (n < 0 || n > kMaxVertices) throw InputError("poset size out of range");
    for (auto [i, j] : less_than) {
      if (i < 1 || i > n || j < 1 || j > n)
        throw InputError("relation " + std::to_string(i) + "<" + std::to_string(j) + " outside 1.." + std::to_string(n));
      if (i == j) throw InputError("relation " + std::to_string(i) + "<" + std::to_string(i) + " is reflexive");
      above_[i - 1] |= std::uint64_t{1} << (j - 1);
    }
    // Warshall closure on bit rows.
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if ((above_[i] >> k) & 1U) above_[i] |= above_[k];
    for (int i = 0; i < n; ++i)
      if ((above_[i] >> i) & 1U) throw InputError("relations contain a cycle through element " + std::to_string(i + 1));
  }

  int size() const { return n_; }
  bool less(int i, int j) const { return (above_[i - 1] >> (j - 1)) & 1U; }
  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }

  /// The closed relation as sorted pairs (i, j) with i < j in the poset.
  std::vector<std::pair<int, int>> relations() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j)
        if (less(i, j)) out.emplace_back(i, j);
    return out;
  }

 private:
  int n_;
  std::vector<std::uint64_t> above_;
};

inline Graph comparability_graph(const Poset& p) {
  std::vector<Edge> edges;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p.comparable(i, j)) edges.emplace_back(i, j);
  return Graph(p.size(), std::move(edges));
}

// ---------------------------------------------------------------------------
// Neighborhoods, stable sets, cliques

inline VertexSet neighborhood(const Graph& g, VertexSet t) {
  VertexSet out;
  for (Vertex v : t.members()) out = out | g.neighbors(v);
  return out;
}

inline bool is_stable(const Graph& g, VertexSet w) {
  for (Vertex v : w.members())
    if (g.neighbors(v).intersects(w)) return false;
  return true;
}

inline bool is_clique(const Graph& g, VertexSet w) {
  for (Vertex v : w.members())
    if (!(w - VertexSet{v}).is_subset_of(g.neighbors(v))) return false;
  return true;
}

namespace detail {

// Lexicographic stable-set generation: extend `current` by vertices > last.
inline bool stable_sets_from(const Graph& g, VertexSet current, VertexSet forbidden, Vertex next,
                             const std::function<bool(VertexSet)>& visit) {
  if (!visit(current)) return false;
  for (Vertex v = next; v <= g.order(); ++v) {
    if (forbidden.contains(v)) continue;
    VertexSet extended = current | VertexSet{v};
    if (!stable_sets_from(g, extended, forbidden | g.neighbors(v), v + 1, visit)) return false;
  }
  return true;
}

}  // namespace detail

/// Visits every stable set (the empty set first) in lexicographic order of
/// sorted member lists. The visitor returns false to stop early.
inline void for_each_stable_set(const Graph& g, const std::function<bool(VertexSet)>& visit) {
  detail::stable_sets_from(g, VertexSet{}, VertexSet{}, 1, visit);
}

inline std::vector<VertexSet> stable_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for_each_stable_set(g, [&](VertexSet s) {
    out.push_back(s);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Connectivity and bipartiteness on induced subgraphs (given by a vertex mask)

/// Connected components of the induced subgraph G_support, ordered by least vertex.
inline std::vector<VertexSet> components(const Graph& g, VertexSet support) {
  std::vector<VertexSet> out;
  VertexSet left = support;
  while (!left.empty()) {
    VertexSet comp{left.least()};
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier.members()) next = next | (g.neighbors(v) & support);
      frontier = next - comp;
      comp = comp | frontier;
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

inline bool is_connected(const Graph& g, VertexSet support) {
  return !support.empty() && components(g, support).size() == 1;
}

inline bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

/// G is 2-connected if n >= 3 and G and every G_{[n]\{i}} are connected.
inline bool is_two_connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (Vertex i = 1; i <= g.order(); ++i)
    if (!is_connected(g, g.vertices() - VertexSet{i})) return false;
  return true;
}

/// 2-coloring of the induced subgraph on a connected support, or nullopt.
/// The first class contains the least vertex of the support.
inline std::optional<std::pair<VertexSet, VertexSet>> two_coloring(const Graph& g, VertexSet support) {
  // BFS layers alternate between the classes.
  VertexSet even{support.least()};
  VertexSet odd;
  VertexSet seen = even;
  VertexSet frontier = even;
  for (bool to_odd = true; !frontier.empty(); to_odd = !to_odd) {
    frontier = (neighborhood(g, frontier) & support) - seen;
    seen = seen | frontier;
    (to_odd ? odd : even) = (to_odd ? odd : even) | frontier;
  }
  if (!is_stable(g, even) || !is_stable(g, odd)) return std::nullopt;
  return std::make_pair(even, odd);
}

inline bool is_bipartite(const Graph& g, VertexSet support) {
  for (VertexSet c : components(g, support))
    if (!two_coloring(g, c)) return false;
  return true;
}

/// The classes (V1, V2) of a connected bipartite graph, V1 containing vertex 1.
inline std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("bipartition requires a connected graph");
  return two_coloring(g, g.vertices());
}

/// The bipartite graph induced by a nonempty stable set T: vertices
/// T ∪ N(G;T), edges of G between T and N(G;T). Labels are those of G.
struct BipartiteSubgraph {
  VertexSet stable_side;
  VertexSet neighbor_side;
  Graph graph;

  VertexSet support() const { return stable_side | neighbor_side; }
  bool connected() const { return is_connected(graph, support()); }
};

inline BipartiteSubgraph induced_bipartite_graph(const Graph& g, VertexSet t) {
  if (t.empty()) throw PreconditionError("induced bipartite graph needs a nonempty stable set");
  if (!is_stable(g, t)) throw PreconditionError("induced bipartite graph needs a stable set");
  VertexSet nb = neighborhood(g, t);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if ((t.contains(e.u) && nb.contains(e.v)) || (t.contains(e.v) && nb.contains(e.u))) edges.push_back(e);
  return {t, nb, Graph(g.order(), std::move(edges))};
}

/// Connectivity of the bipartite graph induced by T without materializing it.
/// Since T is stable, every edge of G_{T ∪ N(T)} between T and N(T) is an
/// edge of the induced bipartite graph, but edges inside N(T) are not, so the
/// component search only walks T–N(T) edges.
inline bool induced_bipartite_connected(const Graph& g, VertexSet t) {
  VertexSet nb = neighborhood(g, t);
  VertexSet support = t | nb;
  VertexSet comp{support.least()};
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier.members()) next = next | (g.neighbors(v) & (t.contains(v) ? nb : t));
    frontier = next - comp;
    comp = comp | frontier;
  }
  return comp == support;
}

// ---------------------------------------------------------------------------
// Cycles

/// A cycle as its vertex sequence (closing edge implied).
struct Cycle {
  std::vector<Vertex> order;

  VertexSet vertex_set() const { return VertexSet::of(order); }
  int length() const { return static_cast<int>(order.size()); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

namespace detail {

inline void extend_chordless(const Graph& g, std::vector<Vertex>& path, VertexSet on_path, VertexSet interior_nb,
                             std::vector<Cycle>& out) {
  const Vertex s = path.front();
  const Vertex last = path.back();
  for (Vertex w : (g.neighbors(last) - on_path).members()) {
    if (w < s) continue;
    if (interior_nb.contains(w)) continue;  // chord to an interior vertex
    if (g.adjacent(w, s)) {
      // Closing here; extending further would make {s, w} a chord.
      if (path.size() >= 2 && path[1] < w) {
        path.push_back(w);
        out.push_back(Cycle{path});
        path.pop_back();
      }
      continue;
    }
    // `last` becomes interior once w is appended.
    VertexSet next_interior = interior_nb | g.neighbors(last);
    path.push_back(w);
    extend_chordless(g, path, on_path | VertexSet{w}, next_interior, out);
    path.pop_back();
  }
}

}  // namespace detail

/// All chordless (induced) cycles of length >= 3, each listed once: the
/// sequence starts at its least vertex and its second vertex is smaller than
/// its last.
inline std::vector<Cycle> chordless_cycles(const Graph& g) {
  std::vector<Cycle> out;
  for (Vertex s = 1; s <= g.order(); ++s) {
    for (Vertex p1 : g.neighbors(s).members()) {
      if (p1 < s) continue;
      std::vector<Vertex> path{s, p1};
      // Vertices adjacent to interior path vertices; p1 is not interior yet.
      detail::extend_chordless(g, path, VertexSet{s, p1}, VertexSet{}, out);
    }
  }
  return out;
}

inline std::vector<Cycle> chordless_odd_cycles(const Graph& g) {
  std::vector<Cycle> out;
  for (auto& c : chordless_cycles(g))
    if (c.length() % 2 == 1) out.push_back(std::move(c));
  return out;
}

inline bool joined_by_edge(const Graph& g, VertexSet a, VertexSet b) { return neighborhood(g, a).intersects(b); }

struct OddCycleConditionResult {
  bool holds = true;
  /// On failure: two vertex-disjoint chordless odd cycles with no edge between them.
  std::optional<std::pair<Cycle, Cycle>> witness;
};

/// Every two vertex-disjoint odd cycles are joined by an edge. Checked on
/// chordless odd cycles only: every odd cycle contains a chordless odd cycle
/// on a subset of its vertices, so a violating pair exists iff a chordless
/// violating pair exists.
inline OddCycleConditionResult odd_cycle_condition(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("odd cycle condition requires a connected graph");
  const auto cycles = chordless_odd_cycles(g);
  std::vector<VertexSet> sets;
  for (const auto& c : cycles) sets.push_back(c.vertex_set());
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j)
      if (!sets[i].intersects(sets[j]) && !joined_by_edge(g, sets[i], sets[j]))
        return {false, std::make_pair(cycles[i], cycles[j])};
  return {};
}

/// Any two odd cycles share a vertex (the unimodular edge polytope criterion).
inline bool odd_cycles_pairwise_intersect(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("odd cycle intersection test requires a connected graph");
  std::vector<VertexSet> sets;
  for (const auto& c : chordless_odd_cycles(g)) sets.push_back(c.vertex_set());
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!sets[i].intersects(sets[j])) return false;
  return true;
}

/// For every vertex i, every component of G_{[n]\{i}} is non-bipartite.
inline bool deletion_components_all_have_odd_cycle(const Graph& g) {
  for (Vertex i = 1; i <= g.order(); ++i)
    for (VertexSet c : components(g, g.vertices() - VertexSet{i}))
      if (two_coloring(g, c)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Matchings

namespace detail {

inline bool match_from(const Graph& g, VertexSet uncovered, Matching& m) {
  if (uncovered.empty()) return true;
  Vertex v = uncovered.least();
  for (Vertex w : (g.neighbors(v) & uncovered).members()) {
    m.emplace_back(v, w);
    if (match_from(g, uncovered - VertexSet{v, w}, m)) return true;
    m.pop_back();
  }
  return false;
}

}  // namespace detail

/// Some perfect matching, found by backtracking on the least uncovered vertex.
inline std::optional<Matching> perfect_matching(const Graph& g) {
  if (g.order() % 2 != 0) return std::nullopt;
  Matching m;
  if (detail::match_from(g, g.vertices(), m)) return m;
  return std::nullopt;
}

inline bool is_perfect_matching(const Graph& g, const Matching& m) {
  VertexSet covered;
  for (const Edge& e : m) {
    if (e.u < 1 || e.v > g.order() || !g.adjacent(e.u, e.v)) return false;
    if (covered.intersects(e.ends())) return false;
    covered = covered | e.ends();
  }
  return covered == g.vertices();
}

// ---------------------------------------------------------------------------
// Cliques and colorings

namespace detail {

inline void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  for (Vertex v : p.members()) {
    bron_kerbosch(g, r | VertexSet{v}, p & g.neighbors(v), x & g.neighbors(v), out);
    p.erase(v);
    x.insert(v);
  }
}

inline int clique_number_within(const Graph& g, VertexSet candidates, int current, int best) {
  if (candidates.empty()) return std::max(current, best);
  if (current + candidates.size() <= best) return best;
  Vertex v = candidates.least();
  best = clique_number_within(g, candidates & g.neighbors(v), current + 1, best);
  return clique_number_within(g, candidates - VertexSet{v}, current, best);
}

inline bool color_from(const Graph& g, const std::vector<Vertex>& order, std::size_t idx, int k, std::vector<int>& color) {
  if (idx == order.size()) return true;
  const Vertex v = order[idx];
  // Symmetry cut: a fresh color is only ever the least unused one.
  int used = 0;
  for (std::size_t j = 0; j < idx; ++j) used = std::max(used, color[order[j] - 1]);
  for (int c = 1; c <= std::min(k, used + 1); ++c) {
    bool ok = true;
    for (Vertex w : g.neighbors(v).members())
      if (color[w - 1] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[v - 1] = c;
    if (color_from(g, order, idx + 1, k, color)) return true;
    color[v - 1] = 0;
  }
  return false;
}

}  // namespace detail

/// All inclusion-maximal cliques, in lexicographic order of member lists.
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.order() == 0) return out;
  detail::bron_kerbosch(g, VertexSet{}, g.vertices(), VertexSet{}, out);
  std::sort(out.begin(), out.end(), lexicographic_less);
  return out;
}

inline int clique_number(const Graph& g, VertexSet support) { return detail::clique_number_within(g, support, 0, 0); }
inline int clique_number(const Graph& g) { return clique_number(g, g.vertices()); }

/// A proper coloring of G_support with colors 1..k (indexed by vertex - 1;
/// vertices outside the support get 0). Branches on the least undecided
/// vertex and tries colors in increasing order.
inline std::optional<std::vector<int>> proper_coloring(const Graph& g, VertexSet support, int k) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), 0);
  if (support.empty()) return color;
  if (k <= 0) return std::nullopt;
  if (!detail::color_from(g, support.members(), 0, k, color)) return std::nullopt;
  return color;
}

inline std::optional<std::vector<int>> proper_coloring(const Graph& g, int k) {
  return proper_coloring(g, g.vertices(), k);
}

inline int chromatic_number(const Graph& g, VertexSet support) {
  if (support.empty()) return 0;
  for (int k = std::max(1, clique_number(g, support));; ++k)
    if (proper_coloring(g, support, k)) return k;
}

inline int chromatic_number(const Graph& g) { return chromatic_number(g, g.vertices()); }

inline constexpr int kDefaultPerfectionBound = 12;

/// χ(H) = ω(H) for every induced subgraph H, checked directly over all 2^n
/// vertex subsets. Refuses graphs above `max_vertices`.
inline bool is_perfect(const Graph& g, int max_vertices = kDefaultPerfectionBound) {
  if (g.order() > max_vertices)
    throw PreconditionError("perfection check is limited to " + std::to_string(max_vertices) +
                            " vertices; assert perfection explicitly for larger graphs");
  const std::uint64_t full = g.vertices().bits();
  for (std::uint64_t s = 1; s <= full; ++s) {
    VertexSet support(s);
    if (chromatic_number(g, support) != clique_number(g, support)) return false;
  }
  return true;
}

}  // namespace gorenstein::graph

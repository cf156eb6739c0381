#pragma once

// JSON schemas:
//   graph:    {"n": int, "edges": [[i, j], ...]}        1-based labels
//   poset:    {"n": int, "less_than": [[i, j], ...]}    i < j; closed transitively on load
//   vpolytope {"dim": N, "vertices": [[...], ...]}
//   hpolytope {"dim": N, "inequalities": [{"a": [...], "b": m}, ...],
//              "equations": [{"a": [...], "b": m}, ...]}  meaning a·x <= b, a·x = b
// Integers only.

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "gorenstein/ehrhart.hpp"
#include "gorenstein/error.hpp"
#include "gorenstein/graph.hpp"
#include "gorenstein/polytope.hpp"
#include "gorenstein/report.hpp"

namespace gorenstein::io {

using json = nlohmann::json;

/// Parses text, reporting syntax errors with their byte position.
inline json parse(const std::string& text, const std::string& source = "input") {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

namespace detail {

inline const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing \"" + key + "\"");
  return *it;
}

inline Int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<Int>();
}

inline IntVector int_vector(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of integers");
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(integer(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

inline std::vector<std::pair<int, int>> pairs(const json& j, const std::string& where, int n) {
  if (!j.is_array()) throw InputError(where + ": expected an array of pairs");
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const IntVector p = int_vector(j[i], at);
    if (p.size() != 2) throw InputError(at + ": expected a pair");
    for (Int x : p)
      if (x < 1 || x > n) throw InputError(at + ": label " + std::to_string(x) + " outside 1.." + std::to_string(n));
    out.emplace_back(static_cast<int>(p[0]), static_cast<int>(p[1]));
  }
  return out;
}

inline int order(const json& j) {
  const Int n = integer(member(j, "n", "$"), "$.n");
  if (n < 0 || n > graph::kMaxVertices)
    throw InputError("$.n: must lie in 0.." + std::to_string(graph::kMaxVertices));
  return static_cast<int>(n);
}

}  // namespace detail

inline graph::Graph graph_from_json(const json& j) {
  const int n = detail::order(j);
  std::vector<graph::Edge> edges;
  for (auto [a, b] : detail::pairs(detail::member(j, "edges", "$"), "$.edges", n)) edges.emplace_back(a, b);
  return graph::Graph(n, std::move(edges));
}

inline graph::Poset poset_from_json(const json& j) {
  const int n = detail::order(j);
  return graph::Poset(n, detail::pairs(detail::member(j, "less_than", "$"), "$.less_than", n));
}

/// A graph, or a poset standing for its comparability graph.
using GraphInput = std::variant<graph::Graph, graph::Poset>;

inline GraphInput graph_input_from_json(const json& j) {
  if (j.is_object() && j.contains("less_than")) return poset_from_json(j);
  return graph_from_json(j);
}

inline json to_json(const graph::Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", edges}};
}

inline json to_json(const graph::Poset& p) {
  json rel = json::array();
  for (auto [a, b] : p.relations()) rel.push_back({a, b});
  return {{"n", p.size()}, {"less_than", rel}};
}

inline json to_json(graph::VertexSet s) { return s.members(); }

inline lattice::VPolytope vpolytope_from_json(const json& j) {
  const Int dim = detail::integer(detail::member(j, "dim", "$"), "$.dim");
  const json& vs = detail::member(j, "vertices", "$");
  if (!vs.is_array()) throw InputError("$.vertices: expected an array");
  std::vector<IntVector> pts;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string at = "$.vertices[" + std::to_string(i) + "]";
    pts.push_back(detail::int_vector(vs[i], at));
    if (static_cast<Int>(pts.back().size()) != dim) throw InputError(at + ": length differs from dim");
  }
  return lattice::VPolytope(static_cast<int>(dim), std::move(pts));
}

inline json to_json(const lattice::VPolytope& v) { return {{"dim", v.ambient_dim()}, {"vertices", v.vertices()}}; }

inline lattice::HPolytope hpolytope_from_json(const json& j) {
  const Int dim = detail::integer(detail::member(j, "dim", "$"), "$.dim");
  lattice::HPolytope h{static_cast<int>(dim), {}, {}};
  auto rows = [&](const char* key, auto&& add) {
    if (!j.contains(key)) return;
    const json& list = j[key];
    if (!list.is_array()) throw InputError(std::string("$.") + key + ": expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string at = std::string("$.") + key + "[" + std::to_string(i) + "]";
      IntVector a = detail::int_vector(detail::member(list[i], "a", at), at + ".a");
      if (static_cast<Int>(a.size()) != dim) throw InputError(at + ".a: length differs from dim");
      add(std::move(a), detail::integer(detail::member(list[i], "b", at), at + ".b"), at);
    }
  };
  rows("inequalities", [&](IntVector a, Int b, const std::string& at) {
    if (content(a) == 0) throw InputError(at + ".a: zero normal");
    if (b % content(a) != 0) {
      // Tighten a·x <= b to the lattice: divide and round down.
      const Int g = content(a);
      for (Int& x : a) x /= g;
      b = floor_div(b, g);
    }
    h.halfspaces.emplace_back(std::move(a), b);
  });
  rows("equations", [&](IntVector a, Int b, const std::string&) { h.equations.push_back({std::move(a), b}); });
  return h;
}

inline json to_json(const lattice::HPolytope& h) {
  json ineq = json::array();
  for (const auto& hs : h.halfspaces) ineq.push_back({{"a", hs.normal}, {"b", hs.offset}});
  json eq = json::array();
  for (const auto& e : h.equations) eq.push_back({{"a", e.normal}, {"b", e.rhs}});
  return {{"dim", h.ambient_dim}, {"inequalities", ineq}, {"equations", eq}};
}

inline json to_json(const ehrhart::HVector& hv) {
  return {{"h", hv.coefficients},
          {"d", hv.d},
          {"nonnegative", ehrhart::is_nonnegative(hv)},
          {"symmetric", ehrhart::is_symmetric(hv)},
          {"unimodal", ehrhart::is_unimodal(hv)}};
}

/// Certificate block: the perfect matching when positive, otherwise the
/// violated condition with its witness; clique sizes for stable polytopes.
inline json to_json(const GorensteinReport& r) {
  json j;
  j["branch"] = to_string(r.branch);
  j["hypotheses"] = r.hypotheses;
  j["verdict"] = r.verdict ? json(*r.verdict) : json(nullptr);
  j["conditions"] = r.conditions;
  json cert = json::object();
  if (r.matching) {
    json m = json::array();
    for (const auto& e : *r.matching) m.push_back({e.u, e.v});
    cert["perfect_matching"] = m;
  }
  if (r.violation) {
    cert["violation"] = {{"condition", r.violation->condition},
                         {"T", to_json(r.violation->t)},
                         {"N", to_json(r.violation->neighbors)},
                         {"size_T", r.violation->t.size()},
                         {"size_N", r.violation->neighbors.size()}};
  }
  if (r.branch == Branch::stable) cert["clique_sizes"] = r.clique_sizes;
  j["certificate"] = cert;
  j["delta"] = r.delta ? json(*r.delta) : json(nullptr);
  if (r.branch == Branch::stable) j["perfection_asserted"] = r.perfection_asserted;
  if (r.geometric) {
    j["geometric"] = {{"delta", r.geometric->delta},
                      {"witness", r.geometric->witness},
                      {"dual_integral", r.geometric->dual_integral}};
    j["geometric_crosscheck"] = *r.geometric_crosscheck();
  }
  return j;
}

}  // namespace gorenstein::io

#pragma once

// Exhaustive runs over all connected labeled graphs on 1..n_max vertices,
// comparing each combinatorial Gorenstein verdict with the geometric test.

#include <cstdint>
#include <functional>
#include <vector>

#include "gorenstein/analysis.hpp"

namespace gorenstein::sweep {

using io::json;

/// Calls visit(g) for every connected graph on exactly n labeled vertices,
/// ordered by the bitmask of its edges over the lexicographic edge list of
/// K_n. Stops early when visit returns false.
inline void for_each_connected_graph(int n, const std::function<bool(const graph::Graph&)>& visit) {
  if (n < 1 || n > 8) throw PreconditionError("labeled graph enumeration supports 1..8 vertices");
  std::vector<graph::Edge> all;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) all.emplace_back(i, j);
  const std::uint64_t limit = std::uint64_t{1} << all.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<graph::Edge> edges;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (mask >> k & 1) edges.push_back(all[k]);
    if (edges.size() + 1 < static_cast<std::size_t>(n)) continue;
    graph::Graph g(n, std::move(edges));
    if (!graph::is_connected(g)) continue;
    if (!visit(g)) return;
  }
}

struct Summary {
  std::uint64_t graphs = 0;
  std::uint64_t applicable = 0;
  std::uint64_t gorenstein = 0;
  std::uint64_t not_gorenstein = 0;
  std::uint64_t disagreements = 0;

  json to_json() const {
    return {{"summary", true},
            {"graphs", graphs},
            {"applicable", applicable},
            {"inapplicable", graphs - applicable},
            {"gorenstein", gorenstein},
            {"not_gorenstein", not_gorenstein},
            {"disagreements", disagreements}};
  }
};

/// One record per graph. The geometric test runs on every graph to which a
/// criterion applies; a disagreement is a verdict differing from dual
/// integrality, or a positive verdict whose δ differs from the geometric δ.
inline json check_graph(const graph::Graph& g, analysis::PolytopeKind kind, const DeciderOptions& base) {
  DeciderOptions opt = base;
  opt.crosscheck = true;
  const GorensteinReport r =
      kind == analysis::PolytopeKind::edge ? edge::gorenstein_edge(g, opt) : stable::gorenstein_stable(g, opt);
  json j;
  j["graph"] = io::to_json(g);
  j["branch"] = to_string(r.branch);
  j["verdict"] = r.verdict ? json(*r.verdict) : json(nullptr);
  j["delta"] = r.delta ? json(*r.delta) : json(nullptr);
  if (r.geometric) {
    j["geometric"] = r.geometric->dual_integral;
    j["geometric_delta"] = r.geometric->delta;
    bool agree = r.geometric->dual_integral == *r.verdict;
    if (r.delta && *r.delta != r.geometric->delta) agree = false;
    j["agree"] = agree;
  } else {
    j["geometric"] = nullptr;
    j["agree"] = nullptr;
  }
  return j;
}

/// Streams one JSON record per graph to `emit`, then returns the summary.
inline Summary run(int n_max, analysis::PolytopeKind kind, const DeciderOptions& opt,
                   const std::function<void(const json&)>& emit) {
  if (n_max < 1 || n_max > 7) throw InputError("sweep supports n_max in 1..7");
  Summary s;
  for (int n = 1; n <= n_max; ++n) {
    for_each_connected_graph(n, [&](const graph::Graph& g) {
      json rec = check_graph(g, kind, opt);
      rec["index"] = s.graphs++;
      if (!rec["verdict"].is_null()) {
        ++s.applicable;
        ++(rec["verdict"].get<bool>() ? s.gorenstein : s.not_gorenstein);
        if (!rec["agree"].get<bool>()) ++s.disagreements;
      }
      emit(rec);
      return true;
    });
  }
  return s;
}

}  // namespace gorenstein::sweep

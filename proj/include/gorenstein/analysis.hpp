#pragma once

// The full pipeline for one graph: hypotheses, normality, the Gorenstein
// report, facets, compressedness, special simplex validation and, on
// request, the h*-vector. Produces the report JSON emitted by the CLI.

#include <cstdint>
#include <string>

#include "gorenstein/edge_polytope.hpp"
#include "gorenstein/ehrhart.hpp"
#include "gorenstein/json_io.hpp"
#include "gorenstein/stable_polytope.hpp"

namespace gorenstein::analysis {

using io::json;

enum class PolytopeKind { edge, stable };
enum class FacetSource { combinatorial, oracle };

inline const char* to_string(PolytopeKind k) { return k == PolytopeKind::edge ? "edge" : "stable"; }
inline const char* to_string(FacetSource s) { return s == FacetSource::oracle ? "oracle" : "combinatorial"; }

struct Options {
  PolytopeKind kind = PolytopeKind::edge;
  FacetSource facets = FacetSource::combinatorial;
  bool hvector = false;
  bool crosscheck = false;
  bool assert_perfect = false;
  std::uint64_t budget = lattice::kDefaultNodeBudget;

  DeciderOptions decider() const {
    DeciderOptions d;
    d.crosscheck = crosscheck;
    d.assert_perfect = assert_perfect;
    d.facet_budget = budget;
    d.node_budget = budget;
    return d;
  }
};

struct Outcome {
  json report;
  /// 0 when the analysis completed, 2 when no criterion applies.
  int exit_code = 0;
};

inline json hvector_block(const lattice::HPolytope& facets, std::uint64_t budget) {
  lattice::LatticePointEnumerator e(facets, budget);
  const int d = e.dim();
  std::vector<Int> counts{1};
  for (Int t = 1; t <= d; ++t) counts.push_back(static_cast<Int>(e.count(t)));
  const auto hv = ehrhart::h_star_from_counts(counts, d);
  json j = io::to_json(hv);
  j["counts"] = counts;
  j["round_trip"] = ehrhart::recompose_counts(hv, d) == counts;
  return j;
}

inline Outcome analyze(const graph::Graph& g, const Options& opt) {
  Outcome out;
  json& j = out.report;
  j["input"] = io::to_json(g);
  j["polytope"] = to_string(opt.kind);
  const bool edge = opt.kind == PolytopeKind::edge;
  const bool connected = graph::is_connected(g);

  GorensteinReport r = edge ? edge::gorenstein_edge(g, opt.decider()) : stable::gorenstein_stable(g, opt.decider());
  if (edge) {
    if (connected) {
      const auto occ = graph::odd_cycle_condition(g);
      j["normal"] = occ.holds;
      if (occ.witness)
        j["normality_witness"] = {occ.witness->first.order, occ.witness->second.order};
      j["unimodular"] = graph::odd_cycles_pairwise_intersect(g);
    } else {
      j["normal"] = nullptr;
      j["unimodular"] = nullptr;
    }
  }
  j["gorenstein"] = io::to_json(r);
  if (r.branch == Branch::none) {
    out.exit_code = 2;
    return out;
  }

  const lattice::VPolytope v = edge ? edge::edge_polytope(g) : stable::stable_polytope(g);
  const bool combinatorial =
      opt.facets == FacetSource::combinatorial && (r.branch == Branch::odd || r.branch == Branch::stable);
  const lattice::HPolytope facets = !combinatorial ? lattice::facets_bruteforce(v, opt.budget)
                                    : edge         ? edge::edge_polytope_facets(g)
                                                   : stable::stable_polytope_facets_perfect(g, opt.decider());
  j["facets"] = {{"source", combinatorial ? "combinatorial" : "oracle"}, {"count", facets.halfspaces.size()}};
  j["dim"] = facets.dim();
  j["compressed"] = lattice::is_compressed_width1(v, facets);

  if (r.special_simplex) {
    const auto check = lattice::is_special_simplex(v, facets, *r.special_simplex);
    json verts = json::array();
    for (auto idx : r.special_simplex->vertex_indices) verts.push_back(v.vertices()[idx]);
    j["special_simplex"] = {{"vertices", verts}, {"valid", check.special}};
  } else {
    j["special_simplex"] = nullptr;
  }
  if (opt.hvector) j["hvector"] = hvector_block(facets, opt.budget);
  return out;
}

}  // namespace gorenstein::analysis

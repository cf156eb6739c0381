#pragma once

// Geometric Gorenstein test for a normal lattice polytope P: take the least
// δ with a lattice point c in the relative interior of δP, translate δP − c
// (standard type) and ask whether its polar dual is integral. This works in
// a lattice chart of aff(P), so lower-dimensional polytopes are handled the
// same way as full-dimensional ones.

#include <cstdint>

#include "gorenstein/lattice_points.hpp"
#include "gorenstein/polytope.hpp"

namespace gorenstein::lattice {

struct GeometricGorenstein {
  Int delta = 0;
  IntVector witness;           // interior lattice point of δP, ambient coordinates
  IntVector charted_witness;   // the same point in chart coordinates
  AffineChart chart;           // lattice chart of aff(P)
  HPolytope facets;            // facets of P in chart coordinates
  HPolytope standard_type;     // δP − c in chart coordinates
  bool dual_integral = false;
};

inline GeometricGorenstein geometric_gorenstein(const VPolytope& v, std::uint64_t facet_budget = kDefaultFacetBudget,
                                                std::uint64_t node_budget = kDefaultNodeBudget) {
  const ChartedPolytope charted = to_lattice_chart(v);
  const HPolytope facets = facets_bruteforce(charted.polytope, facet_budget);
  const InteriorDilation dil = smallest_interior_dilation(facets, node_budget);
  GeometricGorenstein out;
  out.chart = charted.chart;
  out.facets = facets;
  out.delta = dil.delta;
  out.charted_witness = dil.witness;
  auto lifted = charted.chart.lift_integral(dil.witness, dil.delta);
  out.witness = lifted ? *lifted : IntVector{};
  out.standard_type = translate_to_standard_type(facets, dil.delta, dil.witness);
  out.dual_integral = dual_is_integral(out.standard_type);
  return out;
}

}  // namespace gorenstein::lattice

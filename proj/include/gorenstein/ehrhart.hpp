#pragma once

// Ehrhart counts, the h*-vector (numerator of the Ehrhart series over
// (1 − λ)^{d+1}), predicates on h-vectors, and semigroup counts of edge
// vectors for the normality cross-check.

#include <cstdint>
#include <ostream>
#include <set>
#include <vector>

#include "gorenstein/arith.hpp"
#include "gorenstein/graph.hpp"
#include "gorenstein/lattice_points.hpp"
#include "gorenstein/polytope.hpp"

namespace gorenstein::ehrhart {

struct HVector {
  std::vector<Int> coefficients;  // h_0, ..., h_s with h_s != 0
  int d = 0;                      // dimension of the polytope

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  friend bool operator==(const HVector&, const HVector&) = default;
};

/// L(1), ..., L(t_max).
inline std::vector<Int> ehrhart_counts(const lattice::HPolytope& h, Int t_max,
                                       std::uint64_t budget = lattice::kDefaultNodeBudget) {
  lattice::LatticePointEnumerator e(h, budget);
  std::vector<Int> out;
  for (Int t = 1; t <= t_max; ++t) out.push_back(static_cast<Int>(e.count(t)));
  return out;
}

/// h_j = sum_{i<=j} (−1)^{j−i} C(d+1, j−i) L(i) for j = 0..d, given
/// L(0), ..., L(d). Trailing zeros are stripped; negative entries are kept.
inline HVector h_star_from_counts(const std::vector<Int>& counts, int d) {
  if (static_cast<int>(counts.size()) < d + 1) throw PreconditionError("h* needs the counts L(0), ..., L(d)");
  HVector hv{{}, d};
  for (int j = 0; j <= d; ++j) {
    Int h = 0;
    for (int i = 0; i <= j; ++i) {
      const Int term = checked_mul(binomial(d + 1, j - i), counts[i]);
      h = (j - i) % 2 == 0 ? checked_add(h, term) : checked_sub(h, term);
    }
    hv.coefficients.push_back(h);
  }
  while (hv.coefficients.size() > 1 && hv.coefficients.back() == 0) hv.coefficients.pop_back();
  return hv;
}

/// h*-vector of a lattice polytope from its facet description; d is the
/// dimension of the affine hull. A single point gives (1) with d = 0.
inline HVector h_star(const lattice::HPolytope& h, std::uint64_t budget = lattice::kDefaultNodeBudget) {
  lattice::LatticePointEnumerator e(h, budget);
  const int d = e.dim();
  std::vector<Int> counts{1};
  for (Int t = 1; t <= d; ++t) counts.push_back(static_cast<Int>(e.count(t)));
  return h_star_from_counts(counts, d);
}

/// Coefficients of h(λ)/(1 − λ)^{d+1} up to λ^{t_max}:
/// L(t) = sum_i h_i C(t − i + d, d).
inline std::vector<Int> recompose_counts(const HVector& hv, Int t_max) {
  std::vector<Int> out;
  for (Int t = 0; t <= t_max; ++t) {
    Int s = 0;
    for (std::size_t i = 0; i < hv.coefficients.size(); ++i)
      s = checked_add(s, checked_mul(hv.coefficients[i], binomial(t - static_cast<Int>(i) + hv.d, hv.d)));
    out.push_back(s);
  }
  return out;
}

/// d-th forward difference of L at 0, i.e. d! times the leading Ehrhart
/// coefficient (the normalized volume). Needs L(0), ..., L(d).
inline Int normalized_volume_from_counts(std::vector<Int> counts, int d) {
  counts.resize(static_cast<std::size_t>(d) + 1);
  for (int round = 0; round < d; ++round)
    for (int i = 0; i + 1 < static_cast<int>(counts.size()) - round; ++i)
      counts[i] = checked_sub(counts[i + 1], counts[i]);
  return counts[0];
}

inline bool is_nonnegative(const HVector& hv) {
  for (Int x : hv.coefficients)
    if (x < 0) return false;
  return true;
}

/// h_i = h_{s−i} for all i.
inline bool is_symmetric(const HVector& hv) {
  const auto& h = hv.coefficients;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] != h[h.size() - 1 - i]) return false;
  return true;
}

/// h_0 <= h_1 <= ... <= h_{floor(s/2)}.
inline bool is_unimodal(const HVector& hv) {
  const auto& h = hv.coefficients;
  const std::size_t mid = (h.size() - 1) / 2;
  for (std::size_t i = 0; i < mid; ++i)
    if (h[i] > h[i + 1]) return false;
  return true;
}

/// Number of distinct sums of t (not necessarily distinct) generators.
inline std::uint64_t semigroup_count(const std::vector<IntVector>& generators, Int t) {
  if (t < 0) throw PreconditionError("degree must be nonnegative");
  if (generators.empty()) return t == 0 ? 1 : 0;
  std::set<IntVector> level{IntVector(generators.front().size(), 0)};
  for (Int step = 0; step < t; ++step) {
    std::set<IntVector> next;
    for (const auto& p : level)
      for (const auto& g : generators) {
        IntVector s(p);
        for (std::size_t k = 0; k < s.size(); ++k) s[k] += g[k];
        next.insert(std::move(s));
      }
    level = std::move(next);
  }
  return level.size();
}

/// Distinct sums of t edge vectors e_i + e_j of g.
inline std::uint64_t semigroup_count(const graph::Graph& g, Int t) {
  std::vector<IntVector> gens;
  for (const auto& e : g.edges()) {
    IntVector v(static_cast<std::size_t>(g.order()), 0);
    v[e.u - 1] = 1;
    v[e.v - 1] = 1;
    gens.push_back(std::move(v));
  }
  return semigroup_count(gens, t);
}

/// "t,L" header, then one line per count; counts[i] is L(first_t + i).
inline void write_counts_csv(std::ostream& os, const std::vector<Int>& counts, Int first_t = 0) {
  os << "t,L\n";
  for (std::size_t i = 0; i < counts.size(); ++i) os << first_t + static_cast<Int>(i) << ',' << counts[i] << '\n';
}

}  // namespace gorenstein::ehrhart

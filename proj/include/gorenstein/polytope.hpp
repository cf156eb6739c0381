#pragma once

// Exact lattice polytopes: vertex and facet representations, the brute-force
// facet oracle, membership, and the transformations used by the Gorenstein
// test (lattice charts, dilation to an interior lattice point, translation to
// standard type, dual integrality), plus compressedness and special simplices.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gorenstein/arith.hpp"
#include "gorenstein/error.hpp"
#include "gorenstein/linalg.hpp"
#include "gorenstein/lp.hpp"

namespace gorenstein::lattice {

/// Convex hull of finitely many integer points; the stored list is exactly
/// the vertex set, in first-occurrence order of the input.
class VPolytope {
 public:
  VPolytope() = default;

  /// Removes duplicates and points that are not extreme. Points with 0/1
  /// coordinates are always vertices of the unit cube and thus extreme; other
  /// inputs are reduced with an exact LP per point.
  VPolytope(int ambient_dim, std::vector<IntVector> points) : ambient_dim_(ambient_dim) {
    if (points.empty()) throw PreconditionError("a polytope needs at least one point");
    std::set<IntVector> seen;
    bool zero_one = true;
    for (auto& p : points) {
      if (static_cast<int>(p.size()) != ambient_dim)
        throw InputError("point of dimension " + std::to_string(p.size()) + " in a polytope of dimension " +
                         std::to_string(ambient_dim));
      if (!seen.insert(p).second) continue;
      for (Int x : p) zero_one = zero_one && (x == 0 || x == 1);
      vertices_.push_back(std::move(p));
    }
    if (zero_one || vertices_.size() <= 2) return;
    std::vector<IntVector> kept;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      std::vector<IntVector> others;
      for (std::size_t j = 0; j < vertices_.size(); ++j)
        if (j != i) others.push_back(vertices_[j]);
      if (!lp::in_convex_hull(others, vertices_[i])) kept.push_back(vertices_[i]);
    }
    vertices_ = std::move(kept);
  }

  int ambient_dim() const { return ambient_dim_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  std::optional<std::size_t> index_of(const IntVector& v) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }

 private:
  int ambient_dim_ = 0;
  std::vector<IntVector> vertices_;
};

/// The closed halfspace normal · x <= offset, with a primitive normal.
struct HalfSpace {
  IntVector normal;
  Int offset = 0;

  HalfSpace() = default;
  HalfSpace(IntVector a, Int b) : normal(std::move(a)), offset(b) {
    const Int g = content(normal);
    if (g == 0) throw PreconditionError("halfspace normal must be nonzero");
    if (g > 1) {
      if (offset % g != 0) throw PreconditionError("halfspace offset is not integral after normalization");
      for (Int& x : normal) x /= g;
      offset /= g;
    }
  }

  Int evaluate(std::span<const Int> x) const { return dot(normal, x); }
  bool tight_at(std::span<const Int> x) const { return evaluate(x) == offset; }

  friend auto operator<=>(const HalfSpace&, const HalfSpace&) = default;
};

/// Facet description: irredundant halfspaces plus equations of the affine hull.
struct HPolytope {
  int ambient_dim = 0;
  std::vector<HalfSpace> halfspaces;
  std::vector<Equation> equations;

  AffineChart chart() const { return AffineChart(ambient_dim, equations); }
  int dim() const { return chart().dim(); }
};

/// Vertex subset of a host VPolytope forming a (q-1)-simplex.
struct SpecialSimplex {
  std::vector<std::size_t> vertex_indices;

  std::size_t q() const { return vertex_indices.size(); }
};

// ---------------------------------------------------------------------------
// Affine hull and canonical facet normals

struct AffineHull {
  std::vector<Equation> equations;
  int dim = 0;
  AffineChart chart;
};

/// Equations of aff(P): one per dependent coordinate of the chart, with the
/// dependent coordinates chosen right-most.
inline AffineHull affine_hull(int ambient_dim, const std::vector<IntVector>& points) {
  if (points.empty()) throw PreconditionError("affine hull of an empty point set");
  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    IntVector d(static_cast<std::size_t>(ambient_dim));
    for (int k = 0; k < ambient_dim; ++k) d[k] = checked_sub(points[i][k], points[0][k]);
    diffs.push_back(std::move(d));
  }
  AffineHull hull;
  for (auto& normal : integer_kernel(diffs, ambient_dim)) {
    Int rhs = dot(normal, points[0]);
    hull.equations.push_back({std::move(normal), rhs});
  }
  hull.chart = AffineChart(ambient_dim, hull.equations);
  // Express each equation as "dependent coordinate = affine function of free
  // ones" so the list reads like the chart.
  std::vector<Equation> normalized;
  const auto& chart = hull.chart;
  for (std::size_t i = 0; i < chart.dependent_coordinates().size(); ++i) {
    RationalVector row(static_cast<std::size_t>(ambient_dim + 1), Rational(0));
    row[chart.dependent_coordinates()[i]] = 1;
    for (std::size_t k = 0; k < chart.free_coordinates().size(); ++k)
      row[chart.free_coordinates()[k]] = -chart.coefficients()[i][k];
    row[ambient_dim] = chart.offsets()[i];
    IntVector scaled = primitive_integer_multiple(row);
    Int rhs = scaled.back();
    scaled.pop_back();
    normalized.push_back({std::move(scaled), rhs});
  }
  hull.equations = std::move(normalized);
  hull.dim = chart.dim();
  return hull;
}

inline AffineHull affine_hull(const VPolytope& v) { return affine_hull(v.ambient_dim(), v.vertices()); }

/// Rewrites a·x <= b modulo the chart's equations so that the normal is zero
/// on dependent coordinates and primitive on the free ones. Two halfspaces
/// define the same facet of a polytope on this chart iff their canonical
/// forms coincide.
inline HalfSpace canonical_halfspace(const AffineChart& chart, const HalfSpace& h) {
  auto [a, k] = chart.pull_back(h.normal, Rational(0));
  RationalVector row = a;
  row.push_back(Rational(h.offset) - k);
  bool zero = std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
  if (zero) throw PreconditionError("halfspace is constant on the affine hull");
  // Scale so the normal part is primitive; the offset must come out integral.
  IntVector normal_only = primitive_integer_multiple(a);
  // Find the positive factor mapping a to normal_only.
  std::size_t j = 0;
  while (a[j] == 0) ++j;
  Rational factor = Rational(normal_only[j]) / a[j];
  Rational offset = row.back() * factor;
  if (denominator(offset) != 1) throw PreconditionError("canonical halfspace offset is not integral");
  IntVector full(static_cast<std::size_t>(chart.ambient_dim()), 0);
  for (std::size_t q = 0; q < chart.free_coordinates().size(); ++q) full[chart.free_coordinates()[q]] = normal_only[q];
  return HalfSpace(std::move(full), to_int(numerator(offset)));
}

/// Canonical normals, sorted lexicographically, duplicates removed.
inline HPolytope canonicalize(const HPolytope& h) {
  const AffineChart chart = h.chart();
  HPolytope out{h.ambient_dim, {}, {}};
  std::set<HalfSpace> uniq;
  for (const auto& hs : h.halfspaces) uniq.insert(canonical_halfspace(chart, hs));
  out.halfspaces.assign(uniq.begin(), uniq.end());
  // Equations in chart form.
  for (std::size_t i = 0; i < chart.dependent_coordinates().size(); ++i) {
    RationalVector row(static_cast<std::size_t>(h.ambient_dim + 1), Rational(0));
    row[chart.dependent_coordinates()[i]] = 1;
    for (std::size_t k = 0; k < chart.free_coordinates().size(); ++k)
      row[chart.free_coordinates()[k]] = -chart.coefficients()[i][k];
    row[h.ambient_dim] = chart.offsets()[i];
    IntVector scaled = primitive_integer_multiple(row);
    Int rhs = scaled.back();
    scaled.pop_back();
    out.equations.push_back({std::move(scaled), rhs});
  }
  return out;
}

/// Set equality of facet descriptions after canonicalization.
inline bool same_facets(const HPolytope& a, const HPolytope& b) {
  if (a.ambient_dim != b.ambient_dim) return false;
  const HPolytope ca = canonicalize(a);
  const HPolytope cb = canonicalize(b);
  return ca.halfspaces == cb.halfspaces && ca.equations == cb.equations;
}

// ---------------------------------------------------------------------------
// Brute-force facet oracle

inline constexpr std::uint64_t kDefaultFacetBudget = 50'000'000;

namespace detail {

// Integer row echelon form kept fully reduced (each pivot column is zero in
// the other rows), rows divided by their content.
struct ReducedRows {
  std::vector<IntVector> rows;
  std::vector<int> pivots;

  // Reduces v against the rows and appends it; false if v is dependent.
  bool add(IntVector v) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Int vp = v[pivots[i]];
      if (vp == 0) continue;
      const Int rp = rows[i][pivots[i]];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = checked_sub(checked_mul(rp, v[k]), checked_mul(vp, rows[i][k]));
      make_primitive(v);
    }
    std::size_t q = 0;
    while (q < v.size() && v[q] == 0) ++q;
    if (q == v.size()) return false;
    for (auto& r : rows) {
      const Int rq = r[q];
      if (rq == 0) continue;
      for (std::size_t k = 0; k < r.size(); ++k) r[k] = checked_sub(checked_mul(v[q], r[k]), checked_mul(rq, v[k]));
      make_primitive(r);
    }
    rows.push_back(std::move(v));
    pivots.push_back(static_cast<int>(q));
    return true;
  }

  // Primitive generator of the kernel when exactly one column is free.
  IntVector kernel_vector(std::size_t cols) const {
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::size_t f = 0;
    while (is_pivot[f]) ++f;
    Int l = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Int p = rows[i][pivots[i]];
      p = p < 0 ? -p : p;
      l = checked_mul(l / std::gcd(l, p), p);
    }
    IntVector x(cols, 0);
    x[f] = l;
    for (std::size_t i = 0; i < rows.size(); ++i)
      x[pivots[i]] = checked_mul(-rows[i][f], l / rows[i][pivots[i]]);
    make_primitive(x);
    return x;
  }
};

// Depth-first search over d-subsets {p_0 < p_1 < ...} of the points. Level
// k stores the difference p_{k+1} − p_0 reduced against the rows above it
// (plain echelon form), so extending a subset never rewrites earlier rows.
class FacetSearch {
 public:
  FacetSearch(const std::vector<IntVector>& points, std::uint64_t budget)
      : points_(points), m_(points.size()), d_(points.front().size()), budget_(budget),
        diffs_(m_ * d_), rows_(d_ * d_), pivots_(d_), chosen_(d_) {}

  std::set<HalfSpace> run() {
    for (std::size_t i = 0; i + d_ <= m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j)
        for (std::size_t k = 0; k < d_; ++k) diffs_[j * d_ + k] = checked_sub(points_[j][k], points_[i][k]);
      chosen_[0] = i;
      extend(0, i + 1);
    }
    return facets_;
  }

 private:
  void extend(std::size_t level, std::size_t from) {
    if (level + 1 == d_) {
      record();
      return;
    }
    Int* row = &rows_[level * d_];
    // Choosing the last point: if the chosen points and the candidate lie on
    // a known facet, their hyperplane is that facet.
    std::vector<std::size_t> containing;
    if (level + 2 == d_)
      for (std::size_t f = 0; f < tight_.size(); ++f)
        if (std::all_of(chosen_.begin(), chosen_.begin() + static_cast<std::ptrdiff_t>(level) + 1,
                        [&](std::size_t i) { return tight_[f][i]; }))
          containing.push_back(f);
    for (std::size_t j = from; j + (d_ - 1 - level) <= m_; ++j) {
      if (++work_ > budget_) throw BudgetExceeded("facet enumeration exceeded its budget of " + std::to_string(budget_));
      if (std::any_of(containing.begin(), containing.end(), [&](std::size_t f) { return tight_[f][j]; })) continue;
      std::copy_n(&diffs_[j * d_], d_, row);
      for (std::size_t r = 0; r < level; ++r) {
        const Int* above = &rows_[r * d_];
        const Int vp = row[pivots_[r]];
        if (vp == 0) continue;
        const Int rp = above[pivots_[r]];
        for (std::size_t k = 0; k < d_; ++k) row[k] = checked_sub(checked_mul(rp, row[k]), checked_mul(vp, above[k]));
        make_primitive(std::span<Int>(row, d_));
      }
      std::size_t q = 0;
      while (q < d_ && row[q] == 0) ++q;
      if (q == d_) continue;
      pivots_[level] = q;
      chosen_[level + 1] = j;
      extend(level + 1, j + 1);
    }
  }

  // The primitive normal of the hyperplane through the chosen points, by
  // back-substitution from the last row; x is rescaled whenever a division
  // is not exact.
  IntVector kernel() const {
    const std::size_t rank = d_ - 1;
    std::vector<bool> is_pivot(d_, false);
    for (std::size_t r = 0; r < rank; ++r) is_pivot[pivots_[r]] = true;
    std::size_t f = 0;
    while (is_pivot[f]) ++f;
    IntVector x(d_, 0);
    x[f] = 1;
    for (std::size_t r = rank; r-- > 0;) {
      const Int* row = &rows_[r * d_];
      Int num = 0;
      for (std::size_t k = 0; k < d_; ++k)
        if (k != pivots_[r]) num = checked_sub(num, checked_mul(row[k], x[k]));
      Int den = row[pivots_[r]];
      const Int g = std::gcd(num, den);
      num /= g == 0 ? 1 : g;
      den /= g == 0 ? 1 : g;
      if (den < 0) {
        den = -den;
        num = -num;
      }
      if (den != 1)
        for (Int& v : x) v = checked_mul(v, den);
      x[pivots_[r]] = num;
    }
    make_primitive(x);
    return x;
  }

  void record() {
    IntVector normal = kernel();
    const Int b = dot(normal, points_[chosen_[0]]);
    {
      IntVector neg(normal);
      for (Int& x : neg) x = -x;
      if (facets_.count(HalfSpace(normal, b)) || facets_.count(HalfSpace(neg, -b))) return;
    }
    bool below = false;
    bool above = false;
    for (const auto& p : points_) {
      const Int s = dot(normal, p);
      below = below || s < b;
      above = above || s > b;
      if (below && above) return;
    }
    std::vector<bool> tight(m_);
    for (std::size_t i = 0; i < m_; ++i) tight[i] = dot(normal, points_[i]) == b;
    tight_.push_back(std::move(tight));
    if (above) {
      for (Int& x : normal) x = -x;
      facets_.insert(HalfSpace(std::move(normal), -b));
    } else {
      facets_.insert(HalfSpace(std::move(normal), b));
    }
  }

  const std::vector<IntVector>& points_;
  std::size_t m_;
  std::size_t d_;
  std::uint64_t budget_;
  std::uint64_t work_ = 0;
  IntVector diffs_;
  IntVector rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> chosen_;
  std::set<HalfSpace> facets_;
  std::vector<std::vector<bool>> tight_;  // tight points of each facet found
};

}  // namespace detail

/// Complete facet list of conv(V) by enumerating affinely independent
/// d-subsets of vertices (d = dim P) in a lattice chart of the affine hull,
/// keeping supporting hyperplanes. Output normals are canonical (zero on
/// dependent coordinates), sorted lexicographically.
inline HPolytope facets_bruteforce(const VPolytope& v, std::uint64_t budget = kDefaultFacetBudget) {
  const AffineHull hull = affine_hull(v);
  if (hull.dim == 0) throw PreconditionError("facets of a zero-dimensional polytope are undefined");
  std::vector<IntVector> projected;
  for (const auto& p : v.vertices()) projected.push_back(hull.chart.project(p));
  const auto facets = detail::FacetSearch(projected, budget).run();
  HPolytope out{v.ambient_dim(), {}, hull.equations};
  for (const auto& f : facets) {
    IntVector full(static_cast<std::size_t>(v.ambient_dim()), 0);
    for (std::size_t q = 0; q < hull.chart.free_coordinates().size(); ++q)
      full[hull.chart.free_coordinates()[q]] = f.normal[q];
    out.halfspaces.emplace_back(std::move(full), f.offset);
  }
  std::sort(out.halfspaces.begin(), out.halfspaces.end());
  return out;
}

// ---------------------------------------------------------------------------
// Membership

namespace detail {

inline Rational rational_dot(std::span<const Int> a, std::span<const Rational> x) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += x[i] * a[i];
  return s;
}

inline void check_dim(const HPolytope& h, std::size_t n) {
  if (static_cast<int>(n) != h.ambient_dim)
    throw PreconditionError("point of dimension " + std::to_string(n) + " tested against a polytope in dimension " +
                            std::to_string(h.ambient_dim));
}

}  // namespace detail

inline bool contains(const HPolytope& h, std::span<const Rational> x) {
  detail::check_dim(h, x.size());
  for (const auto& e : h.equations)
    if (detail::rational_dot(e.normal, x) != e.rhs) return false;
  for (const auto& hs : h.halfspaces)
    if (detail::rational_dot(hs.normal, x) > hs.offset) return false;
  return true;
}

/// Relative interior: equations hold and every facet inequality is strict.
inline bool contains_interior(const HPolytope& h, std::span<const Rational> x) {
  detail::check_dim(h, x.size());
  for (const auto& e : h.equations)
    if (detail::rational_dot(e.normal, x) != e.rhs) return false;
  for (const auto& hs : h.halfspaces)
    if (detail::rational_dot(hs.normal, x) >= hs.offset) return false;
  return true;
}

inline RationalVector to_rational(std::span<const Int> x) { return RationalVector(x.begin(), x.end()); }

// ---------------------------------------------------------------------------
// Transformations

/// The image of a polytope on z_1 + ... + z_n = 2 under the inverse of
/// (z_1..z_{n-1}) -> (z_1, ..., z_{n-1}, 2 - sum): drops the last coordinate.
inline VPolytope project_onto_sum2_hyperplane(const VPolytope& v) {
  if (v.ambient_dim() < 1) throw PreconditionError("projection needs ambient dimension >= 1");
  std::vector<IntVector> out;
  for (const auto& p : v.vertices()) {
    Int s = 0;
    for (Int x : p) s = checked_add(s, x);
    if (s != 2) throw PreconditionError("vertex coordinates do not sum to 2");
    out.emplace_back(p.begin(), p.end() - 1);
  }
  return VPolytope(v.ambient_dim() - 1, std::move(out));
}

/// A polytope expressed in the free coordinates of a lattice chart of its
/// affine hull; full-dimensional in Z^dim.
struct ChartedPolytope {
  VPolytope polytope;
  AffineChart chart;
};

/// Projects onto the chart coordinates. Requires the chart to be unimodular
/// so that lattice points correspond bijectively.
inline ChartedPolytope to_lattice_chart(const VPolytope& v) {
  const AffineHull hull = affine_hull(v);
  if (!hull.chart.unimodular())
    throw PreconditionError("the affine hull has no coordinate chart preserving the lattice");
  std::vector<IntVector> pts;
  for (const auto& p : v.vertices()) pts.push_back(hull.chart.project(p));
  return {VPolytope(hull.dim, std::move(pts)), hull.chart};
}

/// δP − c for an interior lattice point c of δP: facets a·x <= δb − a·c,
/// equations scaled the same way.
inline HPolytope translate_to_standard_type(const HPolytope& h, Int delta, std::span<const Int> interior_point) {
  if (delta < 1) throw PreconditionError("dilation factor must be positive");
  detail::check_dim(h, interior_point.size());
  HPolytope out{h.ambient_dim, {}, {}};
  for (const auto& e : h.equations) {
    const Int rhs = checked_sub(checked_mul(delta, e.rhs), dot(e.normal, interior_point));
    if (rhs != 0) throw PreconditionError("translation point is not on the dilated affine hull");
    out.equations.push_back({e.normal, 0});
  }
  for (const auto& hs : h.halfspaces) {
    const Int b = checked_sub(checked_mul(delta, hs.offset), dot(hs.normal, interior_point));
    if (b <= 0) throw PreconditionError("translation point is not interior to the dilated polytope");
    out.halfspaces.emplace_back(hs.normal, b);
  }
  return out;
}

/// For a polytope of standard type (origin in the relative interior) with
/// lattice-primitive facet normals a·x <= b: the polar dual has vertices a/b,
/// so it is integral iff every b equals 1. Normals are re-canonicalized on
/// the affine hull first, which makes "primitive" relative to its lattice.
inline bool dual_is_integral(const HPolytope& h) {
  for (const auto& e : h.equations)
    if (e.rhs != 0) throw PreconditionError("origin is not on the affine hull");
  const AffineChart chart = h.chart();
  for (const auto& hs : h.halfspaces) {
    const HalfSpace c = canonical_halfspace(chart, hs);
    if (c.offset <= 0) throw PreconditionError("origin is not interior");
  }
  for (const auto& hs : h.halfspaces)
    if (canonical_halfspace(chart, hs).offset != 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Compressedness and special simplices

namespace detail {

inline void check_representation(const VPolytope& v, const HPolytope& h) {
  if (v.ambient_dim() != h.ambient_dim) throw PreconditionError("vertex and facet representations differ in dimension");
  for (const auto& p : v.vertices()) {
    for (const auto& e : h.equations)
      if (dot(e.normal, p) != e.rhs) throw PreconditionError("a vertex violates an equation of the facet description");
    for (const auto& hs : h.halfspaces)
      if (hs.evaluate(p) > hs.offset) throw PreconditionError("a vertex violates a facet inequality");
  }
}

}  // namespace detail

/// Every facet a·x <= b (normal primitive on the affine lattice) takes only
/// the values b and b−1 on the vertices.
inline bool is_compressed_width1(const VPolytope& v, const HPolytope& h) {
  detail::check_representation(v, h);
  const AffineChart chart = affine_hull(v).chart;
  for (const auto& hs : h.halfspaces) {
    const HalfSpace c = canonical_halfspace(chart, hs);
    for (const auto& p : v.vertices()) {
      const Int s = c.evaluate(p);
      if (s != c.offset && s != c.offset - 1) return false;
    }
  }
  return true;
}

inline bool affinely_independent(const std::vector<IntVector>& points) {
  if (points.empty()) return true;
  detail::ReducedRows rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    IntVector d(points[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = checked_sub(points[i][k], points[0][k]);
    if (!rows.add(std::move(d))) return false;
  }
  return true;
}

struct SpecialSimplexCheck {
  bool special = false;
  /// For each halfspace of the facet list, how many simplex vertices it contains.
  std::vector<int> tight_counts;
};

/// Every facet contains exactly q−1 of the q simplex vertices.
inline SpecialSimplexCheck is_special_simplex(const VPolytope& v, const HPolytope& h, const SpecialSimplex& s) {
  std::vector<IntVector> pts;
  for (std::size_t idx : s.vertex_indices) {
    if (idx >= v.size()) throw PreconditionError("simplex vertex index " + std::to_string(idx) + " out of range");
    pts.push_back(v.vertices()[idx]);
  }
  if (pts.empty()) throw PreconditionError("a simplex needs at least one vertex");
  if (!affinely_independent(pts)) throw PreconditionError("simplex vertices are affinely dependent");
  SpecialSimplexCheck out{true, {}};
  const int target = static_cast<int>(pts.size()) - 1;
  for (const auto& hs : h.halfspaces) {
    int c = 0;
    for (const auto& p : pts) c += hs.tight_at(p) ? 1 : 0;
    out.tight_counts.push_back(c);
    if (c != target) out.special = false;
  }
  return out;
}

}  // namespace gorenstein::lattice

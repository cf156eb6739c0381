#pragma once

// Lattice points of dilated polytopes, by depth-first search over the free
// coordinates of a chart of the affine hull. Each node tightens the box of
// the remaining coordinates by propagating the facet inequalities; once a
// single coordinate is left the propagated interval is exact, so counts are
// taken from it directly.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gorenstein/arith.hpp"
#include "gorenstein/error.hpp"
#include "gorenstein/lp.hpp"
#include "gorenstein/polytope.hpp"

namespace gorenstein::lattice {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

class LatticePointEnumerator {
 public:
  explicit LatticePointEnumerator(const HPolytope& h, std::uint64_t node_budget = kDefaultNodeBudget)
      : chart_(h.chart()), dim_(chart_.dim()), budget_(node_budget) {
    for (const auto& hs : h.halfspaces) {
      auto [a, k] = chart_.pull_back(hs.normal, Rational(0));
      RationalVector row(a);
      const Rational rhs = Rational(hs.offset) - k;
      if (std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; })) {
        constant_rhs_.push_back(rhs);
        continue;
      }
      IntVector normal = primitive_integer_multiple(a);
      std::size_t j = 0;
      while (a[j] == 0) ++j;
      const Rational factor = Rational(normal[j]) / a[j];
      for (Int x : normal) coeffs_.push_back(x);
      rhs_.push_back(rhs * factor);
    }
    rows_ = rhs_.size();
  }

  int dim() const { return dim_; }
  std::uint64_t nodes_visited() const { return nodes_; }

  /// |tP ∩ Z^N| for t >= 0.
  std::uint64_t count(Int t) {
    Mode m;
    m.kind = Mode::Count;
    run(t, false, m);
    return m.count;
  }

  /// All lattice points of tP (ambient coordinates), lexicographic in the
  /// free coordinates.
  std::vector<IntVector> points(Int t) {
    Mode m;
    m.kind = Mode::Collect;
    run(t, false, m);
    return std::move(m.found);
  }

  /// The first lattice point in the relative interior of tP, if any.
  std::optional<IntVector> first_interior(Int t) {
    Mode m;
    m.kind = Mode::First;
    run(t, true, m);
    if (m.found.empty()) return std::nullopt;
    return m.found.front();
  }

 private:
  static constexpr Int kInf = std::numeric_limits<Int>::max() / 4;

  struct Mode {
    enum Kind { Count, Collect, First } kind = Count;
    std::uint64_t count = 0;
    std::vector<IntVector> found;
    bool done = false;
  };

  void run(Int t, bool strict, Mode& mode) {
    if (t < 0) throw PreconditionError("dilation factor must be nonnegative");
    nodes_ = 0;
    t_ = t;
    // Right-hand sides for tP: floor(t·b), or ceil(t·b) − 1 for strict.
    beta_.assign(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational v = rhs_[r] * t;
      BigInt fl = numerator(v) / denominator(v);
      if (fl * denominator(v) > numerator(v)) fl -= 1;  // floor for negatives
      if (strict) {
        const bool integral = denominator(v) == 1;
        beta_[r] = to_int(integral ? BigInt(fl - 1) : fl);
      } else {
        beta_[r] = to_int(fl);
      }
    }
    for (const auto& c : constant_rhs_) {
      const Rational v = c * t;
      if (strict ? !(v > 0) : v < 0) return;
    }
    IntVector lo(static_cast<std::size_t>(dim_), -kInf);
    IntVector hi(static_cast<std::size_t>(dim_), kInf);
    if (!propagate(lo, hi, 64)) return;
    for (int k = 0; k < dim_; ++k) {
      if (lo[k] != -kInf && hi[k] != kInf) continue;
      if (!lp_box_) compute_lp_box();
      if (!*lp_box_feasible_) return;
      const auto& [bl, bh] = (*lp_box_)[k];
      lo[k] = std::max(lo[k], to_int(ceil_rational(bl * t)));
      hi[k] = std::min(hi[k], to_int(floor_rational(bh * t)));
    }
    for (int k = 0; k < dim_; ++k) {
      const Int span = hi[k] > lo[k] ? hi[k] - lo[k] : 0;
      for (std::size_t r = 0; r < rows_; ++r) {
        const Int a = coeffs_[r * dim_ + k];
        const Int mag = std::max(hi[k] < 0 ? -hi[k] : hi[k], lo[k] < 0 ? -lo[k] : lo[k]) + span;
        if (a != 0 && mag > (kInf / 16) / (a < 0 ? -a : a) / (dim_ + 1))
          throw OverflowError("lattice point search box too large for 64-bit arithmetic");
      }
    }
    levels_lo_.assign(static_cast<std::size_t>(dim_) + 1, lo);
    levels_hi_.assign(static_cast<std::size_t>(dim_) + 1, hi);
    levels_lo_[0] = lo;
    levels_hi_[0] = hi;
    dfs(0, mode);
  }

  static BigInt floor_rational(const Rational& v) {
    BigInt q = numerator(v) / denominator(v);
    if (q * denominator(v) > numerator(v)) q -= 1;
    return q;
  }
  static BigInt ceil_rational(const Rational& v) {
    BigInt q = numerator(v) / denominator(v);
    if (q * denominator(v) < numerator(v)) q += 1;
    return q;
  }

  void compute_lp_box() {
    std::vector<RationalVector> a;
    RationalVector b;
    for (std::size_t r = 0; r < rows_; ++r) {
      RationalVector row;
      for (int k = 0; k < dim_; ++k) row.emplace_back(coeffs_[r * dim_ + k]);
      a.push_back(std::move(row));
      b.push_back(rhs_[r]);
    }
    lp_box_.emplace();
    lp_box_feasible_ = true;
    for (int k = 0; k < dim_; ++k) {
      RationalVector c(static_cast<std::size_t>(dim_), Rational(0));
      c[k] = 1;
      auto up = lp::maximize(a, b, c);
      if (up.status == lp::Status::infeasible) {
        lp_box_feasible_ = false;
        return;
      }
      if (up.status == lp::Status::unbounded) throw PreconditionError("polytope is unbounded");
      c[k] = -1;
      auto down = lp::maximize(a, b, c);
      if (down.status == lp::Status::unbounded) throw PreconditionError("polytope is unbounded");
      lp_box_->emplace_back(-down.value, up.value);
    }
  }

  // Bound propagation on all rows; false when the box becomes empty.
  bool propagate(IntVector& lo, IntVector& hi, int rounds) const {
    for (int round = 0; round < rounds; ++round) {
      bool changed = false;
      for (std::size_t r = 0; r < rows_; ++r) {
        const Int* a = &coeffs_[r * dim_];
        Int minsum = 0;
        int infinite = 0;
        int inf_at = -1;
        for (int j = 0; j < dim_; ++j) {
          if (a[j] == 0) continue;
          const Int bound = a[j] > 0 ? lo[j] : hi[j];
          if (bound == -kInf || bound == kInf) {
            ++infinite;
            inf_at = j;
          } else {
            minsum += a[j] * bound;
          }
        }
        if (infinite >= 2) continue;
        if (infinite == 0 && minsum > beta_[r]) return false;
        for (int j = 0; j < dim_; ++j) {
          if (a[j] == 0) continue;
          if (infinite == 1 && j != inf_at) continue;
          Int residual = beta_[r] - minsum;
          if (infinite == 0) residual += a[j] * (a[j] > 0 ? lo[j] : hi[j]);
          if (a[j] > 0) {
            const Int nh = floor_div(residual, a[j]);
            if (nh < hi[j]) {
              hi[j] = nh;
              changed = true;
            }
          } else {
            const Int nl = ceil_div(residual, a[j]);
            if (nl > lo[j]) {
              lo[j] = nl;
              changed = true;
            }
          }
          if (lo[j] > hi[j]) return false;
        }
      }
      if (!changed) break;
    }
    return true;
  }

  void dfs(int k, Mode& mode) {
    if (mode.done) return;
    if (++nodes_ > budget_)
      throw BudgetExceeded("lattice point search exceeded its budget of " + std::to_string(budget_) + " nodes");
    IntVector& lo = levels_lo_[k];
    IntVector& hi = levels_hi_[k];
    if (!propagate(lo, hi, k + 1 >= dim_ ? 1 : 4)) return;
    if (k == dim_) {
      visit(lo, mode);
      return;
    }
    if (k == dim_ - 1 && mode.kind == Mode::Count && chart_.unimodular()) {
      mode.count += static_cast<std::uint64_t>(hi[k] - lo[k] + 1);
      return;
    }
    for (Int v = lo[k]; v <= hi[k] && !mode.done; ++v) {
      levels_lo_[k + 1] = lo;
      levels_hi_[k + 1] = hi;
      levels_lo_[k + 1][k] = v;
      levels_hi_[k + 1][k] = v;
      dfs(k + 1, mode);
    }
  }

  void visit(const IntVector& y, Mode& mode) {
    auto x = chart_.lift_integral(y, t_);
    if (!x) return;
    switch (mode.kind) {
      case Mode::Count:
        ++mode.count;
        break;
      case Mode::Collect:
        mode.found.push_back(std::move(*x));
        break;
      case Mode::First:
        mode.found.push_back(std::move(*x));
        mode.done = true;
        break;
    }
  }

  AffineChart chart_;
  int dim_;
  std::uint64_t budget_;
  std::size_t rows_ = 0;
  IntVector coeffs_;     // rows_ x dim_, primitive normals in free coordinates
  RationalVector rhs_;   // for t = 1
  RationalVector constant_rhs_;  // rows whose normal vanishes on the affine hull: 0 <= rhs
  IntVector beta_;
  Int t_ = 1;
  std::uint64_t nodes_ = 0;
  std::optional<std::vector<std::pair<Rational, Rational>>> lp_box_;
  std::optional<bool> lp_box_feasible_;
  std::vector<IntVector> levels_lo_;
  std::vector<IntVector> levels_hi_;
};

/// |tP ∩ Z^N|.
inline std::uint64_t lattice_points(const HPolytope& h, Int t, std::uint64_t budget = kDefaultNodeBudget) {
  return LatticePointEnumerator(h, budget).count(t);
}

inline std::vector<IntVector> lattice_point_list(const HPolytope& h, Int t,
                                                 std::uint64_t budget = kDefaultNodeBudget) {
  return LatticePointEnumerator(h, budget).points(t);
}

struct InteriorDilation {
  Int delta = 0;
  IntVector witness;
};

/// The least δ >= 1 such that the relative interior of δP contains a lattice
/// point, with the lexicographically first such point as witness.
inline InteriorDilation smallest_interior_dilation(const HPolytope& h, std::uint64_t budget = kDefaultNodeBudget) {
  if (h.halfspaces.empty()) throw PreconditionError("interior dilation needs a bounded polytope with facets");
  LatticePointEnumerator e(h, budget);
  // A d-polytope with a lattice vertex contains an interior point of
  // (d+1)P (the barycenter of a lattice simplex), so the loop terminates.
  const Int limit = static_cast<Int>(e.dim()) + 1;
  for (Int delta = 1; delta <= limit; ++delta)
    if (auto p = e.first_interior(delta)) return {delta, std::move(*p)};
  throw PreconditionError("no interior lattice point up to dilation " + std::to_string(limit) +
                          "; the polytope is not a lattice polytope of its stated dimension");
}

}  // namespace gorenstein::lattice

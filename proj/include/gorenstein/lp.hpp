#pragma once

// A small dense two-phase simplex over exact rationals, with Bland's rule.
// Used for vertex extremeness tests and bounding boxes of H-polytopes; sizes
// are a few dozen rows and columns.

#include <optional>
#include <vector>

#include "gorenstein/arith.hpp"

namespace gorenstein::lattice::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  Rational value;
  RationalVector x;
};

namespace detail {

class Tableau {
 public:
  Tableau(const std::vector<RationalVector>& a, const RationalVector& b)
      : m_(a.size()), n_(a.empty() ? 0 : a.front().size()) {
    width_ = n_ + m_;
    rows_.assign(m_, RationalVector(width_ + 1, Rational(0)));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = b[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
      rows_[i][n_ + i] = 1;
      rows_[i][width_] = flip ? Rational(-b[i]) : b[i];
      basis_[i] = n_ + i;
    }
  }

  // Maximizes cost·x over columns allowed by `allowed`; false on unbounded.
  bool optimize(const RationalVector& cost, std::size_t allowed) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed && !entering; ++j) {
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < m_; ++i)
          if (rows_[i][j] != 0) reduced -= cost[basis_[i]] * rows_[i][j];
        if (reduced > 0) entering = j;
      }
      if (!entering) return true;
      const std::size_t j = *entering;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (rows_[i][j] <= 0) continue;
        Rational ratio = rows_[i][width_] / rows_[i][j];
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, j);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = rows_[r][c];
    for (auto& x : rows_[r]) x /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j = 0; j <= width_; ++j) rows_[i][j] -= f * rows_[r][j];
    }
    basis_[r] = c;
  }

  // Pivots artificial columns out of the basis where possible.
  void expel_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (rows_[i][j] != 0) {
          pivot(i, j);
          break;
        }
    }
  }

  Rational artificial_sum() const {
    Rational s = 0;
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] >= n_) s += rows_[i][width_];
    return s;
  }

  RationalVector solution() const {
    RationalVector x(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = rows_[i][width_];
    return x;
  }

  std::size_t variables() const { return n_; }
  std::size_t width() const { return width_; }

 private:
  std::size_t m_;
  std::size_t n_;
  std::size_t width_ = 0;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// max c·x subject to A x = b, x >= 0.
inline Result maximize_standard(const std::vector<RationalVector>& a, const RationalVector& b,
                                const RationalVector& c) {
  detail::Tableau tab(a, b);
  const std::size_t n = tab.variables();
  RationalVector phase1(tab.width(), Rational(0));
  for (std::size_t j = n; j < tab.width(); ++j) phase1[j] = -1;
  tab.optimize(phase1, tab.width());
  if (tab.artificial_sum() != 0) return {Status::infeasible, {}, {}};
  tab.expel_artificials();
  RationalVector phase2(tab.width(), Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  if (!tab.optimize(phase2, n)) return {Status::unbounded, {}, {}};
  Result r{Status::optimal, 0, tab.solution()};
  for (std::size_t j = 0; j < n; ++j) r.value += c[j] * r.x[j];
  return r;
}

/// max c·x subject to A x <= b with x free.
inline Result maximize(const std::vector<RationalVector>& a, const RationalVector& b, const RationalVector& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  // x = u - w, slack s: [A | -A | I] (u, w, s) = b.
  std::vector<RationalVector> std_a(m, RationalVector(2 * n + m, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std_a[i][j] = a[i][j];
      std_a[i][n + j] = -a[i][j];
    }
    std_a[i][2 * n + i] = 1;
  }
  RationalVector std_c(2 * n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    std_c[j] = c[j];
    std_c[n + j] = -c[j];
  }
  Result r = maximize_standard(std_a, b, std_c);
  if (r.status != Status::optimal) return r;
  RationalVector x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = r.x[j] - r.x[n + j];
  r.x = std::move(x);
  return r;
}

/// Whether p lies in the convex hull of `points`.
inline bool in_convex_hull(const std::vector<IntVector>& points, const IntVector& p) {
  if (points.empty()) return false;
  const std::size_t dim = p.size();
  std::vector<RationalVector> a(dim + 1, RationalVector(points.size(), Rational(0)));
  RationalVector b(dim + 1);
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t j = 0; j < points.size(); ++j) a[k][j] = points[j][k];
    b[k] = p[k];
  }
  for (std::size_t j = 0; j < points.size(); ++j) a[dim][j] = 1;
  b[dim] = 1;
  return maximize_standard(a, b, RationalVector(points.size(), Rational(0))).status != Status::infeasible;
}

}  // namespace gorenstein::lattice::lp

#pragma once

// Exact linear algebra over Q for affine hulls and coordinate charts.

#include <algorithm>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gorenstein/arith.hpp"

namespace gorenstein::lattice {

/// An affine equation normal · x = rhs with integer data.
struct Equation {
  IntVector normal;
  Int rhs = 0;

  friend auto operator<=>(const Equation&, const Equation&) = default;
};

/// Row-reduces `rows`, pivoting only in columns [0, cols) and choosing pivot
/// columns from the right. Entries past `cols` (an rhs) are carried along.
/// Returns the nonzero reduced rows, each with a 1 at its pivot and zeros at
/// the other pivots, together with the pivot columns.
inline std::pair<std::vector<RationalVector>, std::vector<int>> rref_from_right(std::vector<RationalVector> rows,
                                                                                int cols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = cols - 1; c >= 0 && r < rows.size(); --c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Rational p = rows[r][c];
    for (auto& x : rows[r]) x /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return {std::move(rows), std::move(pivots)};
}

/// Coordinates on an affine subspace of Q^N obtained by keeping a subset of
/// the ambient coordinates. Each dropped ("dependent") coordinate is an
/// affine function of the kept ("free") ones. Dependent coordinates are the
/// right-most ones possible, so for the hyperplane z_1 + ... + z_n = 2 the
/// chart simply drops z_n.
class AffineChart {
 public:
  AffineChart() = default;

  /// Chart of the solution set of `equations` in Q^ambient_dim. Throws
  /// PreconditionError when the system is inconsistent.
  AffineChart(int ambient_dim, const std::vector<Equation>& equations) : ambient_dim_(ambient_dim) {
    std::vector<RationalVector> rows;
    for (const auto& e : equations) {
      RationalVector row(e.normal.begin(), e.normal.end());
      row.emplace_back(e.rhs);
      rows.push_back(std::move(row));
    }
    // Pivot only among the coefficient columns; an all-zero row with nonzero
    // rhs signals inconsistency.
    auto [reduced, pivots] = rref_from_right(rows, ambient_dim);
    std::vector<bool> dependent(static_cast<std::size_t>(ambient_dim), false);
    for (int p : pivots) dependent[p] = true;
    for (int c = 0; c < ambient_dim; ++c) (dependent[c] ? dependent_ : free_).push_back(c);
    // Consistent iff appending the rhs column does not raise the rank.
    auto check = rref_from_right(rows, ambient_dim + 1);
    if (check.second.size() > pivots.size())
      throw PreconditionError("affine equation system is inconsistent");

    std::vector<std::pair<int, std::size_t>> order;
    for (std::size_t i = 0; i < pivots.size(); ++i) order.emplace_back(pivots[i], i);
    std::sort(order.begin(), order.end());
    unimodular_ = true;
    for (auto [col, idx] : order) {
      const auto& row = reduced[idx];
      // x_col + sum_f row[f] x_f = rhs  =>  x_col = rhs - sum_f row[f] x_f
      RationalVector coeff;
      for (int f : free_) {
        coeff.push_back(-row[f]);
        if (denominator(coeff.back()) != 1) unimodular_ = false;
      }
      const Rational offset = row[ambient_dim];
      if (denominator(offset) != 1) unimodular_ = false;
      coefficients_.push_back(std::move(coeff));
      offsets_.push_back(offset);
    }
  }

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(free_.size()); }
  const std::vector<int>& free_coordinates() const { return free_; }
  const std::vector<int>& dependent_coordinates() const { return dependent_; }
  const std::vector<RationalVector>& coefficients() const { return coefficients_; }
  const RationalVector& offsets() const { return offsets_; }

  /// True when the dependent coordinates are integer-affine functions of the
  /// free ones, i.e. dropping them maps the affine lattice onto Z^dim.
  bool unimodular() const { return unimodular_; }

  IntVector project(std::span<const Int> x) const {
    IntVector y;
    y.reserve(free_.size());
    for (int f : free_) y.push_back(x[f]);
    return y;
  }

  /// Ambient point with free coordinates y on the affine subspace scaled by t
  /// (the subspace of tP for a polytope P on this chart).
  RationalVector lift(std::span<const Rational> y, Int t = 1) const {
    RationalVector x(static_cast<std::size_t>(ambient_dim_));
    for (std::size_t k = 0; k < free_.size(); ++k) x[free_[k]] = y[k];
    for (std::size_t i = 0; i < dependent_.size(); ++i) {
      Rational v = offsets_[i] * t;
      for (std::size_t k = 0; k < free_.size(); ++k) v += coefficients_[i][k] * y[k];
      x[dependent_[i]] = v;
    }
    return x;
  }

  /// Integer lift; nullopt when some dependent coordinate is not integral.
  std::optional<IntVector> lift_integral(std::span<const Int> y, Int t = 1) const {
    IntVector x(static_cast<std::size_t>(ambient_dim_), 0);
    for (std::size_t k = 0; k < free_.size(); ++k) x[free_[k]] = y[k];
    for (std::size_t i = 0; i < dependent_.size(); ++i) {
      Rational v = offsets_[i] * t;
      for (std::size_t k = 0; k < free_.size(); ++k) v += coefficients_[i][k] * y[k];
      if (denominator(v) != 1) return std::nullopt;
      x[dependent_[i]] = to_int(numerator(v));
    }
    return x;
  }

  /// Rewrites the linear form a·x + constant restricted to the subspace as
  /// a'·y + constant' in free coordinates (t scales the subspace offsets).
  std::pair<RationalVector, Rational> pull_back(std::span<const Int> a, Rational constant, Int t = 1) const {
    RationalVector out;
    for (int f : free_) out.emplace_back(a[f]);
    for (std::size_t i = 0; i < dependent_.size(); ++i) {
      const Int ac = a[dependent_[i]];
      if (ac == 0) continue;
      for (std::size_t k = 0; k < free_.size(); ++k) out[k] += coefficients_[i][k] * ac;
      constant += offsets_[i] * ac * t;
    }
    return {std::move(out), std::move(constant)};
  }

 private:
  int ambient_dim_ = 0;
  std::vector<int> free_;
  std::vector<int> dependent_;
  std::vector<RationalVector> coefficients_;
  RationalVector offsets_;
  bool unimodular_ = true;
};

/// Integer basis of {a : D a = 0} for the rows D, via leftmost-pivot RREF.
inline std::vector<IntVector> integer_kernel(const std::vector<IntVector>& rows, int cols) {
  std::vector<RationalVector> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  std::vector<int> pivot_of_row;
  std::size_t rank = 0;
  for (int c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t sel = rank;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    const Rational p = m[rank][c];
    for (auto& x : m[rank]) x /= p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    pivot_of_row.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : pivot_of_row) is_pivot[p] = true;
  std::vector<IntVector> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(static_cast<std::size_t>(cols), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_of_row.size(); ++i) v[pivot_of_row[i]] = -m[i][f];
    basis.push_back(primitive_integer_multiple(v));
  }
  return basis;
}

/// Rank of a set of integer vectors.
inline int rank_of(const std::vector<IntVector>& rows, int cols) {
  return cols - static_cast<int>(integer_kernel(rows, cols).size());
}

}  // namespace gorenstein::lattice

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace machh {

/// Dense row-major matrix over a field.
template <typename Field>
class Matrix {
 public:
  using Scalar = typename Field::Scalar;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Scalar& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

template <typename Field>
Matrix<Field> multiply(const Field& field, const Matrix<Field>& a,
                       const Matrix<Field>& b) {
  Matrix<Field> out(a.rows(), b.cols(), field.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (field.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = field.add(out(i, j), field.mul(a(i, k), b(k, j)));
      }
    }
  }
  return out;
}

template <typename Field>
bool is_zero_matrix(const Field& field, const Matrix<Field>& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!field.is_zero(a(i, j))) return false;
    }
  }
  return true;
}

/// Reduces `a` in place to row echelon form and returns the pivot columns.
/// Pivots are taken in increasing column order, first nonzero row first.
template <typename Field>
std::vector<std::size_t> row_echelon(const Field& field, Matrix<Field>& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && field.is_zero(a(sel, col))) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t j = col; j < a.cols(); ++j) std::swap(a(sel, j), a(row, j));
    }
    const auto inv = field.div(field.one(), a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = field.mul(a(row, j), inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || field.is_zero(a(r, col))) continue;
      const auto f = a(r, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        if (!field.is_zero(a(row, j))) field.sub_mul(a(r, j), f, a(row, j));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Field>
std::size_t rank(const Field& field, Matrix<Field> a) {
  return row_echelon(field, a).size();
}

/// Sparse column: (row index, value) pairs sorted by row index, no zeros.
template <typename Field>
using SparseColumn = std::vector<std::pair<std::uint32_t, typename Field::Scalar>>;

/// Rank of a sparse matrix given by its columns, via left-to-right column
/// reduction keyed on the largest row index of each column.
template <typename Field>
std::size_t sparse_rank(const Field& field, std::vector<SparseColumn<Field>> columns,
                        std::size_t row_count) {
  using Scalar = typename Field::Scalar;
  std::vector<std::int64_t> owner(row_count, -1);
  std::size_t rank = 0;
  SparseColumn<Field> scratch;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    SparseColumn<Field>& col = columns[c];
    while (!col.empty()) {
      const std::uint32_t low = col.back().first;
      const std::int64_t o = owner[low];
      if (o < 0) break;
      const SparseColumn<Field>& pivot = columns[static_cast<std::size_t>(o)];
      const Scalar f = field.div(col.back().second, pivot.back().second);
      // col -= f * pivot, merging two sorted lists.
      scratch.clear();
      auto a = col.begin();
      auto b = pivot.begin();
      while (a != col.end() || b != pivot.end()) {
        if (b == pivot.end() || (a != col.end() && a->first < b->first)) {
          scratch.push_back(std::move(*a++));
        } else if (a == col.end() || b->first < a->first) {
          scratch.emplace_back(b->first, field.neg(field.mul(f, b->second)));
          ++b;
        } else {
          Scalar v = std::move(a->second);
          field.sub_mul(v, f, b->second);
          if (!field.is_zero(v)) scratch.emplace_back(a->first, std::move(v));
          ++a;
          ++b;
        }
      }
      col.swap(scratch);
    }
    if (!col.empty()) {
      owner[col.back().first] = static_cast<std::int64_t>(c);
      ++rank;
    }
  }
  return rank;
}

/// Echelon basis of a growing subspace of F^n with distinct leading indices.
///
/// Each stored row is normalized so its leading entry is one.
template <typename Field>
class EchelonBasis {
 public:
  using Scalar = typename Field::Scalar;
  using Vector = std::vector<Scalar>;

  EchelonBasis() = default;
  explicit EchelonBasis(std::size_t dim) : leading_row_(dim, -1) {}

  std::size_t dim() const { return leading_row_.size(); }
  std::size_t size() const { return rows_.size(); }
  const Vector& row(std::size_t i) const { return rows_[i]; }

  /// Subtracts stored rows from `v` until its leading index is not a pivot.
  /// Appends (row, factor) for every row used, so the original vector equals
  /// the residual plus Σ factor · row. Returns the residual's leading index,
  /// or dim() if the residual is zero.
  std::size_t reduce(const Field& field, Vector& v,
                     std::vector<std::pair<std::size_t, Scalar>>* used) const {
    std::size_t idx = 0;
    while (true) {
      while (idx < v.size() && field.is_zero(v[idx])) ++idx;
      if (idx == v.size()) return idx;
      const std::int64_t r = leading_row_[idx];
      if (r < 0) return idx;
      const Vector& row = rows_[static_cast<std::size_t>(r)];
      const Scalar f = v[idx];
      for (std::size_t j = idx; j < v.size(); ++j) {
        if (!field.is_zero(row[j])) field.sub_mul(v[j], f, row[j]);
      }
      if (used) used->emplace_back(static_cast<std::size_t>(r), f);
      ++idx;
    }
  }

  /// Adds a residual returned by reduce() with the given leading index.
  /// Returns the stored row's position; the factor used for normalization
  /// is written to `scale` (stored row = v / scale).
  std::size_t add_reduced(const Field& field, Vector v, std::size_t lead,
                          Scalar* scale) {
    const Scalar s = v[lead];
    const Scalar inv = field.div(field.one(), s);
    for (std::size_t j = lead; j < v.size(); ++j) {
      if (!field.is_zero(v[j])) v[j] = field.mul(v[j], inv);
    }
    if (scale) *scale = s;
    leading_row_[lead] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back(std::move(v));
    return rows_.size() - 1;
  }

 private:
  std::vector<std::int64_t> leading_row_;
  std::vector<Vector> rows_;
};

}  // namespace machh

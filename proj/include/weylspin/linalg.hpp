#pragma once
// Exact linear algebra over an arbitrary exact field: echelon reduction,
// rank, right kernel with a dimension certificate, determinant, linear
// solving, and an incremental span accumulator used by the holonomy code.
//
// Pivoting is deterministic (first nonzero scanning rows top-down), so the
// serial and OpenMP paths produce bit-identical results; the parallel path
// only distributes the independent row updates below a chosen pivot.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "weylspin/matrix.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace weylspin {

enum class EliminationMode { kSerial, kParallel };

template <typename T>
struct EchelonResult {
  Matrix<T> mat;                        // reduced row echelon form
  std::vector<std::size_t> pivot_cols;  // one per pivot row
  std::size_t rank = 0;
  int swap_sign = 1;  // parity of row swaps (for determinants)
};

template <typename T>
EchelonResult<T> reduced_row_echelon(Matrix<T> m,
                                     EliminationMode mode = EliminationMode::kSerial) {
  EchelonResult<T> res;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = rows;
    for (std::size_t r = pivot_row; r < rows; ++r) {
      if (!field_is_zero(m(r, col))) {
        sel = r;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != pivot_row) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(pivot_row, c), m(sel, c));
      res.swap_sign = -res.swap_sign;
    }
    // Normalize the pivot row.
    T inv = T(1) / m(pivot_row, col);
    for (std::size_t c = col; c < cols; ++c) {
      if (!field_is_zero(m(pivot_row, c))) m(pivot_row, c) = m(pivot_row, c) * inv;
    }
    // Eliminate the pivot column from every other row.
    auto update_row = [&](std::size_t r) {
      if (r == pivot_row) return;
      T f = m(r, col);
      if (field_is_zero(f)) return;
      m(r, col) = T();
      for (std::size_t c = col + 1; c < cols; ++c) {
        if (field_is_zero(m(pivot_row, c))) continue;
        m(r, c) -= f * m(pivot_row, c);
      }
    };
    if (mode == EliminationMode::kParallel) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
      for (long r = 0; r < static_cast<long>(rows); ++r)
        update_row(static_cast<std::size_t>(r));
#else
      for (std::size_t r = 0; r < rows; ++r) update_row(r);
#endif
    } else {
      for (std::size_t r = 0; r < rows; ++r) update_row(r);
    }
    res.pivot_cols.push_back(col);
    ++pivot_row;
  }
  res.rank = pivot_row;
  res.mat = std::move(m);
  return res;
}

template <typename T>
std::size_t rank(const Matrix<T>& m, EliminationMode mode = EliminationMode::kSerial) {
  return reduced_row_echelon(m, mode).rank;
}

// Basis of the right kernel {x : m x = 0}.  The rank-nullity certificate
// rank + |basis| == cols holds by construction and is asserted.
template <typename T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m,
                                         EliminationMode mode = EliminationMode::kSerial) {
  EchelonResult<T> ech = reduced_row_echelon(m, mode);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<T> v(cols);
    v[free_col] = T(1);
    for (std::size_t p = 0; p < ech.pivot_cols.size(); ++p)
      v[ech.pivot_cols[p]] = -ech.mat(p, free_col);
    basis.push_back(std::move(v));
  }
  if (ech.rank + basis.size() != cols)
    throw std::logic_error("kernel certificate violated");
  return basis;
}

template <typename T>
T determinant(const Matrix<T>& m, EliminationMode mode = EliminationMode::kSerial) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square");
  // Forward elimination without pivot normalization keeps the product simple.
  Matrix<T> a = m;
  const std::size_t n = a.rows();
  T det = T(1);
  (void)mode;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = n;
    for (std::size_t r = col; r < n; ++r)
      if (!field_is_zero(a(r, col))) {
        sel = r;
        break;
      }
    if (sel == n) return T();
    if (sel != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(sel, c));
      det = -det;
    }
    det = det * a(col, col);
    T inv = T(1) / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      T f = a(r, col);
      if (field_is_zero(f)) continue;
      f = f * inv;
      for (std::size_t c = col; c < n; ++c) {
        if (field_is_zero(a(col, c))) continue;
        a(r, c) -= f * a(col, c);
      }
    }
  }
  return det;
}

// Exact inverse by Gauss-Jordan on [m | I]; throws std::invalid_argument
// when m is singular (as an element of the matrix algebra over the field).
template <typename T>
Matrix<T> matrix_inverse(const Matrix<T>& m, EliminationMode mode = EliminationMode::kSerial) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  EchelonResult<T> ech = reduced_row_echelon(std::move(aug), mode);
  if (ech.rank < n || ech.pivot_cols[n - 1] != n - 1)
    throw std::invalid_argument("matrix is singular");
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.mat(i, n + j);
  return inv;
}

// Solves A x = b exactly.  Returns std::nullopt when inconsistent; when the
// solution is not unique the free variables are set to zero.
template <typename T>
std::optional<std::vector<T>> solve_linear(const Matrix<T>& a, const std::vector<T>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve shape");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  EchelonResult<T> ech = reduced_row_echelon(aug);
  for (std::size_t c : ech.pivot_cols)
    if (c == a.cols()) return std::nullopt;  // pivot in the constant column
  std::vector<T> x(a.cols());
  for (std::size_t p = 0; p < ech.pivot_cols.size(); ++p)
    x[ech.pivot_cols[p]] = ech.mat(p, a.cols());
  return x;
}

// Incremental row space: insert vectors one at a time, reducing against the
// stored reduced basis.  Supports growth detection and membership tests.
template <typename T>
class SpanAccumulator {
public:
  explicit SpanAccumulator(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<T>>& basis() const { return rows_; }

  // Returns true when the vector enlarged the span.
  bool insert(std::vector<T> v) {
    reduce(&v);
    std::size_t lead = leading_index(v);
    if (lead == dim_) return false;
    T inv = T(1) / v[lead];
    for (std::size_t c = lead; c < dim_; ++c)
      if (!field_is_zero(v[c])) v[c] = v[c] * inv;
    // Back-substitute into existing rows to keep the basis reduced.
    for (auto& row : rows_) {
      T f = row[lead];
      if (field_is_zero(f)) continue;
      for (std::size_t c = lead; c < dim_; ++c) {
        if (field_is_zero(v[c])) continue;
        row[c] -= f * v[c];
      }
    }
    std::size_t pos = 0;
    while (pos < rows_.size() && leads_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    leads_.insert(leads_.begin() + pos, lead);
    return true;
  }

  bool contains(std::vector<T> v) const {
    reduce(&v);
    return leading_index(v) == dim_;
  }

private:
  void reduce(std::vector<T>* v) const {
    if (v->size() != dim_) throw std::invalid_argument("span accumulator shape");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      T f = (*v)[leads_[r]];
      if (field_is_zero(f)) continue;
      for (std::size_t c = leads_[r]; c < dim_; ++c) {
        if (field_is_zero(rows_[r][c])) continue;
        (*v)[c] -= f * rows_[r][c];
      }
    }
  }

  std::size_t leading_index(const std::vector<T>& v) const {
    for (std::size_t c = 0; c < dim_; ++c)
      if (!field_is_zero(v[c])) return c;
    return dim_;
  }

  std::size_t dim_;
  std::vector<std::vector<T>> rows_;
  std::vector<std::size_t> leads_;
};

int hardware_threads();  // OpenMP max threads (1 without OpenMP)

}  // namespace weylspin

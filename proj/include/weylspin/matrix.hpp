#pragma once
// Dense matrices over an exact field, plus exact elimination kernels.
//
// The scalar type T must support +, -, *, /, unary -, default construction
// (zero), equality, and a free function field_is_zero(const T&).  Division is
// only invoked on values that passed the zero test, so every instantiation is
// exact.  Elimination is provided in two forms with identical results: a
// serial reference and an OpenMP-parallel variant (row updates below the
// pivot are independent).

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "weylspin/exact_scalar.hpp"

namespace weylspin {

inline bool field_is_zero(const ExactScalar& v) { return v.is_zero(); }
inline bool field_is_zero(const Rational& v) { return v == 0; }

template <typename T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const T& v : data_)
      if (!field_is_zero(v)) return false;
    return true;
  }

  friend bool operator==(const Matrix& l, const Matrix& r) {
    return l.rows_ == r.rows_ && l.cols_ == r.cols_ && l.data_ == r.data_;
  }
  friend bool operator!=(const Matrix& l, const Matrix& r) { return !(l == r); }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix l, const Matrix& r) { return l += r; }
  friend Matrix operator-(Matrix l, const Matrix& r) { return l -= r; }
  friend Matrix operator-(const Matrix& m) {
    Matrix out(m.rows_, m.cols_);
    for (std::size_t k = 0; k < m.data_.size(); ++k) out.data_[k] = -m.data_[k];
    return out;
  }

  friend Matrix operator*(const Matrix& l, const Matrix& r) {
    if (l.cols_ != r.rows_) throw std::invalid_argument("matrix product shape");
    Matrix out(l.rows_, r.cols_);
    for (std::size_t i = 0; i < l.rows_; ++i)
      for (std::size_t k = 0; k < l.cols_; ++k) {
        const T& a = l(i, k);
        if (field_is_zero(a)) continue;  // gamma matrices are sparse
        for (std::size_t j = 0; j < r.cols_; ++j) {
          const T& b = r(k, j);
          if (field_is_zero(b)) continue;
          out(i, j) += a * b;
        }
      }
    return out;
  }

  friend Matrix operator*(const T& s, const Matrix& m) {
    Matrix out(m.rows_, m.cols_);
    if (field_is_zero(s)) return out;
    for (std::size_t k = 0; k < m.data_.size(); ++k) out.data_[k] = s * m.data_[k];
    return out;
  }

  std::vector<T> apply(const std::vector<T>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix apply shape");
    std::vector<T> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (field_is_zero((*this)(i, j)) || field_is_zero(x[j])) continue;
        y[i] += (*this)(i, j) * x[j];
      }
    return y;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  T trace() const {
    T t{};
    for (std::size_t k = 0; k < rows_ && k < cols_; ++k) t += (*this)(k, k);
    return t;
  }

  friend Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
  friend Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

  // Kronecker product; used to assemble Clifford generators.
  friend Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        if (field_is_zero(a(i, j))) continue;
        for (std::size_t k = 0; k < b.rows_; ++k)
          for (std::size_t l = 0; l < b.cols_; ++l) {
            if (field_is_zero(b(k, l))) continue;
            out(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
          }
      }
    return out;
  }

private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

// Conjugate transpose for ExactScalar matrices.
inline Matrix<ExactScalar> dagger(const Matrix<ExactScalar>& m) {
  Matrix<ExactScalar> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j).conj();
  return out;
}

}  // namespace weylspin

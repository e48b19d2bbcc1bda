#ifndef PRELIE_MATRIX_HPP
#define PRELIE_MATRIX_HPP

#include "prelie/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace prelie {

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Vector = std::vector<Scalar>;

/// Dense exact rational matrix. Row-major, 0-based internally; the 1-based
/// convention of the file formats is handled at the serialization layer.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& s : data_)
      if (s != 0) return false;
    return true;
  }

  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator+(const Matrix& o) const {
    require_same_shape(o, "matrix addition");
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    require_same_shape(o, "matrix subtraction");
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
      throw DimensionMismatch("matrix product: inner dimensions disagree");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Scalar& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  Matrix operator*(const Scalar& s) const {
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * s;
    return r;
  }

  Matrix operator-() const { return *this * Scalar(-1); }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector product");
    Vector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  Vector column(std::size_t j) const {
    Vector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  /// Reduced row echelon form; returns pivot column indices.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = row;
      while (sel < rows_ && (*this)(sel, col) == 0) ++sel;
      if (sel == rows_) continue;
      swap_rows(sel, row);
      Scalar inv = Scalar(1) / (*this)(row, col);
      for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row) continue;
        Scalar f = (*this)(i, col);
        if (f == 0) continue;
        for (std::size_t j = col; j < cols_; ++j) (*this)(i, j) -= f * (*this)(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix copy = *this;
    return copy.rref().size();
  }

  Scalar determinant() const {
    if (!is_square()) throw DimensionMismatch("determinant of non-square matrix");
    Matrix m = *this;
    Scalar det = 1;
    for (std::size_t col = 0; col < m.cols_; ++col) {
      std::size_t sel = col;
      while (sel < m.rows_ && m(sel, col) == 0) ++sel;
      if (sel == m.rows_) return Scalar(0);
      if (sel != col) {
        m.swap_rows(sel, col);
        det = -det;
      }
      det *= m(col, col);
      Scalar inv = Scalar(1) / m(col, col);
      for (std::size_t i = col + 1; i < m.rows_; ++i) {
        Scalar f = m(i, col) * inv;
        if (f == 0) continue;
        for (std::size_t j = col; j < m.cols_; ++j) m(i, j) -= f * m(col, j);
      }
    }
    return det;
  }

  bool invertible() const { return is_square() && determinant() != 0; }

  /// Exact inverse. Throws SingularMatrix when det = 0.
  Matrix inverse() const {
    if (!is_square()) throw DimensionMismatch("inverse of non-square matrix");
    std::size_t n = rows_;
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = 1;
    }
    auto pivots = aug.rref();
    if (pivots.size() != n || pivots.back() != n - 1)
      throw SingularMatrix("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
  }

  /// Exact basis of {v : m v = 0}, in reduced echelon normal form: one basis
  /// vector per free column, unit entry in that column, ordered by column.
  std::vector<Vector> nullspace() const {
    Matrix m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      Vector v(cols_);
      v[free] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  void require_same_shape(const Matrix& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch(what);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }

  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

inline Matrix operator*(const Scalar& s, const Matrix& m) { return m * s; }

/// Commutator [A, B] = AB - BA.
inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Cube tensor c[i][j][k] holding structure constants: e_i * e_j = sum_k c^k_{ij} e_k.
/// Stored as c(i, j, k) with all indices 0-based.
class Tensor3 {
 public:
  Tensor3() : n_(0) {}
  explicit Tensor3(std::size_t n) : n_(n), data_(n * n * n) {}

  std::size_t dim() const { return n_; }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * n_ + j) * n_ + k];
  }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n_ + j) * n_ + k];
  }

  bool operator==(const Tensor3& o) const { return n_ == o.n_ && data_ == o.data_; }
  bool operator!=(const Tensor3& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& s : data_)
      if (s != 0) return false;
    return true;
  }

  /// Product of basis vectors: coordinates of e_i * e_j.
  Vector product(std::size_t i, std::size_t j) const {
    Vector v(n_);
    for (std::size_t k = 0; k < n_; ++k) v[k] = (*this)(i, j, k);
    return v;
  }

  /// Bilinear extension to coordinate vectors.
  Vector apply(const Vector& x, const Vector& y) const {
    if (x.size() != n_ || y.size() != n_) throw DimensionMismatch("Tensor3::apply");
    Vector r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (y[j] == 0) continue;
        Scalar f = x[i] * y[j];
        for (std::size_t k = 0; k < n_; ++k) {
          const Scalar& c = (*this)(i, j, k);
          if (c != 0) r[k] += f * c;
        }
      }
    }
    return r;
  }

 private:
  std::size_t n_;
  std::vector<Scalar> data_;
};

inline Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector addition");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector subtraction");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vector operator*(const Scalar& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

inline Vector& operator+=(Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector addition");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline bool is_zero(const Vector& v) {
  for (const auto& s : v)
    if (s != 0) return false;
  return true;
}

inline Vector unit_vector(std::size_t dim, std::size_t index) {
  Vector v(dim);
  v[index] = 1;
  return v;
}

}  // namespace prelie

#endif  // PRELIE_MATRIX_HPP

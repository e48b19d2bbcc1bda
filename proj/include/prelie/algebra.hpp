#ifndef PRELIE_ALGEBRA_HPP
#define PRELIE_ALGEBRA_HPP

#include "prelie/matrix.hpp"
#include "prelie/report.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace prelie {

struct NotPreLie : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidBimodule : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Associator symmetry check: (x,y,z) = (y,x,z) on all basis triples.
/// On failure reports the first violating (i,j,k), 1-based lexicographic.
inline CheckReport check_pre_lie(const Tensor3& c) {
  std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;  // (x,x,z) = (x,x,z) trivially
      for (std::size_t k = 0; k < n; ++k) {
        // (e_i . e_j) . e_k - e_i . (e_j . e_k)
        Vector lhs = c.apply(c.product(i, j), unit_vector(n, k)) -
                     c.apply(unit_vector(n, i), c.product(j, k));
        Vector rhs = c.apply(c.product(j, i), unit_vector(n, k)) -
                     c.apply(unit_vector(n, j), c.product(i, k));
        if (lhs != rhs)
          return CheckReport::fail("associator symmetry fails at (" +
                                   std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                   "," + std::to_string(k + 1) + ")");
      }
    }
  return CheckReport::pass();
}

/// Finite-dimensional pre-Lie algebra: dimension plus structure constants.
struct Algebra {
  std::size_t dim = 0;
  Tensor3 products;
  std::vector<std::string> labels;  // optional basis labels

  Algebra() = default;
  Algebra(std::size_t n, Tensor3 c) : dim(n), products(std::move(c)) {
    if (products.dim() != dim) throw DimensionMismatch("Algebra: tensor dim mismatch");
  }

  static Algebra zero(std::size_t n) { return Algebra(n, Tensor3(n)); }

  Vector multiply(const Vector& x, const Vector& y) const { return products.apply(x, y); }

  /// Left multiplication operator L_x as a matrix, x given in coordinates.
  Matrix left_mult(const Vector& x) const {
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      Vector col = multiply(x, unit_vector(dim, j));
      for (std::size_t i = 0; i < dim; ++i) m(i, j) = col[i];
    }
    return m;
  }

  /// Right multiplication operator R_x: y -> y . x.
  Matrix right_mult(const Vector& x) const {
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      Vector col = multiply(unit_vector(dim, j), x);
      for (std::size_t i = 0; i < dim; ++i) m(i, j) = col[i];
    }
    return m;
  }
};

/// Antisymmetric bracket tensor [x,y] = x.y - y.x of the sub-adjacent Lie
/// algebra. Throws NotPreLie if the input fails check_pre_lie; the output is
/// verified to satisfy the Jacobi identity.
inline Tensor3 sub_adjacent(const Algebra& alg) {
  if (auto rep = check_pre_lie(alg.products); !rep)
    throw NotPreLie("sub_adjacent: " + rep.detail);
  std::size_t n = alg.dim;
  Tensor3 b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        b(i, j, k) = alg.products(i, j, k) - alg.products(j, i, k);
  // Jacobi on basis triples
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector jac = b.apply(b.product(i, j), unit_vector(n, k)) +
                     b.apply(b.product(j, k), unit_vector(n, i)) +
                     b.apply(b.product(k, i), unit_vector(n, j));
        if (!is_zero(jac)) throw NotPreLie("sub_adjacent bracket violates Jacobi");
      }
  return b;
}

/// Bimodule (V; L, R) over a pre-Lie algebra: one pair of module matrices per
/// basis vector of the base algebra.
struct Bimodule {
  Algebra base;
  std::size_t module_dim = 0;
  std::vector<Matrix> L;  // L[i] = action of e_i from the left
  std::vector<Matrix> R;  // R[i] = action of e_i from the right

  Bimodule() = default;
  Bimodule(Algebra a, std::size_t m, std::vector<Matrix> l, std::vector<Matrix> r)
      : base(std::move(a)), module_dim(m), L(std::move(l)), R(std::move(r)) {
    if (L.size() != base.dim || R.size() != base.dim)
      throw DimensionMismatch("Bimodule: one L and one R matrix per basis index");
    for (const auto& mat : L)
      if (mat.rows() != module_dim || mat.cols() != module_dim)
        throw DimensionMismatch("Bimodule: L matrix shape");
    for (const auto& mat : R)
      if (mat.rows() != module_dim || mat.cols() != module_dim)
        throw DimensionMismatch("Bimodule: R matrix shape");
  }

  /// Action L_x for x in coordinates.
  Matrix act_left(const Vector& x) const { return combine(L, x); }
  Matrix act_right(const Vector& x) const { return combine(R, x); }

 private:
  Matrix combine(const std::vector<Matrix>& ops, const Vector& x) const {
    Matrix m(module_dim, module_dim);
    for (std::size_t i = 0; i < base.dim; ++i)
      if (x[i] != 0) m = m + ops[i] * x[i];
    return m;
  }
};

/// Regular bimodule (g; L, R) built from the multiplication itself.
inline Bimodule regular_bimodule(const Algebra& alg) {
  std::vector<Matrix> L, R;
  for (std::size_t i = 0; i < alg.dim; ++i) {
    L.push_back(alg.left_mult(unit_vector(alg.dim, i)));
    R.push_back(alg.right_mult(unit_vector(alg.dim, i)));
  }
  return Bimodule(alg, alg.dim, std::move(L), std::move(R));
}

/// Trivial bimodule: the base field with zero actions.
inline Bimodule trivial_bimodule(const Algebra& alg) {
  std::vector<Matrix> zero(alg.dim, Matrix(1, 1));
  return Bimodule(alg, 1, zero, zero);
}

/// Bimodule axioms on all basis pairs:
///   L_x L_y - L_{x.y} = L_y L_x - L_{y.x}
///   L_x R_y - R_y L_x = R_{x.y} - R_y R_x
inline CheckReport check_bimodule(const Bimodule& b) {
  std::size_t n = b.base.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix Lij = b.act_left(b.base.products.product(i, j));
      Matrix Lji = b.act_left(b.base.products.product(j, i));
      if (b.L[i] * b.L[j] - Lij != b.L[j] * b.L[i] - Lji)
        return CheckReport::fail("left action identity fails at basis pair (" +
                                 std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      Matrix Rij = b.act_right(b.base.products.product(i, j));
      if (b.L[i] * b.R[j] - b.R[j] * b.L[i] != Rij - b.R[j] * b.R[i])
        return CheckReport::fail("mixed action identity fails at basis pair (" +
                                 std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  return CheckReport::pass();
}

/// Dual bimodule (V*; L* - R*, -R*): on the dual basis the actions are
/// new L_i = -(L_i - R_i)^T and new R_i = R_i^T.
inline Bimodule dual_bimodule(const Bimodule& b) {
  if (auto rep = check_bimodule(b); !rep)
    throw InvalidBimodule("dual_bimodule: " + rep.detail);
  std::vector<Matrix> L, R;
  for (std::size_t i = 0; i < b.base.dim; ++i) {
    L.push_back(-(b.L[i] - b.R[i]).transpose());
    R.push_back(b.R[i].transpose());
  }
  return Bimodule(b.base, b.module_dim, std::move(L), std::move(R));
}

/// Semidirect product pre-Lie algebra on g + V:
///   (x1+v1).(x2+v2) = x1.x2 + L_{x1} v2 + R_{x2} v1
inline Algebra semidirect_product(const Bimodule& b) {
  if (auto rep = check_bimodule(b); !rep)
    throw InvalidBimodule("semidirect_product: " + rep.detail);
  std::size_t n = b.base.dim, m = b.module_dim, d = n + m;
  Tensor3 c(d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = b.base.products(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t w = 0; w < m; ++w) {
        c(i, n + u, n + w) = b.L[i](w, u);   // e_i . f_u = L_{e_i} f_u
        c(n + u, i, n + w) = b.R[i](w, u);   // f_u . e_i = R_{e_i} f_u
      }
  return Algebra(d, std::move(c));
}

/// Linear map between tagged spaces ("g", "g*", "V", "V*", "g+V", ...).
/// Column convention: column j holds the image of the j-th domain basis vector.
struct LinearMap {
  Matrix matrix;
  std::string domain;
  std::string codomain;

  LinearMap() = default;
  LinearMap(Matrix m, std::string dom, std::string cod)
      : matrix(std::move(m)), domain(std::move(dom)), codomain(std::move(cod)) {}
};

}  // namespace prelie

#endif  // PRELIE_ALGEBRA_HPP

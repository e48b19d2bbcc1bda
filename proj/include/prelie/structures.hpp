#ifndef PRELIE_STRUCTURES_HPP
#define PRELIE_STRUCTURES_HPP

#include "prelie/twilled.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prelie {

struct NotSymmetric : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
inline Matrix require_symmetric(Matrix m, const char* what) {
  if (m.rows() != m.cols()) throw NotSymmetric(std::string(what) + ": not square");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i))
        throw NotSymmetric(std::string(what) + ": entries (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ") and transpose differ");
  return m;
}
}  // namespace detail

/// A symmetric 2-tensor r on g, carried by its coefficient grid r_{ij}.
/// The induced map sharp: g* -> g has the same matrix in the dual basis.
struct SymTensor2 {
  Matrix entries;

  SymTensor2() = default;
  explicit SymTensor2(Matrix m) : entries(detail::require_symmetric(std::move(m), "SymTensor2")) {}

  LinearMap sharp() const { return LinearMap(entries, "g*", "g"); }
};

/// A symmetric bilinear form B on g; natural: g -> g* has matrix B_{ij}.
struct SymForm2 {
  Matrix entries;

  SymForm2() = default;
  explicit SymForm2(Matrix m) : entries(detail::require_symmetric(std::move(m), "SymForm2")) {}

  LinearMap natural() const { return LinearMap(entries, "g", "g*"); }

  /// B(x, y) on coordinate vectors.
  Scalar pair(const Vector& x, const Vector& y) const {
    Vector bx = entries.apply(y);
    Scalar out = 0;
    for (std::size_t i = 0; i < x.size(); ++i) out += x[i] * bx[i];
    return out;
  }
};

namespace detail {
/// The module (g*; ad*, -R*) of a pre-Lie algebra, the home of sharp maps.
inline Bimodule coadjoint_module(const Algebra& alg) {
  return dual_bimodule(regular_bimodule(alg));
}

/// 2-cocycle identity F(x.y, z) - F(x, y.z) = F(y.x, z) - F(y, x.z) for a
/// (not necessarily symmetric) bilinear form with matrix F.
inline bool cocycle2_closed(const Algebra& alg, const Matrix& F) {
  std::size_t n = alg.dim;
  auto pair = [&](const Vector& x, const Vector& y) {
    Vector fy = F.apply(y);
    Scalar out = 0;
    for (std::size_t i = 0; i < n; ++i) out += x[i] * fy[i];
    return out;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        Scalar lhs = pair(alg.products.product(i, j), ek) -
                     pair(ei, alg.products.product(j, k));
        Scalar rhs = pair(alg.products.product(j, i), ek) -
                     pair(ej, alg.products.product(i, k));
        if (lhs != rhs) return false;
      }
  return true;
}
}  // namespace detail

/// r is an s-matrix when the cubic expression
///   -<xi, r#(eta).r#(zeta)> + <eta, r#(xi).r#(zeta)> + <zeta, [r#(xi), r#(eta)]>
/// vanishes on all dual-basis triples. Cross-checked against r# being an
/// O-operator on (g*; ad*, -R*).
inline CheckReport check_s_matrix(const Algebra& alg, const SymTensor2& r) {
  const Matrix& rs = r.entries;
  if (rs.rows() != alg.dim) throw DimensionMismatch("check_s_matrix");
  std::size_t n = alg.dim;
  bool direct = true;
  for (std::size_t i = 0; i < n && direct; ++i)
    for (std::size_t j = 0; j < n && direct; ++j)
      for (std::size_t k = 0; k < n && direct; ++k) {
        Vector ri = rs.column(i), rj = rs.column(j), rk = rs.column(k);
        Vector pjk = alg.multiply(rj, rk);
        Vector pik = alg.multiply(ri, rk);
        Vector bracket = alg.multiply(ri, rj) - alg.multiply(rj, ri);
        if (-pjk[i] + pik[j] + bracket[k] != 0) direct = false;
      }
  bool via_operator = bool(check_o_operator(detail::coadjoint_module(alg), rs));
  if (direct != via_operator)
    return CheckReport::fail("internal route disagreement (cubic vs operator)");
  if (!direct) return CheckReport::fail("cubic expression does not vanish");
  return CheckReport::pass();
}

/// B is pseudo-Hessian when it is nondegenerate and a 2-cocycle.
inline CheckReport check_pseudo_hessian(const Algebra& alg, const SymForm2& B) {
  if (B.entries.rows() != alg.dim) throw DimensionMismatch("check_pseudo_hessian");
  if (!B.entries.invertible()) return CheckReport::fail("form is degenerate");
  if (!detail::cocycle2_closed(alg, B.entries))
    return CheckReport::fail("cocycle identity fails");
  return CheckReport::pass();
}

/// (r, N) with the coupling N r# = r# N^* plus the agreement of the twisted
/// multiplications on g*. Cross-checked via the coupled structure
/// (r#, N, N^T) on (g*; ad*, -R*).
inline CheckReport check_kvn(const Algebra& alg, const SymTensor2& r, const Matrix& N) {
  if (auto rep = check_s_matrix(alg, r); !rep)
    throw ComponentCheckFailed("check_kvn: r: " + rep.detail);
  if (auto rep = check_nijenhuis(alg, N); !rep)
    throw ComponentCheckFailed("check_kvn: N: " + rep.detail);
  const Matrix& rs = r.entries;
  Bimodule dual = detail::coadjoint_module(alg);
  bool direct = N * rs == rs * N.transpose() &&
                detail::induced_tensor(dual, N * rs) ==
                    detail::twisted_induced_tensor(dual, rs, N.transpose());
  bool via_on = bool(check_on_structure(OnStructure(dual, rs, N, N.transpose())));
  if (direct != via_on)
    return CheckReport::fail("internal route disagreement (direct vs coupled structure)");
  if (!direct) return CheckReport::fail("coupling conditions fail");
  return CheckReport::pass();
}

/// (B, N) with B(N x, y) = B(x, N y) and the twisted form B_N still a
/// 2-cocycle. Cross-checked via the coupled structure ((B#)^{-1}, N, N^T).
inline CheckReport check_hn(const Algebra& alg, const SymForm2& B, const Matrix& N) {
  if (auto rep = check_pseudo_hessian(alg, B); !rep)
    throw ComponentCheckFailed("check_hn: B: " + rep.detail);
  if (auto rep = check_nijenhuis(alg, N); !rep)
    throw ComponentCheckFailed("check_hn: N: " + rep.detail);
  const Matrix& bm = B.entries;
  bool direct = N.transpose() * bm == bm * N &&
                detail::cocycle2_closed(alg, N.transpose() * bm);
  bool via_on = bool(check_on_structure(
      OnStructure(detail::coadjoint_module(alg), bm.inverse(), N, N.transpose())));
  if (direct != via_on)
    return CheckReport::fail("internal route disagreement (direct vs coupled structure)");
  if (!direct) return CheckReport::fail("coupling conditions fail");
  return CheckReport::pass();
}

/// Converts (B, N) into (r, N) with r# = (B#)^{-1}.
inline std::pair<SymTensor2, Matrix> kvn_from_hn(const Algebra& alg, const SymForm2& B,
                                                 const Matrix& N) {
  if (auto rep = check_hn(alg, B, N); !rep)
    throw ComponentCheckFailed("kvn_from_hn: " + rep.detail);
  SymTensor2 r(B.entries.inverse());
  if (auto rep = check_kvn(alg, r, N); !rep)
    throw ComponentCheckFailed("kvn_from_hn: output fails: " + rep.detail);
  return {std::move(r), N};
}

/// (r, B) with r an s-matrix, B a 2-cocycle, and the twisted form B_N also a
/// 2-cocycle for N = r# B#. B need not be nondegenerate. Cross-checked via
/// B# solving the strong Maurer-Cartan equation on g |><| g*_{r#}.
inline CheckReport check_kvb(const Algebra& alg, const SymTensor2& r, const SymForm2& B) {
  if (auto rep = check_s_matrix(alg, r); !rep)
    throw ComponentCheckFailed("check_kvb: r: " + rep.detail);
  if (!detail::cocycle2_closed(alg, B.entries))
    throw ComponentCheckFailed("check_kvb: B is not a 2-cocycle");
  Matrix N = r.entries * B.entries;
  bool direct = detail::cocycle2_closed(alg, N.transpose() * B.entries);
  bool via_mc = bool(check_strong_mc(
      twilled_from_o_operator(detail::coadjoint_module(alg), r.entries), B.entries));
  if (direct != via_mc)
    return CheckReport::fail("internal route disagreement (cocycle vs strong solution)");
  if (!direct) return CheckReport::fail("twisted form is not a 2-cocycle");
  return CheckReport::pass();
}

/// (r, B) induces the pair (r, N = r# B#).
inline std::pair<SymTensor2, Matrix> kvn_from_kvb(const Algebra& alg, const SymTensor2& r,
                                                  const SymForm2& B) {
  if (auto rep = check_kvb(alg, r, B); !rep)
    throw ComponentCheckFailed("kvn_from_kvb: " + rep.detail);
  Matrix N = r.entries * B.entries;
  if (auto rep = check_kvn(alg, r, N); !rep)
    throw ComponentCheckFailed("kvn_from_kvb: output fails: " + rep.detail);
  return {r, std::move(N)};
}

/// For nondegenerate B, (r, B) induces the pair (B, N = r# B#).
inline std::pair<SymForm2, Matrix> hn_from_kvb(const Algebra& alg, const SymTensor2& r,
                                               const SymForm2& B) {
  if (auto rep = check_kvb(alg, r, B); !rep)
    throw ComponentCheckFailed("hn_from_kvb: " + rep.detail);
  if (!B.entries.invertible())
    throw SingularMatrix("hn_from_kvb: the form is degenerate");
  Matrix N = r.entries * B.entries;
  if (auto rep = check_hn(alg, B, N); !rep)
    throw ComponentCheckFailed("hn_from_kvb: output fails: " + rep.detail);
  return {B, std::move(N)};
}

/// The tower r_k with r_k# = N^k r#: each an s-matrix, pairwise compatible
/// (every pair's sum is again an s-matrix), and each symmetric.
struct SMatrixHierarchy {
  std::vector<SymTensor2> matrices;
  CheckReport report;
};

inline SMatrixHierarchy r_hierarchy(const Algebra& alg, const SymTensor2& r, const Matrix& N,
                                    std::size_t kmax) {
  if (kmax > 4) throw std::invalid_argument("r_hierarchy: kmax must be <= 4");
  if (auto rep = check_kvn(alg, r, N); !rep)
    throw ComponentCheckFailed("r_hierarchy: " + rep.detail);
  SMatrixHierarchy out;
  out.report = CheckReport::pass();
  Matrix cur = r.entries;
  std::vector<Matrix> sharps;
  for (std::size_t k = 0; k <= kmax; ++k) {
    for (std::size_t i = 0; i < cur.rows(); ++i)
      for (std::size_t j = i + 1; j < cur.cols(); ++j)
        if (cur(i, j) != cur(j, i)) {
          out.report = CheckReport::fail("r_" + std::to_string(k) + " is not symmetric");
          return out;
        }
    sharps.push_back(cur);
    out.matrices.emplace_back(cur);
    cur = N * cur;
  }
  for (std::size_t k = 0; k <= kmax; ++k) {
    if (auto rep = check_s_matrix(alg, out.matrices[k]); !rep) {
      out.report =
          CheckReport::fail("r_" + std::to_string(k) + " fails: " + rep.detail);
      return out;
    }
    for (std::size_t l = 0; l < k; ++l) {
      if (auto rep = check_s_matrix(alg, SymTensor2(sharps[k] + sharps[l])); !rep) {
        out.report = CheckReport::fail("pair (" + std::to_string(l) + "," +
                                       std::to_string(k) + ") fails: " + rep.detail);
        return out;
      }
    }
  }
  return out;
}

}  // namespace prelie

#endif  // PRELIE_STRUCTURES_HPP

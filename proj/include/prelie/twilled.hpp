#ifndef PRELIE_TWILLED_HPP
#define PRELIE_TWILLED_HPP

#include "prelie/cochain.hpp"
#include "prelie/operators.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prelie {

struct NotSubalgebra : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotRotaBaxter : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotStrongMC : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotOnStructure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A pre-Lie algebra split into two subalgebras g1 (+) g2, together with the
/// extracted block data: the restricted products and the four cross-actions
///   x <> u = L1_x u + R2_u x,   u <> x = L2_u x + R1_x u.
struct TwilledAlgebra {
  Algebra big;
  std::size_t n1 = 0, n2 = 0;
  Tensor3 diamond1;         // product restricted to g1
  Tensor3 diamond2;         // product restricted to g2
  std::vector<Matrix> L1, R1;  // indexed by g1 basis, acting on g2
  std::vector<Matrix> L2, R2;  // indexed by g2 basis, acting on g1

  /// (g2; L1, R1) as a bimodule over (g1, <>_1).
  Bimodule bimodule1() const { return Bimodule(Algebra(n1, diamond1), n2, L1, R1); }
  /// (g1; L2, R2) as a bimodule over (g2, <>_2).
  Bimodule bimodule2() const { return Bimodule(Algebra(n2, diamond2), n1, L2, R2); }

  /// The same algebra with the roles of the two blocks exchanged.
  TwilledAlgebra swapped() const {
    TwilledAlgebra out;
    out.n1 = n2;
    out.n2 = n1;
    out.diamond1 = diamond2;
    out.diamond2 = diamond1;
    out.L1 = L2;
    out.R1 = R2;
    out.L2 = L1;
    out.R2 = R1;
    Tensor3 c(n1 + n2);
    auto re = [&](std::size_t i) { return i < n1 ? n2 + i : i - n1; };
    for (std::size_t i = 0; i < n1 + n2; ++i)
      for (std::size_t j = 0; j < n1 + n2; ++j)
        for (std::size_t k = 0; k < n1 + n2; ++k)
          c(re(i), re(j), re(k)) = big.products(i, j, k);
    out.big = Algebra(n1 + n2, std::move(c));
    return out;
  }
};

/// Splits a pre-Lie algebra at index n1, checking that both blocks are
/// subalgebras, and extracts the cross-action data.
inline TwilledAlgebra make_twilled(const Algebra& big, std::size_t n1) {
  if (auto rep = check_pre_lie(big.products); !rep)
    throw NotPreLie("make_twilled: " + rep.detail);
  if (n1 == 0 || n1 >= big.dim)
    throw DimensionMismatch("make_twilled: split must be strictly inside the algebra");
  std::size_t n2 = big.dim - n1;
  TwilledAlgebra out;
  out.big = big;
  out.n1 = n1;
  out.n2 = n2;
  out.diamond1 = Tensor3(n1);
  out.diamond2 = Tensor3(n2);
  out.L1.assign(n1, Matrix(n2, n2));
  out.R1.assign(n1, Matrix(n2, n2));
  out.L2.assign(n2, Matrix(n1, n1));
  out.R2.assign(n2, Matrix(n1, n1));
  const Tensor3& c = big.products;
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < big.dim; ++k) {
        if (k < n1)
          out.diamond1(i, j, k) = c(i, j, k);
        else if (c(i, j, k) != 0)
          throw NotSubalgebra("first block is not closed at basis pair (" +
                              std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
  for (std::size_t u = 0; u < n2; ++u)
    for (std::size_t v = 0; v < n2; ++v)
      for (std::size_t k = 0; k < big.dim; ++k) {
        if (k >= n1)
          out.diamond2(u, v, k - n1) = c(n1 + u, n1 + v, k);
        else if (c(n1 + u, n1 + v, k) != 0)
          throw NotSubalgebra("second block is not closed at basis pair (" +
                              std::to_string(u + 1) + "," + std::to_string(v + 1) + ")");
      }
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t u = 0; u < n2; ++u) {
      for (std::size_t w = 0; w < n2; ++w) {
        out.L1[i](w, u) = c(i, n1 + u, n1 + w);
        out.R1[i](w, u) = c(n1 + u, i, n1 + w);
      }
      for (std::size_t z = 0; z < n1; ++z) {
        out.R2[u](z, i) = c(i, n1 + u, z);
        out.L2[u](z, i) = c(n1 + u, i, z);
      }
    }
  if (auto rep = check_bimodule(out.bimodule1()); !rep)
    throw InvalidBimodule("make_twilled: first cross-action: " + rep.detail);
  if (auto rep = check_bimodule(out.bimodule2()); !rep)
    throw InvalidBimodule("make_twilled: second cross-action: " + rep.detail);
  return out;
}

/// The twilled algebra g |><| V_T of an O-operator T, with cross actions
///   LT_u x = T(u).x - T(R_x u),   KT_u x = x.T(u) - T(L_x u)
/// and the induced multiplication on the module block.
inline TwilledAlgebra twilled_from_o_operator(const Bimodule& b, const Matrix& T) {
  if (auto rep = check_o_operator(b, T); !rep)
    throw NotOOperator("twilled_from_o_operator: " + rep.detail);
  std::size_t n = b.base.dim, m = b.module_dim, d = n + m;
  Tensor3 c(n + m);
  Tensor3 vt = detail::induced_tensor(b, T);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = b.base.products(i, j, k);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t w = 0; w < m; ++w) c(n + u, n + v, n + w) = vt(u, v, w);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t u = 0; u < m; ++u) {
      Vector x = unit_vector(n, i), fu = unit_vector(m, u), tu = T.column(u);
      // x <> f_u: module part L_x f_u, algebra part KT_u x
      Vector kt = b.base.multiply(x, tu) - T.apply(b.act_left(x).apply(fu));
      Vector lv = b.act_left(x).apply(fu);
      for (std::size_t k = 0; k < n; ++k) c(i, n + u, k) = kt[k];
      for (std::size_t w = 0; w < m; ++w) c(i, n + u, n + w) = lv[w];
      // f_u <> x: algebra part LT_u x, module part R_x f_u
      Vector lt = b.base.multiply(tu, x) - T.apply(b.act_right(x).apply(fu));
      Vector rv = b.act_right(x).apply(fu);
      for (std::size_t k = 0; k < n; ++k) c(n + u, i, k) = lt[k];
      for (std::size_t w = 0; w < m; ++w) c(n + u, i, n + w) = rv[w];
    }
  return make_twilled(Algebra(d, std::move(c)), n);
}

namespace detail {

/// Semidirect-product structure constants keeping the (g1, g2) ordering:
/// mu1 couples <>_1 with (L1, R1), mu2 couples <>_2 with (L2, R2).
inline Cochain mu1_hat(const TwilledAlgebra& tw) {
  return algebra_cochain(semidirect_product(tw.bimodule1()));
}

inline Cochain mu2_hat(const TwilledAlgebra& tw) {
  std::size_t n1 = tw.n1, n2 = tw.n2, d = n1 + n2;
  Tensor3 c(d);
  for (std::size_t u = 0; u < n2; ++u)
    for (std::size_t v = 0; v < n2; ++v)
      for (std::size_t w = 0; w < n2; ++w) c(n1 + u, n1 + v, n1 + w) = tw.diamond2(u, v, w);
  for (std::size_t u = 0; u < n2; ++u)
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t k = 0; k < n1; ++k) {
        c(n1 + u, i, k) = tw.L2[u](k, i);
        c(i, n1 + u, k) = tw.R2[u](k, i);
      }
  return algebra_cochain(Algebra(d, std::move(c)));
}

/// Horizontal lift of a g2-valued cochain on g1 into the big space.
inline Cochain lift_cross(const Cochain& f, std::size_t n1, std::size_t n2) {
  if (f.dom() != n1 || f.cod() != n2)
    throw SpaceMismatch("expected a cochain from the first block to the second");
  BlockMap bm(n1, n2, f.degree() - 1, 0, 1, 2);
  bm.for_each_slot([&](const IndexTuple& t1, const IndexTuple&, std::size_t z) {
    bm.at(t1, {}, z) = f.at(t1, z);
  });
  return horizontal_lift(bm).cochain;
}

/// Projection of a big cochain back to a g2-valued cochain on g1.
inline Cochain project_cross(const Cochain& big, std::size_t n1, std::size_t n2) {
  Cochain out(big.degree(), n1, n2);
  out.for_each_slot([&](const IndexTuple& w, std::size_t z) {
    const Vector& v = big.at(w, z);
    out.at(w, z) = Vector(v.begin() + n1, v.end());
  });
  return out;
}

}  // namespace detail

/// Differential of the graded Lie algebra on C*(g1, g2): d f = [mu1^, f^],
/// projected back to the cross space.
inline Cochain d_mu1(const TwilledAlgebra& tw, const Cochain& f) {
  Cochain lifted = detail::lift_cross(f, tw.n1, tw.n2);
  return detail::project_cross(mn_bracket(detail::mu1_hat(tw), lifted), tw.n1, tw.n2);
}

/// Derived bracket on C*(g1, g2): [f1, f2] = (-1)^{m-1} [[mu2^, f1^], f2^].
inline Cochain bracket_mu2(const TwilledAlgebra& tw, const Cochain& f1, const Cochain& f2) {
  Cochain l1 = detail::lift_cross(f1, tw.n1, tw.n2);
  Cochain l2 = detail::lift_cross(f2, tw.n1, tw.n2);
  Cochain inner = mn_bracket(detail::mu2_hat(tw), l1);
  int sign = (f1.degree() - 1) % 2 == 0 ? 1 : -1;
  return detail::project_cross(mn_bracket(inner, l2) * Scalar(sign), tw.n1, tw.n2);
}

namespace detail {
inline Cochain one_cochain(const Matrix& omega, std::size_t n1, std::size_t n2) {
  if (omega.rows() != n2 || omega.cols() != n1)
    throw SpaceMismatch("expected a " + std::to_string(n2) + "x" + std::to_string(n1) +
                        " matrix from the first block to the second");
  Cochain f(1, n1, n2);
  for (std::size_t i = 0; i < n1; ++i) f.at({}, i) = omega.column(i);
  return f;
}
}  // namespace detail

/// Maurer-Cartan check: the single combined equation on all basis pairs,
/// cross-checked against d(Omega^) + 1/2 [Omega^, Omega^] vanishing.
inline CheckReport check_mc(const TwilledAlgebra& tw, const Matrix& omega) {
  Cochain f = detail::one_cochain(omega, tw.n1, tw.n2);
  bool direct = true;
  for (std::size_t i = 0; i < tw.n1 && direct; ++i)
    for (std::size_t j = 0; j < tw.n1 && direct; ++j) {
      Vector oi = omega.column(i), oj = omega.column(j);
      Vector lhs = tw.diamond2.apply(oi, oj) + tw.L1[i].apply(oj) + tw.R1[j].apply(oi);
      Vector inner(tw.n1);
      for (std::size_t u = 0; u < tw.n2; ++u)
        inner = inner + oi[u] * tw.L2[u].column(j) + oj[u] * tw.R2[u].column(i);
      Vector rhs = omega.apply(inner) + omega.apply(tw.diamond1.product(i, j));
      direct = lhs == rhs;
    }
  Cochain mc = d_mu1(tw, f) + bracket_mu2(tw, f, f) * Scalar(1, 2);
  if (direct != mc.is_zero())
    return CheckReport::fail("internal route disagreement (components vs cochain)");
  if (!direct) return CheckReport::fail("combined equation fails");
  return CheckReport::pass();
}

/// Strong Maurer-Cartan report: the two component equations separately,
/// plus their conjunction.
struct StrongMcReport {
  bool cocycle_part = false;    // Omega(x <>_1 y) = L1_x Omega(y) + R1_y Omega(x)
  bool quadratic_part = false;  // Omega(x) <>_2 Omega(y) = Omega(L2 y + R2 x)
  std::string detail;

  bool ok() const { return cocycle_part && quadratic_part; }
  explicit operator bool() const { return ok(); }
};

inline StrongMcReport check_strong_mc(const TwilledAlgebra& tw, const Matrix& omega) {
  Cochain f = detail::one_cochain(omega, tw.n1, tw.n2);
  StrongMcReport out;
  out.cocycle_part = true;
  out.quadratic_part = true;
  for (std::size_t i = 0; i < tw.n1; ++i)
    for (std::size_t j = 0; j < tw.n1; ++j) {
      Vector oi = omega.column(i), oj = omega.column(j);
      if (omega.apply(tw.diamond1.product(i, j)) !=
          tw.L1[i].apply(oj) + tw.R1[j].apply(oi))
        out.cocycle_part = false;
      Vector inner(tw.n1);
      for (std::size_t u = 0; u < tw.n2; ++u)
        inner = inner + oi[u] * tw.L2[u].column(j) + oj[u] * tw.R2[u].column(i);
      if (tw.diamond2.apply(oi, oj) != omega.apply(inner)) out.quadratic_part = false;
    }
  bool d_zero = d_mu1(tw, f).is_zero();
  bool br_zero = bracket_mu2(tw, f, f).is_zero();
  if (d_zero != out.cocycle_part || br_zero != out.quadratic_part) {
    out.cocycle_part = out.quadratic_part = false;
    out.detail = "internal route disagreement (components vs cochain)";
    return out;
  }
  if (!out.cocycle_part) out.detail += "cocycle part fails; ";
  if (!out.quadratic_part) out.detail += "quadratic part fails; ";
  return out;
}

/// For a Rota-Baxter operator R, a map Omega solves the strong Maurer-Cartan
/// equation on the associated twilled algebra iff Omega and Omega R Omega are
/// both derivations. Both routes are computed and must agree.
inline CheckReport check_rb_strong_mc(const Algebra& alg, const Matrix& R,
                                      const Matrix& omega) {
  Bimodule reg = regular_bimodule(alg);
  if (auto rep = check_o_operator(reg, R); !rep)
    throw NotRotaBaxter("check_rb_strong_mc: " + rep.detail);
  auto derivation = [&](const Matrix& D) {
    for (std::size_t i = 0; i < alg.dim; ++i)
      for (std::size_t j = 0; j < alg.dim; ++j) {
        Vector lhs = D.apply(alg.products.product(i, j));
        Vector rhs = alg.multiply(D.column(i), unit_vector(alg.dim, j)) +
                     alg.multiply(unit_vector(alg.dim, i), D.column(j));
        if (lhs != rhs) return false;
      }
    return true;
  };
  bool direct = derivation(omega) && derivation(omega * R * omega);
  bool via_twilled = bool(check_strong_mc(twilled_from_o_operator(reg, R), omega));
  if (direct != via_twilled)
    return CheckReport::fail("internal route disagreement (derivations vs twilled)");
  if (!direct) return CheckReport::fail("derivation conditions fail");
  return CheckReport::pass();
}

/// Twist of g |><| V_T by a strong Maurer-Cartan solution Omega: the block g
/// now carries x .^O y = LT_{O(x)} y + KT_{O(y)} x, with module actions
///   LO_x u = O(x) .^T u - O(KT_u x),   RO_x u = u .^T O(x) - O(LT_u x).
/// Verifies that T solves the strong Maurer-Cartan equation on the twisted
/// algebra (blocks swapped) and is an O-operator on the twisted actions.
inline TwilledAlgebra omega_twist(const Bimodule& b, const Matrix& T, const Matrix& omega) {
  TwilledAlgebra base = twilled_from_o_operator(b, T);
  if (auto rep = check_strong_mc(base, omega); !rep)
    throw NotStrongMC("omega_twist: " + rep.detail);
  std::size_t n = b.base.dim, m = b.module_dim;
  Tensor3 c(n + m);
  // module block keeps .^T
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t w = 0; w < m; ++w) c(n + u, n + v, n + w) = base.diamond2(u, v, w);
  // g block: x .^O y and the cross actions LT, KT retained from the base
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector oi = omega.column(i), oj = omega.column(j);
      Vector prod(n);
      for (std::size_t u = 0; u < m; ++u)
        prod = prod + oi[u] * base.L2[u].column(j) + oj[u] * base.R2[u].column(i);
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = prod[k];
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t u = 0; u < m; ++u) {
      // f_u <> x keeps LT_u x in g and gains the twisted right action on V
      for (std::size_t k = 0; k < n; ++k) c(n + u, i, k) = base.L2[u](k, i);
      Vector ro = base.diamond2.apply(unit_vector(m, u), omega.column(i)) -
                  omega.apply(base.L2[u].column(i));
      for (std::size_t w = 0; w < m; ++w) c(n + u, i, n + w) = ro[w];
      // x <> f_u keeps KT_u x in g and gains the twisted left action on V
      for (std::size_t k = 0; k < n; ++k) c(i, n + u, k) = base.R2[u](k, i);
      Vector lo = base.diamond2.apply(omega.column(i), unit_vector(m, u)) -
                  omega.apply(base.R2[u].column(i));
      for (std::size_t w = 0; w < m; ++w) c(i, n + u, n + w) = lo[w];
    }
  TwilledAlgebra out = make_twilled(Algebra(n + m, std::move(c)), n);
  if (auto rep = check_strong_mc(out.swapped(), T); !rep)
    throw NotStrongMC("omega_twist: T fails on the twisted algebra: " + rep.detail);
  Bimodule twisted(Algebra(n, out.diamond1), m, out.L1, out.R1);
  if (auto rep = check_o_operator(twisted, T); !rep)
    throw NotStrongMC("omega_twist: T fails on the twisted actions: " + rep.detail);
  return out;
}

/// A strong Maurer-Cartan solution induces two coupled operator structures:
/// (T, N = T Omega, S = Omega T) on the original bimodule, and the dual
/// (Omega, S, N) on the bimodule (g; LT, KT) over V_T.
inline std::pair<OnStructure, OnStructure> on_from_mc(const Bimodule& b, const Matrix& T,
                                                      const Matrix& omega) {
  TwilledAlgebra tw = twilled_from_o_operator(b, T);
  if (auto rep = check_strong_mc(tw, omega); !rep)
    throw NotStrongMC("on_from_mc: " + rep.detail);
  Matrix N = T * omega;
  Matrix S = omega * T;
  return {OnStructure(b, T, N, S), OnStructure(tw.bimodule2(), omega, S, N)};
}

/// For an invertible operator, recovers the strong Maurer-Cartan solution
/// Omega = T^{-1} N = S T^{-1}.
inline Matrix mc_from_on(const OnStructure& os) {
  if (auto rep = check_on_structure(os); !rep)
    throw NotOnStructure("mc_from_on: " + rep.detail);
  Matrix inv = os.T.matrix.inverse();  // throws SingularMatrix
  Matrix omega = inv * os.N.matrix;
  if (omega != os.S.matrix * inv)
    throw NotOnStructure("mc_from_on: the two expressions for Omega disagree");
  if (auto rep = check_strong_mc(twilled_from_o_operator(os.base, os.T.matrix), omega); !rep)
    throw NotOnStructure("mc_from_on: recovered map is not a strong solution: " +
                         rep.detail);
  return omega;
}

/// The two operator ladders of a strong Maurer-Cartan solution:
/// T_k = (T Omega)^k T on (V; L, R) and Omega_k = (Omega T)^k Omega on
/// (g; LT, KT), each pairwise compatible.
inline CheckReport hierarchy_from_mc(const Bimodule& b, const Matrix& T,
                                     const Matrix& omega, std::size_t kmax) {
  if (kmax > 4) throw std::invalid_argument("hierarchy_from_mc: kmax must be <= 4");
  TwilledAlgebra tw = twilled_from_o_operator(b, T);
  if (auto rep = check_strong_mc(tw, omega); !rep)
    throw NotStrongMC("hierarchy_from_mc: " + rep.detail);
  Bimodule dualmod = tw.bimodule2();
  std::vector<Matrix> ts{T}, omegas{omega};
  for (std::size_t k = 1; k <= kmax; ++k) {
    ts.push_back(T * omega * ts.back());
    omegas.push_back(omega * T * omegas.back());
  }
  for (std::size_t k = 0; k <= kmax; ++k) {
    if (auto rep = check_o_operator(b, ts[k]); !rep)
      return CheckReport::fail("T ladder fails at k=" + std::to_string(k) + ": " +
                               rep.detail);
    if (auto rep = check_o_operator(dualmod, omegas[k]); !rep)
      return CheckReport::fail("Omega ladder fails at k=" + std::to_string(k) + ": " +
                               rep.detail);
    for (std::size_t l = 0; l < k; ++l) {
      if (auto rep = check_compatible(b, ts[l], ts[k]); !rep)
        return CheckReport::fail("T ladder pair (" + std::to_string(l) + "," +
                                 std::to_string(k) + ") fails: " + rep.detail);
      if (auto rep = check_compatible(dualmod, omegas[l], omegas[k]); !rep)
        return CheckReport::fail("Omega ladder pair (" + std::to_string(l) + "," +
                                 std::to_string(k) + ") fails: " + rep.detail);
    }
  }
  return CheckReport::pass();
}

}  // namespace prelie

#endif  // PRELIE_TWILLED_HPP

#ifndef PRELIE_COCHAIN_HPP
#define PRELIE_COCHAIN_HPP

#include "prelie/algebra.hpp"
#include "prelie/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace prelie {

struct SpaceMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ShapeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Combinatorial helpers
// ---------------------------------------------------------------------------

inline std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

using IndexTuple = std::vector<std::size_t>;

/// All strictly increasing k-tuples over [0, n), lexicographic.
inline std::vector<IndexTuple> increasing_tuples(std::size_t n, std::size_t k) {
  std::vector<IndexTuple> out;
  if (k > n) return out;
  IndexTuple t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  for (;;) {
    out.push_back(t);
    if (k == 0) break;
    std::size_t i = k;
    while (i-- > 0) {
      if (t[i] < n - (k - i)) {
        ++t[i];
        for (std::size_t j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
  return out;
}

/// Lexicographic rank of a strictly increasing tuple over [0, n).
inline std::size_t tuple_rank(const IndexTuple& t, std::size_t n) {
  std::size_t k = t.size(), rank = 0, prev = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t v = prev; v < t[i]; ++v) rank += binom(n - 1 - v, k - 1 - i);
    prev = t[i] + 1;
  }
  return rank;
}

/// Sign of the permutation that sorts `idx`; 0 if a repeat occurs.
/// Writes the sorted tuple into `sorted`.
inline int sort_sign(const IndexTuple& idx, IndexTuple& sorted) {
  sorted = idx;
  int sign = 1;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (sorted[i] == sorted[j]) return 0;
      if (sorted[i] > sorted[j]) {
        std::swap(sorted[i], sorted[j]);
        sign = -sign;
      }
    }
  return sign;
}

/// Unshuffle of {0..total-1} into consecutive blocks of the given sizes:
/// increasing inside each block. Each entry is (permutation image list, sign).
inline std::vector<std::pair<IndexTuple, int>> unshuffles(
    const std::vector<std::size_t>& block_sizes) {
  std::size_t total = 0;
  for (auto s : block_sizes) total += s;
  std::vector<std::pair<IndexTuple, int>> out;
  IndexTuple current;
  std::vector<bool> used(total, false);
  std::function<void(std::size_t)> rec = [&](std::size_t block) {
    if (block == block_sizes.size()) {
      // sign = parity of the inversion count of `current`
      int sign = 1;
      for (std::size_t i = 0; i < current.size(); ++i)
        for (std::size_t j = i + 1; j < current.size(); ++j)
          if (current[i] > current[j]) sign = -sign;
      out.emplace_back(current, sign);
      return;
    }
    std::size_t k = block_sizes[block];
    IndexTuple avail;
    for (std::size_t v = 0; v < total; ++v)
      if (!used[v]) avail.push_back(v);
    for (const auto& pick : increasing_tuples(avail.size(), k)) {
      for (auto p : pick) {
        current.push_back(avail[p]);
        used[avail[p]] = true;
      }
      rec(block + 1);
      for (auto p : pick) used[avail[p]] = false;
      current.resize(current.size() - k);
    }
  };
  rec(0);
  return out;
}

// ---------------------------------------------------------------------------
// Cochain: element of Hom(wedge^{p-1} W (x) W, U)
// ---------------------------------------------------------------------------

/// Multilinear map antisymmetric in all but the last argument. Canonical
/// storage holds one codomain vector per (strictly increasing (p-1)-tuple,
/// arbitrary last index); evaluation antisymmetrizes on demand.
class Cochain {
 public:
  Cochain() : degree_(0), dom_(0), cod_(0) {}
  Cochain(std::size_t degree, std::size_t dom, std::size_t cod)
      : degree_(degree), dom_(dom), cod_(cod) {
    if (degree < 1) throw ShapeMismatch("Cochain degree must be >= 1");
    data_.assign(binom(dom, degree - 1) * dom, Vector(cod));
  }

  std::size_t degree() const { return degree_; }
  std::size_t dom() const { return dom_; }
  std::size_t cod() const { return cod_; }

  /// Canonical entry: `wedge` strictly increasing of length degree-1.
  Vector& at(const IndexTuple& wedge, std::size_t last) {
    return data_[slot(wedge, last)];
  }
  const Vector& at(const IndexTuple& wedge, std::size_t last) const {
    return data_[slot(wedge, last)];
  }

  /// Evaluation at a basis tuple of length `degree` (last index unrestricted,
  /// leading indices in any order, repeats give zero).
  Vector eval_basis(const IndexTuple& idx) const {
    if (idx.size() != degree_) throw ShapeMismatch("Cochain::eval_basis arity");
    IndexTuple wedge(idx.begin(), idx.end() - 1), sorted;
    int sign = sort_sign(wedge, sorted);
    if (sign == 0) return Vector(cod_);
    const Vector& v = at(sorted, idx.back());
    if (sign == 1) return v;
    Vector r(cod_);
    for (std::size_t i = 0; i < cod_; ++i) r[i] = -v[i];
    return r;
  }

  /// Full multilinear evaluation at coordinate-vector arguments.
  Vector eval(const std::vector<Vector>& args) const {
    if (args.size() != degree_) throw ShapeMismatch("Cochain::eval arity");
    Vector result(cod_);
    IndexTuple idx(degree_);
    expand(args, 0, Scalar(1), idx, result);
    return result;
  }

  Cochain operator+(const Cochain& o) const {
    require_same_shape(o);
    Cochain r = *this;
    for (std::size_t s = 0; s < data_.size(); ++s) r.data_[s] += o.data_[s];
    return r;
  }

  Cochain operator-(const Cochain& o) const {
    require_same_shape(o);
    Cochain r = *this;
    for (std::size_t s = 0; s < data_.size(); ++s)
      for (std::size_t i = 0; i < cod_; ++i) r.data_[s][i] -= o.data_[s][i];
    return r;
  }

  Cochain operator*(const Scalar& c) const {
    Cochain r = *this;
    for (auto& v : r.data_)
      for (auto& s : v) s *= c;
    return r;
  }

  bool operator==(const Cochain& o) const {
    return degree_ == o.degree_ && dom_ == o.dom_ && cod_ == o.cod_ && data_ == o.data_;
  }
  bool operator!=(const Cochain& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!prelie::is_zero(v)) return false;
    return true;
  }

  /// Iterates over all canonical (wedge, last) slots.
  template <typename F>
  void for_each_slot(F&& f) const {
    auto wedges = increasing_tuples(dom_, degree_ - 1);
    for (const auto& w : wedges)
      for (std::size_t last = 0; last < dom_; ++last) f(w, last);
  }

 private:
  std::size_t slot(const IndexTuple& wedge, std::size_t last) const {
    if (wedge.size() != degree_ - 1 || last >= dom_)
      throw ShapeMismatch("Cochain slot out of range");
    return tuple_rank(wedge, dom_) * dom_ + last;
  }

  void expand(const std::vector<Vector>& args, std::size_t pos, const Scalar& coeff,
              IndexTuple& idx, Vector& result) const {
    if (pos == degree_) {
      Vector v = eval_basis(idx);
      for (std::size_t i = 0; i < cod_; ++i)
        if (v[i] != 0) result[i] += coeff * v[i];
      return;
    }
    const Vector& a = args[pos];
    if (a.size() != dom_) throw ShapeMismatch("Cochain::eval argument dimension");
    for (std::size_t i = 0; i < dom_; ++i) {
      if (a[i] == 0) continue;
      idx[pos] = i;
      expand(args, pos + 1, coeff * a[i], idx, result);
    }
  }

  void require_same_shape(const Cochain& o) const {
    if (degree_ != o.degree_ || dom_ != o.dom_ || cod_ != o.cod_)
      throw SpaceMismatch("cochain shapes disagree");
  }

  std::size_t degree_, dom_, cod_;
  std::vector<Vector> data_;  // [wedge rank * dom + last]
};

/// The multiplication of an algebra as a 2-cochain on itself.
inline Cochain algebra_cochain(const Algebra& alg) {
  Cochain c(2, alg.dim, alg.dim);
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j) c.at({i}, j) = alg.products.product(i, j);
  return c;
}

// ---------------------------------------------------------------------------
// Matsushima-Nijenhuis bracket
// ---------------------------------------------------------------------------

/// P <> Q: the double unshuffle sum, P in C^{p+1}, Q in C^{q+1}.
inline Cochain mn_diamond(const Cochain& P, const Cochain& Q) {
  if (P.dom() != Q.dom() || P.cod() != Q.cod() || P.dom() != P.cod())
    throw SpaceMismatch("mn_diamond: cochains must live on the same space");
  std::size_t p = P.degree() - 1, q = Q.degree() - 1;
  std::size_t dom = P.dom();
  Cochain out(p + q + 1, dom, dom);
  int sgn_pq = (p * q) % 2 == 0 ? 1 : -1;

  auto first_shuffles = unshuffles({q, 1, p == 0 ? 0 : p - 1});
  auto second_shuffles = unshuffles({p, q});

  out.for_each_slot([&](const IndexTuple& wedge, std::size_t last) {
    Vector acc(dom);
    // Sum over Perm_{(q,1,p-1)}: Q eats the first q+1 slots, its value enters
    // P's first argument.
    if (p >= 1) {
      for (const auto& [perm, sign] : first_shuffles) {
        IndexTuple qargs(perm.begin(), perm.begin() + q + 1);
        for (auto& v : qargs) v = wedge[v];
        Vector qval = Q.eval_basis(qargs);
        if (prelie::is_zero(qval)) continue;
        std::vector<Vector> pargs;
        pargs.push_back(qval);
        for (std::size_t r = q + 1; r < p + q; ++r)
          pargs.push_back(unit_vector(dom, wedge[perm[r]]));
        pargs.push_back(unit_vector(dom, last));
        Vector pv = P.eval(pargs);
        for (std::size_t i = 0; i < dom; ++i)
          if (pv[i] != 0) acc[i] += Scalar(sign) * pv[i];
      }
    }
    // Sum over Perm_{(p,q)}: Q eats the trailing q slots plus the last
    // argument, its value enters P's last argument.
    for (const auto& [perm, sign] : second_shuffles) {
      IndexTuple qwedge(perm.begin() + p, perm.end());
      for (auto& v : qwedge) v = wedge[v];
      const Vector qval = [&] {
        IndexTuple qargs = qwedge;
        qargs.push_back(last);
        return Q.eval_basis(qargs);
      }();
      if (prelie::is_zero(qval)) continue;
      std::vector<Vector> pargs;
      for (std::size_t r = 0; r < p; ++r)
        pargs.push_back(unit_vector(dom, wedge[perm[r]]));
      pargs.push_back(qval);
      Vector pv = P.eval(pargs);
      for (std::size_t i = 0; i < dom; ++i)
        if (pv[i] != 0) acc[i] += Scalar(sgn_pq * sign) * pv[i];
    }
    out.at(wedge, last) = acc;
  });
  return out;
}

/// [P,Q]^MN = P <> Q - (-1)^{pq} Q <> P.
inline Cochain mn_bracket(const Cochain& P, const Cochain& Q) {
  std::size_t p = P.degree() - 1, q = Q.degree() - 1;
  int sgn = (p * q) % 2 == 0 ? 1 : -1;
  return mn_diamond(P, Q) - mn_diamond(Q, P) * Scalar(sgn);
}

// ---------------------------------------------------------------------------
// Coboundary operator delta of the bimodule cochain complex
// ---------------------------------------------------------------------------

/// delta: Hom(wedge^{n-1} g (x) g, V) -> Hom(wedge^n g (x) g, V) for a
/// bimodule (V; L, R).
inline Cochain delta(const Bimodule& b, const Cochain& phi) {
  if (phi.dom() != b.base.dim || phi.cod() != b.module_dim)
    throw SpaceMismatch("delta: cochain does not match bimodule");
  std::size_t n = phi.degree();
  std::size_t dim = b.base.dim, m = b.module_dim;
  const Algebra& alg = b.base;
  Cochain out(n + 1, dim, m);
  out.for_each_slot([&](const IndexTuple& wedge, std::size_t last) {
    // arguments x_1..x_{n+1}: wedge holds x_1..x_n, last is x_{n+1}
    Vector acc(m);
    for (std::size_t i = 0; i < n; ++i) {
      int sign = i % 2 == 0 ? 1 : -1;  // (-1)^{i+1} with 1-based i
      IndexTuple rest;
      for (std::size_t r = 0; r < n; ++r)
        if (r != i) rest.push_back(wedge[r]);
      // L_{x_i} phi(.., x_{n+1})
      IndexTuple args1 = rest;
      args1.push_back(last);
      Vector t = b.L[wedge[i]].apply(phi.eval_basis(args1));
      // + R_{x_{n+1}} phi(.., x_i)
      IndexTuple args2 = rest;
      args2.push_back(wedge[i]);
      t += b.R[last].apply(phi.eval_basis(args2));
      // - phi(.., x_i . x_{n+1})
      std::vector<Vector> args3;
      for (auto r : rest) args3.push_back(unit_vector(dim, r));
      args3.push_back(alg.products.product(wedge[i], last));
      t = t - phi.eval(args3);
      for (std::size_t c = 0; c < m; ++c)
        if (t[c] != 0) acc[c] += Scalar(sign) * t[c];
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        int sign = (i + j) % 2 == 0 ? 1 : -1;  // 1-based (i+1)+(j+1) has the parity of i+j
        Vector bracket = alg.products.product(wedge[i], wedge[j]) -
                         alg.products.product(wedge[j], wedge[i]);
        std::vector<Vector> args;
        args.push_back(bracket);
        for (std::size_t r = 0; r < n; ++r)
          if (r != i && r != j) args.push_back(unit_vector(dim, wedge[r]));
        args.push_back(unit_vector(dim, last));
        Vector t = phi.eval(args);
        for (std::size_t c = 0; c < m; ++c)
          if (t[c] != 0) acc[c] += Scalar(sign) * t[c];
      }
    out.at(wedge, last) = acc;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Block maps, horizontal lifts, bidegree
// ---------------------------------------------------------------------------

/// A linear map wedge^a g1 (x) wedge^b g2 (x) g_last -> g_target, the raw
/// datum a horizontal lift is built from.
struct BlockMap {
  std::size_t n1 = 0, n2 = 0;  // splitting dims
  std::size_t a = 0, b = 0;    // wedge argument counts from g1 and g2
  int last = 1;                // space of the final argument: 1 or 2
  int target = 1;              // codomain block: 1 or 2

  BlockMap() = default;
  BlockMap(std::size_t n1_, std::size_t n2_, std::size_t a_, std::size_t b_, int last_,
           int target_)
      : n1(n1_), n2(n2_), a(a_), b(b_), last(last_), target(target_) {
    data_.assign(binom(n1, a) * binom(n2, b) * last_dim(), Vector(target_dim()));
  }

  std::size_t last_dim() const { return last == 1 ? n1 : n2; }
  std::size_t target_dim() const { return target == 1 ? n1 : n2; }
  std::size_t degree() const { return a + b + 1; }

  Vector& at(const IndexTuple& t1, const IndexTuple& t2, std::size_t z) {
    return data_[slot(t1, t2, z)];
  }
  const Vector& at(const IndexTuple& t1, const IndexTuple& t2, std::size_t z) const {
    return data_[slot(t1, t2, z)];
  }

  /// Basis evaluation, antisymmetrizing each wedge group independently.
  Vector eval_basis(const IndexTuple& t1, const IndexTuple& t2, std::size_t z) const {
    IndexTuple s1, s2;
    int sg1 = sort_sign(t1, s1), sg2 = sort_sign(t2, s2);
    if (sg1 == 0 || sg2 == 0) return Vector(target_dim());
    const Vector& v = at(s1, s2, z);
    if (sg1 * sg2 == 1) return v;
    Vector r(target_dim());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = -v[i];
    return r;
  }

  /// Multilinear evaluation with coordinate-vector arguments in each group.
  Vector eval(const std::vector<Vector>& args1, const std::vector<Vector>& args2,
              const Vector& zarg) const {
    if (args1.size() != a || args2.size() != b || zarg.size() != last_dim())
      throw ShapeMismatch("BlockMap::eval arity");
    Vector result(target_dim());
    IndexTuple t1(a), t2(b);
    expand1(args1, args2, zarg, 0, Scalar(1), t1, t2, result);
    return result;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!prelie::is_zero(v)) return false;
    return true;
  }

  template <typename F>
  void for_each_slot(F&& f) const {
    for (const auto& t1 : increasing_tuples(n1, a))
      for (const auto& t2 : increasing_tuples(n2, b))
        for (std::size_t z = 0; z < last_dim(); ++z) f(t1, t2, z);
  }

 private:
  std::size_t slot(const IndexTuple& t1, const IndexTuple& t2, std::size_t z) const {
    if (t1.size() != a || t2.size() != b || z >= last_dim())
      throw ShapeMismatch("BlockMap slot out of range");
    return (tuple_rank(t1, n1) * binom(n2, b) + tuple_rank(t2, n2)) * last_dim() + z;
  }

  void expand1(const std::vector<Vector>& args1, const std::vector<Vector>& args2,
               const Vector& zarg, std::size_t pos, const Scalar& coeff, IndexTuple& t1,
               IndexTuple& t2, Vector& result) const {
    if (pos == a) {
      expand2(args1, args2, zarg, 0, coeff, t1, t2, result);
      return;
    }
    for (std::size_t i = 0; i < n1; ++i) {
      if (args1[pos][i] == 0) continue;
      t1[pos] = i;
      expand1(args1, args2, zarg, pos + 1, coeff * args1[pos][i], t1, t2, result);
    }
  }

  void expand2(const std::vector<Vector>& args1, const std::vector<Vector>& args2,
               const Vector& zarg, std::size_t pos, const Scalar& coeff, IndexTuple& t1,
               IndexTuple& t2, Vector& result) const {
    if (pos == b) {
      for (std::size_t z = 0; z < last_dim(); ++z) {
        if (zarg[z] == 0) continue;
        Vector v = eval_basis(t1, t2, z);
        for (std::size_t i = 0; i < v.size(); ++i)
          if (v[i] != 0) result[i] += coeff * zarg[z] * v[i];
      }
      return;
    }
    for (std::size_t i = 0; i < n2; ++i) {
      if (args2[pos][i] == 0) continue;
      t2[pos] = i;
      expand2(args1, args2, zarg, pos + 1, coeff * args2[pos][i], t1, t2, result);
    }
  }

  std::vector<Vector> data_;
};

struct Bidegree {
  int k = 0, l = 0;
  bool operator==(const Bidegree& o) const { return k == o.k && l == o.l; }
};

/// Cochain over a split space g1 + g2, remembering the splitting. `declared`
/// carries the block-shape bidegree when the cochain was built as a lift.
struct MixedCochain {
  Cochain cochain;
  std::size_t n1 = 0, n2 = 0;
  std::optional<Bidegree> declared;
};

/// Block-shape bidegree of a lifted map, when representable with k,l >= 0.
inline std::optional<Bidegree> block_bidegree(const BlockMap& f) {
  int k, l;
  if (f.last == 1) {
    if (f.target == 1) {
      k = static_cast<int>(f.a);
      l = static_cast<int>(f.b);
    } else {
      k = static_cast<int>(f.a) + 1;
      l = static_cast<int>(f.b) - 1;
    }
  } else {
    if (f.target == 1) {
      k = static_cast<int>(f.a) - 1;
      l = static_cast<int>(f.b) + 1;
    } else {
      k = static_cast<int>(f.a);
      l = static_cast<int>(f.b);
    }
  }
  if (k < 0 || l < 0) return std::nullopt;
  return Bidegree{k, l};
}

/// Horizontal lift of a block map into C^{a+b+1}(g1+g2, g1+g2). At canonical
/// basis tuples (g1 indices preceding g2 indices) exactly one unshuffle
/// survives, with sign +1.
inline MixedCochain horizontal_lift(const BlockMap& f) {
  std::size_t d = f.n1 + f.n2;
  Cochain c(f.degree(), d, d);
  std::size_t off = f.target == 1 ? 0 : f.n1;
  c.for_each_slot([&](const IndexTuple& wedge, std::size_t last) {
    IndexTuple t1, t2;
    for (auto w : wedge)
      (w < f.n1 ? t1 : t2).push_back(w < f.n1 ? w : w - f.n1);
    if (t1.size() != f.a || t2.size() != f.b) return;
    std::size_t z;
    if (f.last == 1) {
      if (last >= f.n1) return;
      z = last;
    } else {
      if (last < f.n1) return;
      z = last - f.n1;
    }
    const Vector& v = f.at(t1, t2, z);
    Vector& out = c.at(wedge, last);
    for (std::size_t i = 0; i < v.size(); ++i) out[off + i] = v[i];
  });
  return MixedCochain{std::move(c), f.n1, f.n2, block_bidegree(f)};
}

/// Bidegree per Def. 2.7, scanning all k|l with k+l+1 = degree. The zero
/// cochain reports its declared block shape.
inline std::optional<Bidegree> bidegree_of(const MixedCochain& f) {
  const Cochain& c = f.cochain;
  std::size_t n = c.degree(), n1 = f.n1;
  if (c.is_zero() && f.declared) return f.declared;
  for (int k = 0; k + 1 <= static_cast<int>(n); ++k) {
    int l = static_cast<int>(n) - 1 - k;
    bool ok = true;
    c.for_each_slot([&](const IndexTuple& wedge, std::size_t last) {
      if (!ok) return;
      int p = 0;
      for (auto w : wedge)
        if (w < n1) ++p;
      int q = static_cast<int>(wedge.size()) - p;
      const Vector& v = c.at(wedge, last);
      bool in_g1_ok = true, in_g2_ok = true;  // value confined to the block
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (i < n1) in_g2_ok = false;
        else in_g1_ok = false;
      }
      bool last_in_g1 = last < n1;
      // component of the argument: G^{p+1,q} when last in g1, G^{p,q+1} otherwise
      int ck = last_in_g1 ? p + 1 : p;
      int cl = last_in_g1 ? q : q + 1;
      if (ck == k + 1 && cl == l) {
        if (!in_g1_ok) ok = false;  // must land in g1
      } else if (ck == k && cl == l + 1) {
        if (!in_g2_ok) ok = false;  // must land in g2
      } else {
        if (!prelie::is_zero(v)) ok = false;
      }
    });
    if (ok) return Bidegree{k, l};
  }
  return std::nullopt;
}

/// Lift of the semidirect product structure mu = pi + L + R of a bimodule:
/// the multiplication cochain of g x| V.
inline MixedCochain mu_hat(const Bimodule& b) {
  Algebra sd = semidirect_product(b);
  return MixedCochain{algebra_cochain(sd), b.base.dim, b.module_dim,
                      Bidegree{1, 0}};
}

// ---------------------------------------------------------------------------
// The coboundary operator of the cochain complex C^n(g, L, R)
// ---------------------------------------------------------------------------

/// An n-cochain of the pre-Lie algebra with a bimodule: the three block
/// components phi = (phi1, phi2, phi3).
struct CochainTriple {
  std::size_t degree = 1;           // n
  Cochain phi1;                     // Hom(wedge^{n-1} g (x) g, g)
  std::optional<BlockMap> phi2;     // Hom(wedge^{n-2} g (x) V (x) g, V), n >= 2
  BlockMap phi3;                    // Hom(wedge^{n-1} g (x) V, V)

  static CochainTriple zero(std::size_t n, std::size_t dim, std::size_t m) {
    CochainTriple t;
    t.degree = n;
    t.phi1 = Cochain(n, dim, dim);
    if (n >= 2) t.phi2 = BlockMap(dim, m, n - 2, 1, 1, 2);
    t.phi3 = BlockMap(dim, m, n - 1, 0, 2, 2);
    return t;
  }

  bool is_zero() const {
    return phi1.is_zero() && (!phi2 || phi2->is_zero()) && phi3.is_zero();
  }
};

/// Horizontal lift of the full triple: an element of C^{n-1|0}(g+V, g+V).
inline MixedCochain lift_triple(const CochainTriple& phi, std::size_t dim, std::size_t m) {
  BlockMap f1(dim, m, phi.degree - 1, 0, 1, 1);
  f1.for_each_slot([&](const IndexTuple& t1, const IndexTuple&, std::size_t z) {
    f1.at(t1, {}, z) = phi.phi1.at(t1, z);
  });
  Cochain total = horizontal_lift(f1).cochain;
  if (phi.phi2) total = total + horizontal_lift(*phi.phi2).cochain;
  total = total + horizontal_lift(phi.phi3).cochain;
  return MixedCochain{std::move(total), dim, m,
                      Bidegree{static_cast<int>(phi.degree) - 1, 0}};
}

/// Inverse of lift_triple for mixed cochains of bidegree (n-1)|0.
inline CochainTriple extract_triple(const MixedCochain& F) {
  std::size_t dim = F.n1, m = F.n2, n = F.cochain.degree();
  CochainTriple out = CochainTriple::zero(n, dim, m);
  out.phi1.for_each_slot([&](const IndexTuple& w, std::size_t z) {
    const Vector& v = F.cochain.at(w, z);
    out.phi1.at(w, z) = Vector(v.begin(), v.begin() + dim);
  });
  if (out.phi2) {
    out.phi2->for_each_slot([&](const IndexTuple& t1, const IndexTuple& t2, std::size_t z) {
      IndexTuple wedge = t1;
      wedge.push_back(dim + t2[0]);
      const Vector& v = F.cochain.at(wedge, z);
      out.phi2->at(t1, t2, z) = Vector(v.begin() + dim, v.end());
    });
  }
  out.phi3.for_each_slot([&](const IndexTuple& t1, const IndexTuple&, std::size_t z) {
    const Vector& v = F.cochain.at(t1, dim + z);
    out.phi3.at(t1, {}, z) = Vector(v.begin() + dim, v.end());
  });
  return out;
}

/// partial(phi) = (-1)^{n-1} [mu_hat, phi_hat]^MN, the defining route.
inline CochainTriple partial_mn(const Bimodule& b, const CochainTriple& phi) {
  std::size_t dim = b.base.dim, m = b.module_dim;
  MixedCochain mu = mu_hat(b);
  MixedCochain lifted = lift_triple(phi, dim, m);
  Cochain br = mn_bracket(mu.cochain, lifted.cochain);
  if (phi.degree % 2 == 0) br = br * Scalar(-1);  // (-1)^{n-1}
  return extract_triple(MixedCochain{std::move(br), dim, m, std::nullopt});
}

/// partial(phi) by the explicit component formulas.
inline CochainTriple partial_components(const Bimodule& b, const CochainTriple& phi) {
  std::size_t n = phi.degree;
  std::size_t dim = b.base.dim, m = b.module_dim;
  const Algebra& alg = b.base;
  CochainTriple out = CochainTriple::zero(n + 1, dim, m);

  out.phi1 = delta(regular_bimodule(alg), phi.phi1);

  auto sub_bracket = [&](std::size_t i, std::size_t j) {
    return alg.products.product(i, j) - alg.products.product(j, i);
  };

  // (partial phi)_2 (x_1..x_{n-1}, v, x_n)
  out.phi2->for_each_slot([&](const IndexTuple& xs, const IndexTuple& vs, std::size_t xn) {
    std::size_t v = vs[0];
    Vector acc(m);
    auto add = [&](int sign, const Vector& t) {
      for (std::size_t c = 0; c < m; ++c)
        if (t[c] != 0) acc[c] += Scalar(sign) * t[c];
    };
    if (phi.phi2) {
      for (std::size_t i = 0; i < n - 1; ++i) {
        int sign = i % 2 == 0 ? 1 : -1;
        IndexTuple rest;
        for (std::size_t r = 0; r < n - 1; ++r)
          if (r != i) rest.push_back(xs[r]);
        add(sign, b.L[xs[i]].apply(phi.phi2->eval_basis(rest, {v}, xn)));
        add(sign, b.R[xn].apply(phi.phi2->eval_basis(rest, {v}, xs[i])));
        {
          std::vector<Vector> args1;
          for (auto r : rest) args1.push_back(unit_vector(dim, r));
          add(-sign, phi.phi2->eval(args1, {unit_vector(m, v)},
                                    alg.products.product(xs[i], xn)));
        }
      }
      for (std::size_t i = 0; i < n - 1; ++i)
        for (std::size_t j = i + 1; j < n - 1; ++j) {
          int sign = (i + j) % 2 == 0 ? 1 : -1;  // 1-based parity equals 0-based
          std::vector<Vector> args1;
          args1.push_back(sub_bracket(xs[i], xs[j]));
          for (std::size_t r = 0; r < n - 1; ++r)
            if (r != i && r != j) args1.push_back(unit_vector(dim, xs[r]));
          add(sign, phi.phi2->eval(args1, {unit_vector(m, v)}, unit_vector(dim, xn)));
        }
      // cross terms pairing x_i with the module slot: the sub-adjacent
      // bracket [x_i, v] = L_{x_i}v - R_{x_i}v lands back in the module slot
      // after reordering, contributing (-1)^i phi_2(.., (L-R)v, x_n)
      for (std::size_t i = 0; i < n - 1; ++i) {
        int sign = i % 2 == 0 ? -1 : 1;  // (-1)^i with 1-based i
        std::vector<Vector> args1;
        for (std::size_t r = 0; r < n - 1; ++r)
          if (r != i) args1.push_back(unit_vector(dim, xs[r]));
        Vector acted = (b.L[xs[i]] - b.R[xs[i]]).apply(unit_vector(m, v));
        add(sign, phi.phi2->eval(args1, {acted}, unit_vector(dim, xn)));
      }
    }
    int sn = n % 2 == 0 ? -1 : 1;  // (-1)^{n+1}
    {
      IndexTuple p1args = xs;
      p1args.push_back(xn);
      add(sn, b.act_right(phi.phi1.eval_basis(p1args)).apply(unit_vector(m, v)));
    }
    add(sn, b.R[xn].apply(phi.phi3.eval_basis(xs, {}, v)));
    {
      std::vector<Vector> args1;
      for (auto r : xs) args1.push_back(unit_vector(dim, r));
      add(-sn, phi.phi3.eval(args1, {}, b.R[xn].apply(unit_vector(m, v))));
    }
    out.phi2->at(xs, vs, xn) = acc;
  });

  // (partial phi)_3 (x_1..x_n, v)
  out.phi3.for_each_slot([&](const IndexTuple& xs, const IndexTuple&, std::size_t v) {
    Vector acc(m);
    auto add = [&](int sign, const Vector& t) {
      for (std::size_t c = 0; c < m; ++c)
        if (t[c] != 0) acc[c] += Scalar(sign) * t[c];
    };
    for (std::size_t i = 0; i < n; ++i) {
      int sign = i % 2 == 0 ? 1 : -1;
      IndexTuple rest;
      for (std::size_t r = 0; r < n; ++r)
        if (r != i) rest.push_back(xs[r]);
      {
        IndexTuple p1args = rest;
        p1args.push_back(xs[i]);
        add(sign, b.act_left(phi.phi1.eval_basis(p1args)).apply(unit_vector(m, v)));
      }
      add(sign, b.L[xs[i]].apply(phi.phi3.eval_basis(rest, {}, v)));
      {
        std::vector<Vector> args1;
        for (auto r : rest) args1.push_back(unit_vector(dim, r));
        add(-sign, phi.phi3.eval(args1, {}, b.L[xs[i]].apply(unit_vector(m, v))));
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        int sign = (i + j) % 2 == 0 ? 1 : -1;
        std::vector<Vector> args1;
        args1.push_back(sub_bracket(xs[i], xs[j]));
        for (std::size_t r = 0; r < n; ++r)
          if (r != i && r != j) args1.push_back(unit_vector(dim, xs[r]));
        add(sign, phi.phi3.eval(args1, {}, unit_vector(m, v)));
      }
    out.phi3.at(xs, {}, v) = acc;
  });

  return out;
}

inline bool operator==(const CochainTriple& a, const CochainTriple& b) {
  if (a.degree != b.degree || a.phi1 != b.phi1) return false;
  bool a2 = a.phi2.has_value() && !a.phi2->is_zero();
  bool b2 = b.phi2.has_value() && !b.phi2->is_zero();
  if (a2 != b2) return false;
  if (a2) {
    bool equal = true;
    a.phi2->for_each_slot([&](const IndexTuple& t1, const IndexTuple& t2, std::size_t z) {
      if (a.phi2->at(t1, t2, z) != b.phi2->at(t1, t2, z)) equal = false;
    });
    if (!equal) return false;
  }
  bool equal = true;
  a.phi3.for_each_slot([&](const IndexTuple& t1, const IndexTuple& t2, std::size_t z) {
    if (a.phi3.at(t1, t2, z) != b.phi3.at(t1, t2, z)) equal = false;
  });
  return equal;
}

// ---------------------------------------------------------------------------
// Cohomology dimensions
// ---------------------------------------------------------------------------

namespace detail {

/// Flat dimension of C^n(g, L, R).
inline std::size_t triple_space_dim(std::size_t n, std::size_t dim, std::size_t m) {
  std::size_t d1 = binom(dim, n - 1) * dim * dim;
  std::size_t d2 = n >= 2 ? binom(dim, n - 2) * m * dim * m : 0;
  std::size_t d3 = binom(dim, n - 1) * m * m;
  return d1 + d2 + d3;
}

inline std::vector<Scalar> triple_coords(const CochainTriple& t, std::size_t dim,
                                         std::size_t m) {
  std::vector<Scalar> out;
  t.phi1.for_each_slot([&](const IndexTuple& w, std::size_t z) {
    const Vector& v = t.phi1.at(w, z);
    out.insert(out.end(), v.begin(), v.end());
  });
  if (t.phi2)
    t.phi2->for_each_slot([&](const IndexTuple& a, const IndexTuple& b, std::size_t z) {
      const Vector& v = t.phi2->at(a, b, z);
      out.insert(out.end(), v.begin(), v.end());
    });
  t.phi3.for_each_slot([&](const IndexTuple& a, const IndexTuple& b, std::size_t z) {
    const Vector& v = t.phi3.at(a, b, z);
    out.insert(out.end(), v.begin(), v.end());
  });
  (void)dim;
  (void)m;
  return out;
}

}  // namespace detail

/// Matrix of partial: C^n -> C^{n+1} in the canonical elementary basis.
inline Matrix partial_matrix(const Bimodule& b, std::size_t n) {
  std::size_t dim = b.base.dim, m = b.module_dim;
  std::size_t dn = detail::triple_space_dim(n, dim, m);
  std::size_t dn1 = detail::triple_space_dim(n + 1, dim, m);
  Matrix mat(dn1, dn);
  std::size_t col = 0;
  auto emit = [&](const CochainTriple& basis_elt) {
    CochainTriple img = partial_components(b, basis_elt);
    auto coords = detail::triple_coords(img, dim, m);
    for (std::size_t r = 0; r < dn1; ++r) mat(r, col) = coords[r];
    ++col;
  };
  CochainTriple e = CochainTriple::zero(n, dim, m);
  e.phi1.for_each_slot([&](const IndexTuple& w, std::size_t z) {
    for (std::size_t c = 0; c < dim; ++c) {
      CochainTriple basis_elt = CochainTriple::zero(n, dim, m);
      basis_elt.phi1.at(w, z) = unit_vector(dim, c);
      emit(basis_elt);
    }
  });
  if (e.phi2)
    e.phi2->for_each_slot([&](const IndexTuple& a, const IndexTuple& bb, std::size_t z) {
      for (std::size_t c = 0; c < m; ++c) {
        CochainTriple basis_elt = CochainTriple::zero(n, dim, m);
        basis_elt.phi2->at(a, bb, z) = unit_vector(m, c);
        emit(basis_elt);
      }
    });
  e.phi3.for_each_slot([&](const IndexTuple& a, const IndexTuple& bb, std::size_t z) {
    for (std::size_t c = 0; c < m; ++c) {
      CochainTriple basis_elt = CochainTriple::zero(n, dim, m);
      basis_elt.phi3.at(a, bb, z) = unit_vector(m, c);
      emit(basis_elt);
    }
  });
  return mat;
}

struct CohomologyRow {
  std::size_t n;
  std::size_t space_dim;
  std::size_t rank_out;   // rank of partial_n
  std::size_t rank_in;    // rank of partial_{n-1} (0 for n = 1)
  std::size_t betti;      // dim H^n
};

/// dim H^n(g, L, R) for n = 1..nmax via exact rank computations.
inline std::vector<CohomologyRow> cohomology_dims(const Bimodule& b, std::size_t nmax) {
  std::vector<CohomologyRow> rows;
  std::size_t dim = b.base.dim, m = b.module_dim;
  std::size_t prev_rank = 0;
  for (std::size_t n = 1; n <= nmax; ++n) {
    Matrix mat = partial_matrix(b, n);
    std::size_t rank = mat.rank();
    std::size_t space = detail::triple_space_dim(n, dim, m);
    rows.push_back({n, space, rank, prev_rank, space - rank - prev_rank});
    prev_rank = rank;
  }
  return rows;
}

}  // namespace prelie

#endif  // PRELIE_COCHAIN_HPP

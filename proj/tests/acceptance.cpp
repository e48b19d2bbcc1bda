// Acceptance suite: replays the worked examples and the cross-cutting
// properties end to end, printing one pass/fail line per criterion.
#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "prelie/corpus.hpp"

#include <cstdio>
#include <set>
#include <string>
#include <vector>

using namespace prelie;

namespace {

Matrix make_rows(std::vector<std::vector<Scalar>> rows) {
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

Matrix random_matrix(RationalSampler& s, std::size_t r, std::size_t c, std::int64_t bound) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = s.draw(bound);
  return m;
}

Matrix random_symmetric(RationalSampler& s, std::size_t n, std::int64_t bound) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar v = s.draw(bound);
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

Cochain random_cochain(std::size_t degree, std::size_t dom, std::size_t cod,
                       RationalSampler& s) {
  Cochain f(degree, dom, cod);
  f.for_each_slot([&](const IndexTuple& wedge, std::size_t last) {
    for (auto& v : f.at(wedge, last)) v = s.draw(3);
  });
  return f;
}

// The fixed instantiations of the parameterized examples, shared with the
// corpus entry definitions.
Assignment fixed_2d() {
  return {{"a", Scalar(1)}, {"b", Scalar(2)}, {"c", Scalar(3)}, {"d", Scalar(4)}};
}
Assignment fixed_3d() {
  return {{"a", Scalar(1)}, {"b", Scalar(2)}, {"c", Scalar(3)},
          {"d", Scalar(4)}, {"e", Scalar(5)}, {"f", Scalar(6)}};
}
Assignment fixed_12a() {
  return {{"a", Scalar(1)},   {"b", Scalar(2)},   {"c", Scalar(3)},
          {"r11", Scalar(1)}, {"r22", Scalar(2)}, {"r23", Scalar(3)}};
}
Assignment fixed_12b() {
  return {{"a", Scalar(1)},   {"b", Scalar(2)},   {"c", Scalar(3)},
          {"r11", Scalar(1)}, {"r12", Scalar(2)}, {"r13", Scalar(3)}};
}
Assignment fixed_rb1() {
  return {{"r21", Scalar(1)},
          {"r22", Scalar(2)},
          {"r31", Scalar(3)},
          {"r32", Scalar(5)},
          {"w32", Scalar(7)}};
}
Assignment fixed_rb2() {
  return {{"r31", Scalar(1)}, {"r32", Scalar(2)}, {"r33", Scalar(3)}, {"w32", Scalar(4)}};
}
Assignment fixed_rb3() {
  return {{"r21", Scalar(1)},
          {"r31", Scalar(2)},
          {"r32", Scalar(3)},
          {"w22", Scalar(4)},
          {"w32", Scalar(5)}};
}

/// Every strong Maurer-Cartan instance in the corpus: (bimodule, T, Omega).
struct McInstance {
  Bimodule module;
  Matrix t;
  Matrix omega;
  bool invertible_t;
};

std::vector<McInstance> strong_mc_instances() {
  using namespace prelie::corpus::detail_c;
  Bimodule reg_h = regular_bimodule(corpus::a3h());
  Bimodule coadj_2 = dual_bimodule(regular_bimodule(corpus::a2()));
  Bimodule coadj_3a = dual_bimodule(regular_bimodule(corpus::a3a()));
  Bimodule coadj_3n = dual_bimodule(regular_bimodule(corpus::a3n()));
  Matrix r3_inv = make_rows({{1, 0, 0},
                             {0, Scalar(-3) / 4, Scalar(1) / 2},
                             {0, Scalar(1) / 2, 0}});
  return {
      {reg_h, rb1(fixed_rb1()), om1(fixed_rb1()), false},
      {reg_h, rb2(fixed_rb2()), om2(fixed_rb2()), false},
      {reg_h, rb3(fixed_rb3()), om3(fixed_rb3()), false},
      // symmetric solution / form pairs, transported by the duality theorem
      {coadj_2, r2(fixed_2d()), b2(fixed_2d()), true},
      {coadj_3a, r3_inv, b3(fixed_3d()), true},
      {coadj_3a, r12a(fixed_12a()), b12a(fixed_12a()), false},
      {coadj_3n, r12b(fixed_12b()), b12b(fixed_12b()), false},
  };
}

/// Cubic-expression route for symmetric solutions, independent of the
/// operator-based check: evaluates the obstruction on all basis covectors.
bool cubic_vanishes(const Algebra& alg, const Matrix& r) {
  if (r != r.transpose()) return false;
  std::size_t n = alg.dim;
  auto bracket = [&](const Vector& x, const Vector& y) {
    return alg.multiply(x, y) - alg.multiply(y, x);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector ri = r.column(i), rj = r.column(j), rk = r.column(k);
        Scalar value = -alg.multiply(rj, rk)[i] + alg.multiply(ri, rk)[j] +
                       bracket(ri, rj)[k];
        if (value != 0) return false;
      }
  return true;
}

/// Cocycle identity B(x.y, z) - B(x, y.z) = B(y.x, z) - B(y, x.z) on basis
/// triples, written directly against the structure constants.
bool cocycle_by_hand(const Algebra& alg, const Matrix& B) {
  std::size_t n = alg.dim;
  auto pair = [&](const Vector& x, const Vector& y) {
    Scalar out = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out += x[i] * B(i, j) * y[j];
    return out;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        Scalar lhs = pair(alg.multiply(ei, ej), ek) - pair(ei, alg.multiply(ej, ek));
        Scalar rhs = pair(alg.multiply(ej, ei), ek) - pair(ej, alg.multiply(ei, ek));
        if (lhs != rhs) return false;
      }
  return true;
}

template <typename F>
bool verdict_of(F&& f) {
  try {
    return f();
  } catch (const std::exception&) {
    return false;
  }
}

/// Coboundary matrix of the module-valued differential, assembled column by
/// column from basis cochains in canonical slot order.
Matrix delta_matrix(const Bimodule& b, std::size_t n) {
  std::size_t dim = b.base.dim, m = b.module_dim;
  auto coords = [&](const Cochain& f) {
    std::vector<Scalar> out;
    f.for_each_slot([&](const IndexTuple& wedge, std::size_t last) {
      const Cochain& cf = f;
      for (const auto& v : cf.at(wedge, last)) out.push_back(v);
    });
    return out;
  };
  std::size_t cols = binom(dim, n - 1) * dim * m;
  std::size_t rows = binom(dim, n) * dim * m;
  Matrix out(rows, cols);
  std::size_t col = 0;
  Cochain basis(n, dim, m);
  basis.for_each_slot([&](const IndexTuple& wedge, std::size_t last) {
    for (std::size_t c = 0; c < m; ++c) {
      Cochain e(n, dim, m);
      e.at(wedge, last)[c] = 1;
      auto image = coords(delta(b, e));
      for (std::size_t r = 0; r < rows; ++r) out(r, col) = image[r];
      ++col;
    }
  });
  return out;
}

}  // namespace

TEST_CASE("criterion 01: 2-dim form/operator families pass at the fixed tuple and 12 samples") {
  SearchConfig cfg;
  CHECK(run_corpus("ex-4.2-HN", cfg).all_matched);
  CHECK(run_corpus("ex-4.2-KVN", cfg).all_matched);
  // the fixed tuple (1,2,3,4), checked directly
  using namespace prelie::corpus::detail_c;
  Algebra alg = corpus::a2();
  CHECK(check_hn(alg, SymForm2(b2(fixed_2d())), n2(fixed_2d())));
  CHECK(check_kvn(alg, SymTensor2(r2(fixed_2d())), n2(fixed_2d())));
}

TEST_CASE("criterion 02: 3-dim form/operator families pass at the fixed tuple and 12 samples") {
  SearchConfig cfg;
  CHECK(run_corpus("ex-4.17-HN", cfg).all_matched);
  CHECK(run_corpus("ex-4.17-KVN", cfg).all_matched);
  using namespace prelie::corpus::detail_c;
  Algebra alg = corpus::a3a();
  CHECK(check_hn(alg, SymForm2(b3(fixed_3d())), n3(fixed_3d())));
  auto [r, n] = kvn_from_hn(alg, SymForm2(b3(fixed_3d())), n3(fixed_3d()));
  CHECK(check_kvn(alg, r, n));
}

TEST_CASE("criterion 03: three Rota-Baxter families with strong Maurer-Cartan solutions") {
  SearchConfig cfg;
  for (const char* id : {"ex-5.5-case1", "ex-5.5-case2", "ex-5.5-case3"}) {
    CorpusReport rep = run_corpus(id, cfg);
    CHECK(rep.all_matched);
    // each entry carries the operator check, the strong solution check, and
    // the agreement of the direct route with the twilled route
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].checks.size() == 6);  // three checks, fixed + sampled
  }
}

TEST_CASE("criterion 04: solution/form pairs pass and convert to the printed operator pairs") {
  SearchConfig cfg;
  CHECK(run_corpus("ex-5.12a-KVB", cfg).all_matched);
  CHECK(run_corpus("ex-5.12b-KVB", cfg).all_matched);
  // the first entry's derived operator matches the printed closed form at
  // every sample; that sub-check is part of the entry, so spot-check its rows
  CorpusReport rep = run_corpus("ex-5.12a-KVB", cfg);
  bool saw_pattern_row = false;
  for (const auto& row : rep.entries[0].checks)
    if (row.check.find("printed closed form") != std::string::npos &&
        row.check.find("samples") != std::string::npos) {
      saw_pattern_row = true;
      CHECK(row.verdict == "true");
    }
  CHECK(saw_pattern_row);
}

TEST_CASE("criterion 05: every strong solution induces two coupled structures with one product") {
  for (const McInstance& inst : strong_mc_instances()) {
    auto [first, second] = on_from_mc(inst.module, inst.t, inst.omega);
    CHECK(check_on_structure(first));
    CHECK(check_on_structure(second));
    // the twisted product, the star product, and the composed-operator
    // product are the same tensor
    const Matrix &T = first.T.matrix, &N = first.N.matrix, &S = first.S.matrix;
    Tensor3 twisted = detail::twisted_induced_tensor(inst.module, T, S);
    Tensor3 star = detail::star_tensor(inst.module, T, N, S);
    Tensor3 composed = detail::induced_tensor(inst.module, N * T);
    CHECK(twisted == star);
    CHECK(twisted == composed);
  }
}

TEST_CASE("criterion 06: the operator-to-solution round trip is the identity for invertible T") {
  int round_trips = 0;
  for (const McInstance& inst : strong_mc_instances()) {
    if (!inst.invertible_t) continue;
    auto [first, second] = on_from_mc(inst.module, inst.t, inst.omega);
    CHECK(mc_from_on(first) == inst.omega);
    (void)second;
    ++round_trips;
  }
  CHECK(round_trips == 2);
}

TEST_CASE("criterion 07: operator ladders to depth 3 pass their checks pairwise") {
  using namespace prelie::corpus::detail_c;
  // strong-solution ladders (T_k and Omega_k)
  for (const McInstance& inst : strong_mc_instances())
    CHECK(hierarchy_from_mc(inst.module, inst.t, inst.omega, 3));
  // coupled-structure ladders
  Bimodule coadj_2 = dual_bimodule(regular_bimodule(corpus::a2()));
  Bimodule coadj_3a = dual_bimodule(regular_bimodule(corpus::a3a()));
  Matrix r3_inv = make_rows({{1, 0, 0},
                             {0, Scalar(-3) / 4, Scalar(1) / 2},
                             {0, Scalar(1) / 2, 0}});
  for (const OnStructure& os :
       {OnStructure(coadj_2, r2(fixed_2d()), n2(fixed_2d()), n2(fixed_2d()).transpose()),
        OnStructure(coadj_3a, r3_inv, n3(fixed_3d()), n3(fixed_3d()).transpose())})
    CHECK(hierarchy(os, 3).report);
  // symmetric-solution ladders r_k = N^k r
  CHECK(r_hierarchy(corpus::a2(), SymTensor2(r2(fixed_2d())), n2(fixed_2d()), 3).report);
  CHECK(r_hierarchy(corpus::a3a(), SymTensor2(r3_inv), n3(fixed_3d()), 3).report);
  CHECK(r_hierarchy(corpus::a3a(), SymTensor2(r12a(fixed_12a())), n12a(fixed_12a()), 3)
            .report);
  CHECK(r_hierarchy(corpus::a3n(), SymTensor2(r12b(fixed_12b())), n12b(fixed_12b()), 3)
            .report);
}

TEST_CASE("criterion 08: cochain calculus (differentials square to zero, graded bracket laws)") {
  // assembled matrices of both differentials square to zero for n <= 3
  for (const Algebra& alg : {corpus::a2(), corpus::a3a()}) {
    for (bool use_dual : {false, true}) {
      Bimodule b = regular_bimodule(alg);
      if (use_dual) b = dual_bimodule(b);
      for (std::size_t n = 1; n + 1 <= 3; ++n) {
        CHECK((delta_matrix(b, n + 1) * delta_matrix(b, n)).is_zero());
        CHECK((partial_matrix(b, n + 1) * partial_matrix(b, n)).is_zero());
      }
    }
  }
  // graded antisymmetry and graded Jacobi on 20 seeded pairs/triples
  RationalSampler s(55);
  for (int t = 0; t < 20; ++t) {
    std::size_t dp = 1 + t % 3, dq = 1 + (t / 3) % 3, dr = 1 + (t / 9) % 3;
    Cochain P = random_cochain(dp, 3, 3, s);
    Cochain Q = random_cochain(dq, 3, 3, s);
    Cochain R = random_cochain(dr, 3, 3, s);
    std::size_t p = dp - 1, q = dq - 1, r = dr - 1;
    int spq = (p * q) % 2 == 0 ? 1 : -1;
    CHECK(mn_bracket(P, Q) == mn_bracket(Q, P) * Scalar(-spq));
    int spr = (p * r) % 2 == 0 ? 1 : -1;
    int sqp = (q * p) % 2 == 0 ? 1 : -1;
    int srq = (r * q) % 2 == 0 ? 1 : -1;
    Cochain jac = mn_bracket(mn_bracket(P, Q), R) * Scalar(spr) +
                  mn_bracket(mn_bracket(Q, R), P) * Scalar(sqp) +
                  mn_bracket(mn_bracket(R, P), Q) * Scalar(srq);
    CHECK(jac.is_zero());
  }
  // [pi, pi] = 0 exactly characterizes the defining identity
  RationalSampler s2(101);
  int negatives = 0;
  for (const Algebra& alg : {corpus::a2(), corpus::a3a(), corpus::a3h(), corpus::a3n()}) {
    Cochain pi = algebra_cochain(alg);
    CHECK(mn_bracket(pi, pi).is_zero());
    for (int t = 0; t < 5; ++t) {
      Algebra mut = alg;
      std::size_t n = alg.dim;
      std::size_t i = t % n, j = (t + 1) % n, k = (t + 2) % n;
      mut.products(i, j, k) += s2.draw_nonzero(3);
      bool prelie = static_cast<bool>(check_pre_lie(mut.products));
      Cochain mpi = algebra_cochain(mut);
      CHECK(mn_bracket(mpi, mpi).is_zero() == prelie);
      if (!prelie) ++negatives;
    }
  }
  CHECK(negatives >= 10);
}

TEST_CASE("criterion 09: every equivalence holds both ways on corpus and random instances") {
  using namespace prelie::corpus::detail_c;
  std::vector<Algebra> algebras = {corpus::a2(), corpus::a3a(), corpus::a3h(),
                                   corpus::a3n()};

  SUBCASE("symmetric solution <=> operator on the coadjoint module") {
    RationalSampler s(11);
    int positives = 0;
    for (int t = 0; t < 20; ++t) {
      const Algebra& alg = algebras[t % algebras.size()];
      Bimodule dual = dual_bimodule(regular_bimodule(alg));
      Matrix r = random_symmetric(s, alg.dim, 2);
      bool via_cubic = cubic_vanishes(alg, r);
      bool via_operator = verdict_of([&] { return bool(check_o_operator(dual, r)); });
      CHECK(via_cubic == via_operator);
      if (via_cubic) ++positives;
    }
    CHECK(cubic_vanishes(corpus::a2(), r2(fixed_2d())));
    CHECK(bool(check_o_operator(dual_bimodule(regular_bimodule(corpus::a2())),
                                r2(fixed_2d()))));
    (void)positives;
  }

  SUBCASE("solution/operator pair <=> coupled structure on the coadjoint module") {
    RationalSampler s(13);
    for (int t = 0; t < 20; ++t) {
      const Algebra& alg = algebras[t % algebras.size()];
      Bimodule dual = dual_bimodule(regular_bimodule(alg));
      Matrix r, n;
      if (t % 4 == 0 && alg.dim == 2) {  // seed some positives
        r = r2(fixed_2d());
        n = n2({{"c", s.draw(3)}, {"d", s.draw(3)}});
      } else {
        r = random_symmetric(s, alg.dim, 2);
        n = random_matrix(s, alg.dim, alg.dim, 2);
      }
      bool direct = cubic_vanishes(alg, r) && bool(check_nijenhuis(alg, n)) &&
                    n * r == r * n.transpose() &&
                    verdict_of([&] {
                      return detail::induced_tensor(dual, n * r) ==
                             detail::deformed_tensor(detail::induced_tensor(dual, r), n.transpose());
                    });
      bool coupled = verdict_of([&] {
        return bool(check_on_structure(OnStructure(dual, r, n, n.transpose())));
      });
      CHECK(direct == coupled);
    }
  }

  SUBCASE("form/operator pair <=> solution/operator pair via the inverse") {
    RationalSampler s(17);
    for (int t = 0; t < 20; ++t) {
      const Algebra& alg = algebras[t % algebras.size()];
      Matrix b, n;
      if (t % 4 == 0 && alg.dim == 2) {
        b = b2(fixed_2d());
        n = n2({{"c", s.draw(3)}, {"d", s.draw(3)}});
      } else {
        do {
          b = random_symmetric(s, alg.dim, 2);
        } while (!b.invertible());
        n = random_matrix(s, alg.dim, alg.dim, 2);
      }
      bool via_form = verdict_of([&] { return bool(check_hn(alg, SymForm2(b), n)); });
      bool via_inverse = verdict_of(
          [&] { return bool(check_kvn(alg, SymTensor2(b.inverse()), n)); });
      CHECK(via_form == via_inverse);
    }
  }

  SUBCASE("solution/form pair <=> strong Maurer-Cartan on the mixed product") {
    RationalSampler s(19);
    for (int t = 0; t < 20; ++t) {
      Algebra alg;
      Matrix r;
      if (t % 2 == 0) {
        alg = corpus::a3a();
        r = r12a({{"r11", s.draw(2)}, {"r22", s.draw(2)}, {"r23", s.draw(2)}});
      } else {
        alg = corpus::a3n();
        r = r12b({{"r11", s.draw(2)}, {"r12", s.draw(2)}, {"r13", s.draw(2)}});
      }
      Matrix b = random_symmetric(s, alg.dim, 2);
      bool via_pair =
          verdict_of([&] { return bool(check_kvb(alg, SymTensor2(r), SymForm2(b))); });
      bool via_mc = verdict_of([&] {
        Bimodule dual = dual_bimodule(regular_bimodule(alg));
        if (!cubic_vanishes(alg, r) || !cocycle_by_hand(alg, b)) return false;
        return check_strong_mc(twilled_from_o_operator(dual, r), b).ok();
      });
      CHECK(via_pair == via_mc);
    }
    // corpus positives
    CHECK(bool(check_kvb(corpus::a3a(), SymTensor2(r12a(fixed_12a())),
                         SymForm2(b12a(fixed_12a())))));
    CHECK(bool(check_kvb(corpus::a3n(), SymTensor2(r12b(fixed_12b())),
                         SymForm2(b12b(fixed_12b())))));
  }

  SUBCASE("structure pair conditions <=> lifted operator on the semidirect product") {
    RationalSampler s(23);
    std::vector<Bimodule> modules = {regular_bimodule(corpus::a2()),
                                     dual_bimodule(regular_bimodule(corpus::a2())),
                                     regular_bimodule(corpus::a3a()),
                                     dual_bimodule(regular_bimodule(corpus::a3h()))};
    for (int t = 0; t < 20; ++t) {
      const Bimodule& b = modules[t % modules.size()];
      Matrix n = random_matrix(s, b.base.dim, b.base.dim, 1);
      Matrix sm = random_matrix(s, b.module_dim, b.module_dim, 1);
      bool pair_route = bool(check_nijenhuis_structure(b, n, sm));
      bool lifted = bool(check_nijenhuis(semidirect_product(dual_bimodule(b)),
                                         detail::block_diag(n, sm.transpose())));
      CHECK(pair_route == lifted);
      bool dp_route = bool(check_deformation_pair(b, n, sm));
      bool dp_lifted =
          bool(check_nijenhuis(semidirect_product(b), detail::block_diag(n, sm)));
      CHECK(dp_route == dp_lifted);
    }
    // corpus positive: the transpose pairing on the coadjoint module
    Bimodule dual = dual_bimodule(regular_bimodule(corpus::a2()));
    Matrix n = n2(fixed_2d());
    CHECK(bool(check_nijenhuis_structure(dual, n, n.transpose())));
  }

  SUBCASE("componentwise differential <=> graded-bracket differential") {
    for (const Algebra& alg : {corpus::a2(), corpus::a3a()}) {
      for (bool use_dual : {false, true}) {
        Bimodule b = regular_bimodule(alg);
        if (use_dual) b = dual_bimodule(b);
        RationalSampler s(29 + alg.dim + (use_dual ? 1 : 0));
        for (int t = 0; t < 5; ++t) {
          std::size_t n = 1 + t % 3;
          CochainTriple phi = CochainTriple::zero(n, alg.dim, b.module_dim);
          phi.phi1 = random_cochain(n, alg.dim, alg.dim, s);
          if (phi.phi2)
            phi.phi2->for_each_slot(
                [&](const IndexTuple& t1, const IndexTuple& t2, std::size_t z) {
                  for (auto& v : phi.phi2->at(t1, t2, z)) v = s.draw(3);
                });
          phi.phi3.for_each_slot(
              [&](const IndexTuple& t1, const IndexTuple& t2, std::size_t z) {
                for (auto& v : phi.phi3.at(t1, t2, z)) v = s.draw(3);
              });
          CHECK(partial_components(b, phi) == partial_mn(b, phi));
        }
      }
    }
  }
}

TEST_CASE("criterion 10: enumeration and search agree with their definitional filters") {
  SearchConfig cfg;
  Algebra alg = corpus::a2();

  // exhaustive enumeration over the default grid equals the direct filter
  std::vector<LinearMap> found = enumerate_operators(SearchTarget::nijenhuis(alg), cfg);
  std::set<std::string> found_keys;
  for (const auto& f : found) found_keys.insert(corpus::detail_c::render(f.matrix));
  std::set<std::string> oracle_keys;
  std::size_t total = 0;
  std::vector<std::size_t> odo(4, 0);
  for (;;) {
    Matrix m(2, 2);
    for (std::size_t c = 0; c < 4; ++c) m(c / 2, c % 2) = cfg.grid[odo[c]];
    ++total;
    if (check_nijenhuis(alg, m)) oracle_keys.insert(corpus::detail_c::render(m));
    std::size_t p = 4;
    while (p > 0) {
      if (++odo[p - 1] < cfg.grid.size()) break;
      odo[p - 1] = 0;
      --p;
    }
    if (p == 0) break;
  }
  CHECK(total == 81);
  CHECK(found_keys == oracle_keys);

  // every enumerated operator deforms the product into another valid algebra
  // and is a homomorphism from the deformed product to the original
  for (const auto& f : found) {
    const Matrix& n = f.matrix;
    Tensor3 deformed = detail::deformed_tensor(alg.products, n);
    CHECK(check_pre_lie(deformed));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        CHECK(n.apply(deformed.product(i, j)) ==
              alg.multiply(n.column(i), n.column(j)));
  }

  // grid search for strong solutions equals the definitional filter
  using namespace prelie::corpus::detail_c;
  TwilledAlgebra tw =
      twilled_from_o_operator(regular_bimodule(corpus::a3h()), rb1(fixed_rb1()));
  std::vector<Matrix> solutions = search_strong_mc(tw, cfg);
  std::vector<Matrix> basis = solve_cocycle_space(tw);
  std::set<std::string> found_sols, oracle_sols;
  for (const auto& m : solutions) found_sols.insert(render(m));
  std::vector<std::size_t> codo(basis.size(), 0);
  for (;;) {
    Matrix omega(tw.n2, tw.n1);
    for (std::size_t k = 0; k < basis.size(); ++k)
      omega = omega + cfg.coeff_grid[codo[k]] * basis[k];
    if (check_strong_mc(tw, omega).ok()) oracle_sols.insert(render(omega));
    std::size_t p = basis.size();
    while (p > 0) {
      if (++codo[p - 1] < cfg.coeff_grid.size()) break;
      codo[p - 1] = 0;
      --p;
    }
    if (p == 0) break;
  }
  CHECK(found_sols == oracle_sols);
  CHECK(!found_sols.empty());
}

TEST_CASE("criterion 11: display discrepancies are reported, never asserted") {
  SearchConfig cfg;
  for (const char* id : {"ex-5.2-closing-1", "ex-5.2-closing-2", "ex-5.2-closing-3"}) {
    CorpusReport rep = run_corpus(id, cfg);
    REQUIRE(rep.entries.size() == 1);
    const CorpusEntryReport& entry = rep.entries[0];
    // the entry passes even though the displayed matrices differ
    CHECK(entry.all_matched);
    bool saw_report_row = false;
    for (const auto& row : entry.checks) {
      if (row.expected == "report") {
        saw_report_row = true;
        CHECK(row.matched);  // report rows never hard-assert equality
      } else {
        // the computed structure pair itself must pass
        CHECK(row.verdict == "true");
      }
    }
    CHECK(saw_report_row);
    // the structured comparison is part of the report
    bool saw_computed = false, saw_displayed = false;
    for (const auto& note : entry.notes) {
      if (note.find("computed N") != std::string::npos) saw_computed = true;
      if (note.find("displayed N") != std::string::npos) saw_displayed = true;
    }
    CHECK(saw_computed);
    CHECK(saw_displayed);
  }
}

int main(int argc, char** argv) {
  const char* criteria[] = {
      "criterion 01*", "criterion 02*", "criterion 03*", "criterion 04*",
      "criterion 05*", "criterion 06*", "criterion 07*", "criterion 08*",
      "criterion 09*", "criterion 10*", "criterion 11*",
  };
  int failures = 0;
  for (const char* pattern : criteria) {
    doctest::Context ctx(argc, argv);
    ctx.setOption("test-case", pattern);
    ctx.setOption("minimal", true);
    int rc = ctx.run();
    std::string name(pattern);
    name.pop_back();  // trim the trailing wildcard
    std::printf("%s: %s\n", name.c_str(), rc == 0 ? "pass" : "FAIL");
    if (rc != 0) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

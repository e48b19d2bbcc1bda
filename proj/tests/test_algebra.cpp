#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "prelie/algebra.hpp"
#include "prelie/corpus_algebras.hpp"

using namespace prelie;

namespace {

Bimodule random_mutation(const Bimodule& b, std::uint64_t seed) {
  RationalSampler s(seed);
  Bimodule out = b;
  std::size_t i = 0;
  out.L[0](0, 0) += s.draw_nonzero(3);
  (void)i;
  return out;
}

}  // namespace

TEST_CASE("corpus algebras satisfy associator symmetry") {
  CHECK(check_pre_lie(corpus::a2().products));
  CHECK(check_pre_lie(corpus::a3a().products));
  CHECK(check_pre_lie(corpus::a3h().products));
  CHECK(check_pre_lie(corpus::a3n().products));
  CHECK(check_pre_lie(Tensor3(3)));  // abelian
}

TEST_CASE("non-example fails with the right witness") {
  // only e1.e2 = e1: associator symmetry breaks at (1,2,2)
  Tensor3 c(2);
  c(0, 1, 0) = 1;
  auto rep = check_pre_lie(c);
  CHECK(!rep);
  CHECK(rep.detail.find("(1,2,2)") != std::string::npos);
}

TEST_CASE("sub-adjacent brackets") {
  // A2: [e2,e1] = -e1, all else zero
  Tensor3 b = sub_adjacent(corpus::a2());
  CHECK(b.product(1, 0) == Vector{Scalar(-1), Scalar(0)});
  CHECK(b.product(0, 1) == Vector{Scalar(1), Scalar(0)});
  CHECK(is_zero(b.product(1, 1)));
  CHECK(is_zero(b.product(0, 0)));

  // Heisenberg: [e1,e2] = e3, cyclic others zero
  Tensor3 h = sub_adjacent(corpus::a3h());
  CHECK(h.product(0, 1) == Vector{Scalar(0), Scalar(0), Scalar(1)});
  CHECK(is_zero(h.product(0, 2)));
  CHECK(is_zero(h.product(1, 2)));

  CHECK(sub_adjacent(Algebra::zero(3)).is_zero());

  Tensor3 bad(2);
  bad(0, 1, 0) = 1;
  CHECK_THROWS_AS(sub_adjacent(Algebra(2, bad)), NotPreLie);
}

TEST_CASE("regular and trivial bimodules pass, cross-wired ones fail") {
  for (const Algebra& alg : {corpus::a2(), corpus::a3a(), corpus::a3h(), corpus::a3n()}) {
    CHECK(check_bimodule(regular_bimodule(alg)));
    CHECK(check_bimodule(trivial_bimodule(alg)));
  }
  // regular L of A3h paired with R of A3a violates the identities
  Bimodule mixed = regular_bimodule(corpus::a3h());
  mixed.R = regular_bimodule(corpus::a3a()).R;
  CHECK(!check_bimodule(mixed));
}

TEST_CASE("dual bimodule passes iff the original does") {
  for (const Algebra& alg : {corpus::a2(), corpus::a3a(), corpus::a3h(), corpus::a3n()}) {
    Bimodule reg = regular_bimodule(alg);
    Bimodule dual = dual_bimodule(reg);
    CHECK(check_bimodule(dual));
    // (g*; ad* = L*-R*, -R*) spelled out with transposes
    for (std::size_t i = 0; i < alg.dim; ++i) {
      CHECK(dual.L[i] == -(reg.L[i] - reg.R[i]).transpose());
      CHECK(dual.R[i] == reg.R[i].transpose());
    }
    // mutated original fails both directions of the equivalence
    Bimodule broken = random_mutation(reg, 3 + alg.dim);
    if (!check_bimodule(broken)) {
      Bimodule broken_dual = broken;
      for (std::size_t i = 0; i < alg.dim; ++i) {
        broken_dual.L[i] = -(broken.L[i] - broken.R[i]).transpose();
        broken_dual.R[i] = broken.R[i].transpose();
      }
      CHECK(!check_bimodule(broken_dual));
    }
  }
  Bimodule triv = trivial_bimodule(corpus::a2());
  Bimodule dual_triv = dual_bimodule(triv);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(dual_triv.L[i].is_zero());
    CHECK(dual_triv.R[i].is_zero());
  }
}

TEST_CASE("double dual computed case-by-case: recovers the original for A3a") {
  // -(-(L-R)^T - R^T)^T = L and (R^T)^T = R, verified concretely
  Bimodule reg = regular_bimodule(corpus::a3a());
  Bimodule dd = dual_bimodule(dual_bimodule(reg));
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(dd.L[i] == reg.L[i]);
    CHECK(dd.R[i] == reg.R[i]);
  }
}

TEST_CASE("semidirect products are pre-Lie") {
  for (const Algebra& alg : {corpus::a2(), corpus::a3a(), corpus::a3h(), corpus::a3n()}) {
    Algebra sd = semidirect_product(regular_bimodule(alg));
    CHECK(sd.dim == 2 * alg.dim);
    CHECK(check_pre_lie(sd.products));
    Algebra sd_dual = semidirect_product(dual_bimodule(regular_bimodule(alg)));
    CHECK(check_pre_lie(sd_dual.products));
  }
  // A2 with trivial bimodule embeds A2 and acts by zero
  Algebra sd = semidirect_product(trivial_bimodule(corpus::a2()));
  const Algebra a2 = corpus::a2();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Vector p = sd.products.product(i, j);
      CHECK(Vector(p.begin(), p.begin() + 2) == a2.products.product(i, j));
      CHECK(p[2] == 0);
      CHECK(is_zero(sd.products.product(i, 2)));
      CHECK(is_zero(sd.products.product(2, i)));
    }
}

TEST_CASE("semidirect product agrees with the displayed formula") {
  Bimodule b = regular_bimodule(corpus::a3h());
  Algebra sd = semidirect_product(b);
  RationalSampler s(11);
  std::size_t n = 3, m = 3;
  for (int t = 0; t < 5; ++t) {
    Vector x1(n), v1(m), x2(n), v2(m);
    for (auto* v : {&x1, &x2}) for (auto& c : *v) c = s.draw(5);
    for (auto* v : {&v1, &v2}) for (auto& c : *v) c = s.draw(5);
    Vector w1(n + m), w2(n + m);
    for (std::size_t i = 0; i < n; ++i) { w1[i] = x1[i]; w2[i] = x2[i]; }
    for (std::size_t i = 0; i < m; ++i) { w1[n + i] = v1[i]; w2[n + i] = v2[i]; }
    Vector prod = sd.multiply(w1, w2);
    Vector top = b.base.multiply(x1, x2);
    Vector bot = b.act_left(x1).apply(v2) + b.act_right(x2).apply(v1);
    CHECK(Vector(prod.begin(), prod.begin() + n) == top);
    CHECK(Vector(prod.begin() + n, prod.end()) == bot);
  }
}

TEST_CASE("left and right multiplication operators") {
  Algebra a2 = corpus::a2();
  // L_{e2} = diag(-1, 1): e2.e1 = -e1, e2.e2 = e2
  Matrix L2 = a2.left_mult(unit_vector(2, 1));
  CHECK(L2(0, 0) == -1);
  CHECK(L2(1, 1) == 1);
  CHECK(L2(0, 1) == 0);
  // R_{e1}: e2.e1 = -e1 so column 2 is -e1
  Matrix R1 = a2.right_mult(unit_vector(2, 0));
  CHECK(R1(0, 1) == -1);
  CHECK(R1(0, 0) == 0);
}

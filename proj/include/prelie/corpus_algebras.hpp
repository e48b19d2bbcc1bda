#ifndef PRELIE_CORPUS_ALGEBRAS_HPP
#define PRELIE_CORPUS_ALGEBRAS_HPP

#include "prelie/algebra.hpp"

namespace prelie::corpus {

/// 2-dim algebra with e2.e1 = -e1, e2.e2 = e2.
inline Algebra a2() {
  Tensor3 c(2);
  c(1, 0, 0) = -1;
  c(1, 1, 1) = 1;
  return Algebra(2, std::move(c));
}

/// 3-dim algebra with e3.e2 = e2, e3.e3 = -e3.
inline Algebra a3a() {
  Tensor3 c(3);
  c(2, 1, 1) = 1;
  c(2, 2, 2) = -1;
  return Algebra(3, std::move(c));
}

/// 3-dim algebra with e1.e1 = e1, e1.e2 = e3 (sub-adjacent: Heisenberg).
inline Algebra a3h() {
  Tensor3 c(3);
  c(0, 0, 0) = 1;
  c(0, 1, 2) = 1;
  return Algebra(3, std::move(c));
}

/// 3-dim algebra with e2.e3 = e1, e3.e2 = -e1.
inline Algebra a3n() {
  Tensor3 c(3);
  c(1, 2, 0) = 1;
  c(2, 1, 0) = -1;
  return Algebra(3, std::move(c));
}

}  // namespace prelie::corpus

#endif  // PRELIE_CORPUS_ALGEBRAS_HPP

#ifndef PRELIE_SEARCH_HPP
#define PRELIE_SEARCH_HPP

#include "prelie/twilled.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prelie {

struct SearchSpaceTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConstraintUnsatisfiable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchConfig {
  std::vector<Scalar> grid{Scalar(-1), Scalar(0), Scalar(1)};
  std::vector<Scalar> coeff_grid{Scalar(-2), Scalar(-1), Scalar(0), Scalar(1), Scalar(2)};
  std::size_t samples = 12;
  std::uint64_t seed = 42;
  std::int64_t sampler_bound = 1000;

  void validate() const {
    if (grid.empty() || coeff_grid.empty())
      throw std::invalid_argument("SearchConfig: grids must be non-empty");
    if (samples < 8)
      throw std::invalid_argument("SearchConfig: at least 8 samples are required");
  }
};

/// What to enumerate: Nijenhuis operators on an algebra, O-operators on a
/// bimodule, or Rota-Baxter operators (O-operators on the regular bimodule).
struct SearchTarget {
  enum class Kind { nijenhuis, o_operator, rota_baxter };

  Kind kind;
  Bimodule module;

  static SearchTarget nijenhuis(const Algebra& alg) {
    return {Kind::nijenhuis, regular_bimodule(alg)};
  }
  static SearchTarget o_operator(const Bimodule& b) { return {Kind::o_operator, b}; }
  static SearchTarget rota_baxter(const Algebra& alg) {
    return {Kind::rota_baxter, regular_bimodule(alg)};
  }
};

/// Exhaustive, deterministic enumeration of all grid-entry matrices passing
/// the target check, in lexicographic (row-major, grid-order) order.
inline std::vector<LinearMap> enumerate_operators(const SearchTarget& target,
                                                  const SearchConfig& cfg) {
  cfg.validate();
  std::size_t rows = target.module.base.dim;
  std::size_t cols = target.kind == SearchTarget::Kind::o_operator
                         ? target.module.module_dim
                         : target.module.base.dim;
  std::string domain = target.kind == SearchTarget::Kind::o_operator ? "V" : "g";
  std::size_t cells = rows * cols;
  constexpr std::uint64_t kGuard = 10'000'000;
  std::uint64_t total = 1;
  for (std::size_t c = 0; c < cells; ++c) {
    total *= cfg.grid.size();
    if (total > kGuard)
      throw SearchSpaceTooLarge("enumerate_operators: more than 10^7 candidate maps");
  }
  auto passes = [&](const Matrix& m) {
    if (target.kind == SearchTarget::Kind::nijenhuis)
      return bool(check_nijenhuis(target.module.base, m));
    return bool(check_o_operator(target.module, m));
  };
  std::vector<LinearMap> out;
  std::vector<std::size_t> odo(cells, 0);
  for (;;) {
    Matrix m(rows, cols);
    for (std::size_t c = 0; c < cells; ++c) m(c / cols, c % cols) = cfg.grid[odo[c]];
    if (passes(m)) out.emplace_back(m, domain, "g");
    std::size_t p = cells;
    while (p > 0) {
      if (++odo[p - 1] < cfg.grid.size()) break;
      odo[p - 1] = 0;
      --p;
    }
    if (p == 0) break;
  }
  return out;
}

namespace detail {

/// Canonical nullspace basis via Gauss-Jordan elimination: one basis vector
/// per free column, free columns in increasing order.
inline std::vector<Vector> nullspace_basis(const Matrix& a) {
  std::size_t rows = a.rows(), cols = a.cols();
  std::vector<Vector> m(rows, Vector(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a(i, j);
  std::vector<std::size_t> pivot_row_of(cols, rows);  // rows = "no pivot"
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Scalar inv = Scalar(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Scalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_row_of[c] = r;
    ++r;
  }
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivot_row_of[f] != rows) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t c = 0; c < cols; ++c)
      if (pivot_row_of[c] != rows) v[c] = -m[pivot_row_of[c]][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

/// Exact basis of the space of maps g1 -> g2 satisfying the cocycle clause of
/// the strong Maurer-Cartan equation on a twilled algebra.
inline std::vector<Matrix> solve_cocycle_space(const TwilledAlgebra& tw) {
  std::size_t n1 = tw.n1, n2 = tw.n2;
  auto flat = [&](std::size_t w, std::size_t u) { return w * n1 + u; };
  Matrix system(n1 * n1 * n2, n1 * n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      Vector prod = tw.diamond1.product(i, j);
      for (std::size_t w = 0; w < n2; ++w) {
        std::size_t row = (i * n1 + j) * n2 + w;
        for (std::size_t u = 0; u < n1; ++u) system(row, flat(w, u)) -= prod[u];
        for (std::size_t v = 0; v < n2; ++v) {
          system(row, flat(v, j)) += tw.L1[i](w, v);
          system(row, flat(v, i)) += tw.R1[j](w, v);
        }
      }
    }
  std::vector<Matrix> basis;
  for (const Vector& v : detail::nullspace_basis(system)) {
    Matrix omega(n2, n1);
    for (std::size_t w = 0; w < n2; ++w)
      for (std::size_t u = 0; u < n1; ++u) omega(w, u) = v[flat(w, u)];
    basis.push_back(std::move(omega));
  }
  return basis;
}

/// Enumerates coefficient-grid combinations of the cocycle basis and keeps
/// those that also satisfy the quadratic clause, i.e. the full strong
/// Maurer-Cartan equation. Deterministic lexicographic order.
inline std::vector<Matrix> search_strong_mc(const TwilledAlgebra& tw,
                                            const SearchConfig& cfg) {
  cfg.validate();
  std::vector<Matrix> basis = solve_cocycle_space(tw);
  if (basis.size() > 6)
    throw SearchSpaceTooLarge("search_strong_mc: cocycle space dimension exceeds 6");
  std::vector<Matrix> out;
  std::vector<std::size_t> odo(basis.size(), 0);
  for (;;) {
    Matrix omega(tw.n2, tw.n1);
    for (std::size_t k = 0; k < basis.size(); ++k)
      omega = omega + cfg.coeff_grid[odo[k]] * basis[k];
    if (check_strong_mc(tw, omega).ok()) out.push_back(omega);
    std::size_t p = basis.size();
    while (p > 0) {
      if (++odo[p - 1] < cfg.coeff_grid.size()) break;
      odo[p - 1] = 0;
      --p;
    }
    if (p == 0) break;
  }
  return out;
}

/// A family of checks depending on named rational parameters, with
/// non-vanishing constraints given as lists of parameter names whose product
/// must be nonzero (e.g. {"a","b"} encodes ab != 0).
struct ParameterFamily {
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> nonzero_products;
};

using Assignment = std::map<std::string, Scalar>;

struct FamilySample {
  Assignment values;
  bool passed = false;
};

struct FamilyReport {
  std::vector<FamilySample> samples;
  bool verified = false;
  std::string label;  // verdict, or the first failing witness

  explicit operator bool() const { return verified; }
};

namespace detail {
inline std::string render_assignment(const Assignment& a) {
  std::string out;
  for (const auto& [name, value] : a) {
    if (!out.empty()) out += ", ";
    out += name + "=" + to_string(value);
  }
  return out;
}
}  // namespace detail

/// Polynomial identity testing: runs the check at seeded random rational
/// instantiations honoring the constraints. A throwing check counts as a
/// failing sample. All-pass verdicts are probabilistic and labeled as such.
inline FamilyReport verify_family(const ParameterFamily& family,
                                  const std::function<bool(const Assignment&)>& check,
                                  const SearchConfig& cfg) {
  cfg.validate();
  for (const auto& product : family.nonzero_products)
    for (const auto& name : product)
      if (std::find(family.names.begin(), family.names.end(), name) == family.names.end())
        throw std::invalid_argument("verify_family: constraint references unknown parameter " +
                                    name);
  RationalSampler sampler(cfg.seed);
  FamilyReport report;
  report.verified = true;
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    Assignment values;
    bool satisfied = false;
    for (int attempt = 0; attempt < 128 && !satisfied; ++attempt) {
      values.clear();
      for (const auto& name : family.names) values[name] = sampler.draw(cfg.sampler_bound);
      satisfied = true;
      for (const auto& product : family.nonzero_products) {
        Scalar p = 1;
        for (const auto& name : product) p *= values.at(name);
        if (p == 0) {
          satisfied = false;
          break;
        }
      }
    }
    if (!satisfied)
      throw ConstraintUnsatisfiable(
          "verify_family: could not satisfy the non-vanishing constraints");
    bool passed;
    try {
      passed = check(values);
    } catch (const std::exception&) {
      passed = false;
    }
    report.samples.push_back({values, passed});
    if (!passed && report.verified) {
      report.verified = false;
      report.label = "failed at " + detail::render_assignment(values);
    }
  }
  if (report.verified) report.label = "verified (polynomial identity testing)";
  return report;
}

}  // namespace prelie

#endif  // PRELIE_SEARCH_HPP

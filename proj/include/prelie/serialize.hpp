#ifndef PRELIE_SERIALIZE_HPP
#define PRELIE_SERIALIZE_HPP

#include "json.hpp"
#include "prelie/search.hpp"
#include "prelie/structures.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace prelie {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

inline bool is_positive_integer(const Json& v) {
  return v.is_number_integer() && v.get<std::int64_t>() > 0;
}

inline std::size_t size_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!is_positive_integer(v))
    throw ParseError(std::string("field \"") + name + "\" must be a positive integer");
  return v.get<std::size_t>();
}

/// 1-based index in [1, n], converted to 0-based.
inline std::size_t index_field(const Json& j, const char* name, std::size_t n) {
  const Json& v = field(j, name);
  if (!is_positive_integer(v))
    throw ParseError(std::string("index \"") + name + "\" must be a positive integer");
  std::size_t i = v.get<std::size_t>();
  if (i < 1 || i > n)
    throw ParseError(std::string("index \"") + name + "\" out of range [1," +
                     std::to_string(n) + "]");
  return i - 1;
}

}  // namespace detail

inline Json scalar_to_json(const Scalar& s) { return to_string(s); }

inline Scalar scalar_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rationals serialize as strings like \"-1/2\"");
  return parse_rational(j.get<std::string>());
}

inline Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty row array");
  std::size_t rows = j.size();
  if (!j.at(0).is_array() || j.at(0).empty())
    throw ParseError("matrix rows must be non-empty arrays");
  std::size_t cols = j.at(0).size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j.at(i);
    if (!row.is_array() || row.size() != cols) throw ParseError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json(row.at(c));
  }
  return m;
}

inline Json algebra_to_json(const Algebra& alg) {
  Json out;
  out["dim"] = alg.dim;
  Json products = Json::array();
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j)
      for (std::size_t k = 0; k < alg.dim; ++k)
        if (alg.products(i, j, k) != 0)
          products.push_back(Json{{"i", i + 1},
                                  {"j", j + 1},
                                  {"k", k + 1},
                                  {"c", scalar_to_json(alg.products(i, j, k))}});
  out["products"] = std::move(products);
  return out;
}

inline Algebra algebra_from_json(const Json& j) {
  std::size_t n = detail::size_field(j, "dim");
  Tensor3 c(n);
  for (const Json& entry : detail::field(j, "products")) {
    std::size_t i = detail::index_field(entry, "i", n);
    std::size_t jj = detail::index_field(entry, "j", n);
    std::size_t k = detail::index_field(entry, "k", n);
    c(i, jj, k) = scalar_from_json(detail::field(entry, "c"));
  }
  return Algebra(n, std::move(c));
}

inline Json bimodule_to_json(const Bimodule& b) {
  Json out;
  out["module_dim"] = b.module_dim;
  Json ls = Json::array(), rs = Json::array();
  for (const auto& m : b.L) ls.push_back(matrix_to_json(m));
  for (const auto& m : b.R) rs.push_back(matrix_to_json(m));
  out["L"] = std::move(ls);
  out["R"] = std::move(rs);
  return out;
}

inline Bimodule bimodule_from_json(const Algebra& base, const Json& j) {
  std::size_t m = detail::size_field(j, "module_dim");
  const Json& ls = detail::field(j, "L");
  const Json& rs = detail::field(j, "R");
  if (!ls.is_array() || !rs.is_array() || ls.size() != base.dim || rs.size() != base.dim)
    throw ParseError("bimodule needs one L and one R matrix per basis index");
  std::vector<Matrix> L, R;
  for (const Json& e : ls) L.push_back(matrix_from_json(e));
  for (const Json& e : rs) R.push_back(matrix_from_json(e));
  for (const auto& mat : L)
    if (mat.rows() != m || mat.cols() != m) throw ParseError("L matrix shape mismatch");
  for (const auto& mat : R)
    if (mat.rows() != m || mat.cols() != m) throw ParseError("R matrix shape mismatch");
  return Bimodule(base, m, std::move(L), std::move(R));
}

inline Json linear_map_to_json(const LinearMap& f) {
  Json out;
  out["domain"] = f.domain;
  out["codomain"] = f.codomain;
  out["matrix"] = matrix_to_json(f.matrix);
  return out;
}

inline LinearMap linear_map_from_json(const Json& j) {
  const Json& dom = detail::field(j, "domain");
  const Json& cod = detail::field(j, "codomain");
  if (!dom.is_string() || !cod.is_string())
    throw ParseError("linear map domain/codomain must be strings");
  return LinearMap(matrix_from_json(detail::field(j, "matrix")), dom.get<std::string>(),
                   cod.get<std::string>());
}

/// Upper-triangle entry list for a symmetric matrix of known dimension.
inline Json sym2_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (m(i, j) != 0)
        entries.push_back(
            Json{{"i", i + 1}, {"j", j + 1}, {"c", scalar_to_json(m(i, j))}});
  return Json{{"entries", std::move(entries)}};
}

inline Matrix sym2_from_json(const Json& j, std::size_t dim) {
  Matrix m(dim, dim);
  for (const Json& entry : detail::field(j, "entries")) {
    std::size_t i = detail::index_field(entry, "i", dim);
    std::size_t jj = detail::index_field(entry, "j", dim);
    Scalar c = scalar_from_json(detail::field(entry, "c"));
    m(i, jj) = c;
    m(jj, i) = c;
  }
  return m;
}

inline Json cochain_to_json(const Cochain& f) {
  Json out;
  out["degree"] = f.degree();
  Json entries = Json::array();
  f.for_each_slot([&](const IndexTuple& wedge, std::size_t last) {
    const Vector& v = f.at(wedge, last);
    if (prelie::is_zero(v)) return;
    Json args = Json::array();
    for (auto w : wedge) args.push_back(w + 1);
    args.push_back(last + 1);
    Json value = Json::array();
    for (const auto& c : v) value.push_back(scalar_to_json(c));
    entries.push_back(Json{{"args", std::move(args)}, {"value", std::move(value)}});
  });
  out["entries"] = std::move(entries);
  return out;
}

inline Cochain cochain_from_json(const Json& j, std::size_t dom, std::size_t cod) {
  std::size_t degree = detail::size_field(j, "degree");
  Cochain f(degree, dom, cod);
  for (const Json& entry : detail::field(j, "entries")) {
    const Json& args = detail::field(entry, "args");
    if (!args.is_array() || args.size() != degree)
      throw ParseError("cochain entry needs exactly degree arguments");
    IndexTuple wedge;
    for (std::size_t k = 0; k + 1 < degree; ++k) {
      const Json& a = args.at(k);
      if (!detail::is_positive_integer(a) || a.get<std::size_t>() > dom)
        throw ParseError("cochain argument index out of range");
      wedge.push_back(a.get<std::size_t>() - 1);
    }
    for (std::size_t k = 0; k + 1 < wedge.size(); ++k)
      if (wedge[k] >= wedge[k + 1])
        throw ParseError("cochain wedge arguments must be strictly increasing");
    const Json& lastj = args.at(degree - 1);
    if (!detail::is_positive_integer(lastj) || lastj.get<std::size_t>() > dom)
      throw ParseError("cochain argument index out of range");
    std::size_t last = lastj.get<std::size_t>() - 1;
    const Json& value = detail::field(entry, "value");
    if (!value.is_array() || value.size() != cod)
      throw ParseError("cochain value has the wrong dimension");
    Vector v(cod);
    for (std::size_t c = 0; c < cod; ++c) v[c] = scalar_from_json(value.at(c));
    f.at(wedge, last) = v;
  }
  return f;
}

inline Json twilled_to_json(const TwilledAlgebra& tw) {
  Json out;
  out["algebra"] = algebra_to_json(tw.big);
  out["split"] = tw.n1;
  return out;
}

inline TwilledAlgebra twilled_from_json(const Json& j) {
  Algebra big = algebra_from_json(detail::field(j, "algebra"));
  std::size_t split = detail::size_field(j, "split");
  return make_twilled(big, split);
}

inline Json search_config_to_json(const SearchConfig& cfg) {
  Json out;
  Json grid = Json::array(), coeff = Json::array();
  for (const auto& s : cfg.grid) grid.push_back(scalar_to_json(s));
  for (const auto& s : cfg.coeff_grid) coeff.push_back(scalar_to_json(s));
  out["grid"] = std::move(grid);
  out["coeff_grid"] = std::move(coeff);
  out["samples"] = cfg.samples;
  out["seed"] = cfg.seed;
  return out;
}

inline SearchConfig search_config_from_json(const Json& j) {
  SearchConfig cfg;
  if (j.contains("grid")) {
    cfg.grid.clear();
    for (const Json& e : j.at("grid")) cfg.grid.push_back(scalar_from_json(e));
  }
  if (j.contains("coeff_grid")) {
    cfg.coeff_grid.clear();
    for (const Json& e : j.at("coeff_grid")) cfg.coeff_grid.push_back(scalar_from_json(e));
  }
  if (j.contains("samples")) cfg.samples = detail::size_field(j, "samples");
  if (j.contains("seed")) {
    const Json& s = j.at("seed");
    if (!s.is_number_integer() || s.get<std::int64_t>() < 0)
      throw ParseError("seed must be a non-negative integer");
    cfg.seed = s.get<std::uint64_t>();
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return cfg;
}

}  // namespace prelie

#endif  // PRELIE_SERIALIZE_HPP

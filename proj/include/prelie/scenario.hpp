#ifndef PRELIE_SCENARIO_HPP
#define PRELIE_SCENARIO_HPP

#include "prelie/serialize.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace prelie {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A validated scenario file: named objects, optional parameters, and an
/// ordered list of checks with expected verdicts.
struct Scenario {
  Json raw;
  ParameterFamily parameters;  // empty names when the scenario is concrete
  Assignment fixed_values;     // optional "values" instantiation
  SearchConfig config;
};

namespace detail {

/// Entry values are rational literals or (possibly negated) parameter names.
inline Scalar eval_entry(const Json& j, const Assignment& params) {
  if (!j.is_string()) throw ParseError("entries serialize as strings");
  std::string text = j.get<std::string>();
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start < text.size() && text[start] >= '0' && text[start] <= '9')
    return parse_rational(text);
  bool neg = start == 1 && text[0] == '-';
  std::string name = text.substr(start);
  auto it = params.find(name);
  if (it == params.end())
    throw ValidationError("unresolved entry \"" + text + "\"");
  return neg ? -it->second : it->second;
}

inline Matrix eval_matrix(const Json& j, const Assignment& params) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty row array");
  std::size_t rows = j.size(), cols = j.at(0).is_array() ? j.at(0).size() : 0;
  if (cols == 0) throw ParseError("matrix rows must be non-empty arrays");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j.at(i);
    if (!row.is_array() || row.size() != cols) throw ParseError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = eval_entry(row.at(c), params);
  }
  return m;
}

inline Matrix eval_sym2(const Json& j, std::size_t dim, const Assignment& params) {
  Matrix m(dim, dim);
  for (const Json& entry : field(j, "entries")) {
    std::size_t i = index_field(entry, "i", dim);
    std::size_t jj = index_field(entry, "j", dim);
    Scalar c = eval_entry(field(entry, "c"), params);
    m(i, jj) = c;
    m(jj, i) = c;
  }
  return m;
}

inline const Json& named(const Json& raw, const char* section, const std::string& name) {
  if (!raw.contains(section) || !raw.at(section).contains(name))
    throw ValidationError(std::string("undeclared ") + section + " \"" + name + "\"");
  return raw.at(section).at(name);
}

inline std::string ref(const Json& check, const char* key) {
  const Json& v = field(check, key);
  if (!v.is_string()) throw ParseError(std::string("field \"") + key + "\" must be a name");
  return v.get<std::string>();
}

}  // namespace detail

/// Resolves a named algebra (algebras carry no parameters).
inline Algebra scenario_algebra(const Scenario& sc, const std::string& name) {
  return algebra_from_json(detail::named(sc.raw, "algebras", name));
}

inline Bimodule scenario_bimodule(const Scenario& sc, const std::string& name,
                                  const Assignment& params) {
  const Json& j = detail::named(sc.raw, "bimodules", name);
  Algebra base = scenario_algebra(sc, detail::ref(j, "base"));
  if (j.contains("regular") && j.at("regular").get<bool>())
    return regular_bimodule(base);
  if (j.contains("coadjoint") && j.at("coadjoint").get<bool>())
    return dual_bimodule(regular_bimodule(base));
  std::size_t m = detail::size_field(j, "module_dim");
  const Json& ls = detail::field(j, "L");
  const Json& rs = detail::field(j, "R");
  if (!ls.is_array() || !rs.is_array() || ls.size() != base.dim || rs.size() != base.dim)
    throw ParseError("bimodule needs one L and one R matrix per basis index");
  std::vector<Matrix> L, R;
  for (const Json& e : ls) L.push_back(detail::eval_matrix(e, params));
  for (const Json& e : rs) R.push_back(detail::eval_matrix(e, params));
  for (const auto& mat : L)
    if (mat.rows() != m || mat.cols() != m) throw ParseError("L matrix shape mismatch");
  for (const auto& mat : R)
    if (mat.rows() != m || mat.cols() != m) throw ParseError("R matrix shape mismatch");
  return Bimodule(std::move(base), m, std::move(L), std::move(R));
}

inline Matrix scenario_map(const Scenario& sc, const std::string& name,
                           const Assignment& params) {
  return detail::eval_matrix(
      detail::field(detail::named(sc.raw, "maps", name), "matrix"), params);
}

inline SymTensor2 scenario_tensor(const Scenario& sc, const std::string& name,
                                  const Assignment& params) {
  const Json& j = detail::named(sc.raw, "tensors", name);
  Algebra alg = scenario_algebra(sc, detail::ref(j, "algebra"));
  return SymTensor2(detail::eval_sym2(j, alg.dim, params));
}

inline SymForm2 scenario_form(const Scenario& sc, const std::string& name,
                              const Assignment& params) {
  const Json& j = detail::named(sc.raw, "forms", name);
  Algebra alg = scenario_algebra(sc, detail::ref(j, "algebra"));
  return SymForm2(detail::eval_sym2(j, alg.dim, params));
}

inline TwilledAlgebra scenario_twilled(const Scenario& sc, const std::string& name,
                                       const Assignment& params) {
  const Json& j = detail::named(sc.raw, "twilled", name);
  if (j.contains("bimodule")) {
    Bimodule b = scenario_bimodule(sc, detail::ref(j, "bimodule"), params);
    return twilled_from_o_operator(b, scenario_map(sc, detail::ref(j, "o_operator"), params));
  }
  return twilled_from_json(j);
}

inline Cochain scenario_cochain(const Scenario& sc, const std::string& name,
                                const Assignment& params) {
  const Json& j = detail::named(sc.raw, "cochains", name);
  Algebra alg = scenario_algebra(sc, detail::ref(j, "algebra"));
  std::size_t degree = detail::size_field(j, "degree");
  Cochain f(degree, alg.dim, alg.dim);
  for (const Json& entry : detail::field(j, "entries")) {
    const Json& args = detail::field(entry, "args");
    if (!args.is_array() || args.size() != degree)
      throw ParseError("cochain entry needs exactly degree arguments");
    IndexTuple wedge;
    for (std::size_t k = 0; k + 1 < degree; ++k)
      wedge.push_back(detail::index_field(Json{{"a", args.at(k)}}, "a", alg.dim));
    std::size_t last = detail::index_field(Json{{"a", args.at(degree - 1)}}, "a", alg.dim);
    const Json& value = detail::field(entry, "value");
    if (!value.is_array() || value.size() != alg.dim)
      throw ParseError("cochain value has the wrong dimension");
    Vector v(alg.dim);
    for (std::size_t c = 0; c < alg.dim; ++c) v[c] = detail::eval_entry(value.at(c), params);
    f.at(wedge, last) = v;
  }
  return f;
}

/// Parses a scenario from its JSON form, resolving the declared parameter
/// family and search configuration.
inline Scenario parse_scenario(Json j) {
  Scenario sc;
  sc.raw = std::move(j);
  if (!sc.raw.is_object()) throw ParseError("scenario must be a JSON object");
  if (sc.raw.contains("parameters")) {
    const Json& p = sc.raw.at("parameters");
    if (p.contains("names"))
      for (const Json& n : p.at("names")) sc.parameters.names.push_back(n.get<std::string>());
    if (p.contains("nonzero"))
      for (const Json& group : p.at("nonzero")) {
        std::vector<std::string> names;
        for (const Json& n : group) names.push_back(n.get<std::string>());
        sc.parameters.nonzero_products.push_back(std::move(names));
      }
    if (p.contains("values"))
      for (auto it = p.at("values").begin(); it != p.at("values").end(); ++it)
        sc.fixed_values[it.key()] = scalar_from_json(it.value());
  }
  if (sc.raw.contains("search")) sc.config = search_config_from_json(sc.raw.at("search"));
  if (!sc.raw.contains("checks") || !sc.raw.at("checks").is_array())
    throw ParseError("scenario needs a \"checks\" array");
  return sc;
}

/// Loads and parses a scenario file; malformed JSON reports line/column.
inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " +
                     std::to_string(col));
  }
  return parse_scenario(std::move(j));
}

struct CheckResult {
  std::string op;
  std::string expected;  // "true", "false", or "report"
  std::string verdict;
  bool matched = false;
  std::string detail;
};

struct ScenarioReport {
  std::vector<CheckResult> results;
  bool all_matched = true;

  Json to_json() const {
    Json out;
    out["all_matched"] = all_matched;
    Json rows = Json::array();
    for (const auto& r : results)
      rows.push_back(Json{{"op", r.op},
                          {"expected", r.expected},
                          {"verdict", r.verdict},
                          {"matched", r.matched},
                          {"detail", r.detail}});
    out["checks"] = std::move(rows);
    return out;
  }

  std::string to_text() const {
    std::string out;
    for (const auto& r : results) {
      out += (r.matched ? "PASS " : "FAIL ") + r.op + ": expected " + r.expected +
             ", got " + r.verdict;
      if (!r.detail.empty()) out += " (" + r.detail + ")";
      out += "\n";
    }
    out += all_matched ? "all checks matched\n" : "check mismatch\n";
    return out;
  }
};

namespace detail {

/// Runs one check at one instantiation. Domain-error throws from check
/// preconditions count as a failing verdict with the error as detail.
inline std::pair<bool, std::string> evaluate_check(const Scenario& sc, const Json& check,
                                                   const Assignment& params) {
  std::string op = ref(check, "op");
  auto outcome = [](const CheckReport& rep) {
    return std::pair<bool, std::string>{bool(rep), rep.detail};
  };
  try {
    if (op == "check_pre_lie")
      return outcome(check_pre_lie(scenario_algebra(sc, ref(check, "algebra")).products));
    if (op == "check_bimodule")
      return outcome(check_bimodule(scenario_bimodule(sc, ref(check, "bimodule"), params)));
    if (op == "check_nijenhuis")
      return outcome(check_nijenhuis(scenario_algebra(sc, ref(check, "algebra")),
                                     scenario_map(sc, ref(check, "map"), params)));
    if (op == "check_o_operator")
      return outcome(check_o_operator(scenario_bimodule(sc, ref(check, "bimodule"), params),
                                      scenario_map(sc, ref(check, "map"), params)));
    if (op == "check_rota_baxter")
      return outcome(check_o_operator(
          regular_bimodule(scenario_algebra(sc, ref(check, "algebra"))),
          scenario_map(sc, ref(check, "map"), params)));
    if (op == "check_nijenhuis_structure")
      return outcome(check_nijenhuis_structure(
          scenario_bimodule(sc, ref(check, "bimodule"), params),
          scenario_map(sc, ref(check, "n"), params),
          scenario_map(sc, ref(check, "s"), params)));
    if (op == "check_deformation_pair")
      return outcome(check_deformation_pair(
          scenario_bimodule(sc, ref(check, "bimodule"), params),
          scenario_map(sc, ref(check, "n"), params),
          scenario_map(sc, ref(check, "s"), params)));
    if (op == "check_on_structure")
      return outcome(check_on_structure(
          OnStructure(scenario_bimodule(sc, ref(check, "bimodule"), params),
                      scenario_map(sc, ref(check, "t"), params),
                      scenario_map(sc, ref(check, "n"), params),
                      scenario_map(sc, ref(check, "s"), params))));
    if (op == "check_compatible")
      return outcome(check_compatible(scenario_bimodule(sc, ref(check, "bimodule"), params),
                                      scenario_map(sc, ref(check, "t1"), params),
                                      scenario_map(sc, ref(check, "t2"), params)));
    if (op == "check_s_matrix")
      return outcome(check_s_matrix(scenario_algebra(sc, ref(check, "algebra")),
                                    scenario_tensor(sc, ref(check, "tensor"), params)));
    if (op == "check_pseudo_hessian")
      return outcome(check_pseudo_hessian(scenario_algebra(sc, ref(check, "algebra")),
                                          scenario_form(sc, ref(check, "form"), params)));
    if (op == "check_kvn")
      return outcome(check_kvn(scenario_algebra(sc, ref(check, "algebra")),
                               scenario_tensor(sc, ref(check, "tensor"), params),
                               scenario_map(sc, ref(check, "map"), params)));
    if (op == "check_hn")
      return outcome(check_hn(scenario_algebra(sc, ref(check, "algebra")),
                              scenario_form(sc, ref(check, "form"), params),
                              scenario_map(sc, ref(check, "map"), params)));
    if (op == "check_kvb")
      return outcome(check_kvb(scenario_algebra(sc, ref(check, "algebra")),
                               scenario_tensor(sc, ref(check, "tensor"), params),
                               scenario_form(sc, ref(check, "form"), params)));
    if (op == "check_mc")
      return outcome(check_mc(scenario_twilled(sc, ref(check, "twilled"), params),
                              scenario_map(sc, ref(check, "map"), params)));
    if (op == "check_strong_mc") {
      auto rep = check_strong_mc(scenario_twilled(sc, ref(check, "twilled"), params),
                                 scenario_map(sc, ref(check, "map"), params));
      return {rep.ok(), rep.detail};
    }
    if (op == "check_rb_strong_mc")
      return outcome(check_rb_strong_mc(scenario_algebra(sc, ref(check, "algebra")),
                                        scenario_map(sc, ref(check, "rota_baxter"), params),
                                        scenario_map(sc, ref(check, "omega"), params)));
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError&) {
    throw;
  } catch (const SearchSpaceTooLarge&) {
    throw;
  } catch (const std::runtime_error& e) {
    // Precondition throws (wrong shapes aside, e.g. a non-Nijenhuis map fed
    // to a structure check) count as a failing verdict.
    return {false, e.what()};
  }
  throw ValidationError("unknown check op \"" + op + "\"");
}

}  // namespace detail

/// Executes the scenario's checks in order, comparing verdicts against the
/// expected values ("true" by default).
inline ScenarioReport run_scenario(const Scenario& sc) {
  ScenarioReport report;
  for (const Json& check : sc.raw.at("checks")) {
    CheckResult row;
    row.op = detail::ref(check, "op");
    row.expected = check.contains("expect") ? check.at("expect").get<std::string>() : "true";
    bool family = check.contains("family") && check.at("family").get<bool>();
    if (family) {
      auto fam = verify_family(
          sc.parameters,
          [&](const Assignment& values) {
            return detail::evaluate_check(sc, check, values).first;
          },
          sc.config);
      row.verdict = fam.verified ? "true" : "false";
      row.detail = fam.label;
    } else {
      auto [ok, detail] = detail::evaluate_check(sc, check, sc.fixed_values);
      row.verdict = ok ? "true" : "false";
      row.detail = detail;
    }
    row.matched = row.expected == "report" || row.verdict == row.expected;
    report.all_matched = report.all_matched && row.matched;
    report.results.push_back(std::move(row));
  }
  return report;
}

inline void require_all_matched(const ScenarioReport& report) {
  if (!report.all_matched) throw CheckMismatch("scenario check mismatch");
}

}  // namespace prelie

#endif  // PRELIE_SCENARIO_HPP

#include "CLI11.hpp"
#include "prelie/corpus.hpp"

#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitSearchGuard = 3;

void write_json(const std::string& path, const prelie::Json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw prelie::ParseError("cannot write report file " + path);
  out << j.dump(2) << "\n";
}

int cmd_check(const std::string& file, const std::string& json_path) {
  prelie::Scenario sc = prelie::load_scenario(file);
  prelie::ScenarioReport report = prelie::run_scenario(sc);
  std::cout << report.to_text();
  write_json(json_path, report.to_json());
  return report.all_matched ? kExitOk : kExitMismatch;
}

int cmd_corpus(const std::string& filter, std::size_t samples,
               const std::string& json_path) {
  prelie::SearchConfig cfg;
  if (samples != 0) cfg.samples = samples;
  cfg.validate();
  prelie::CorpusReport report = prelie::run_corpus(filter, cfg);
  std::cout << report.to_text();
  write_json(json_path, report.to_json());
  return report.all_matched ? kExitOk : kExitMismatch;
}

int cmd_cohomology(const std::string& file, std::size_t nmax,
                   const std::string& json_path) {
  if (nmax < 1 || nmax > 4)
    throw prelie::ValidationError("--nmax must be between 1 and 4");
  prelie::Scenario sc = prelie::load_scenario(file);
  if (!sc.raw.contains("bimodules") || sc.raw.at("bimodules").empty())
    throw prelie::ValidationError("cohomology needs at least one declared bimodule");
  prelie::Json out;
  out["tables"] = prelie::Json::array();
  for (auto it = sc.raw.at("bimodules").begin(); it != sc.raw.at("bimodules").end();
       ++it) {
    prelie::Bimodule b = prelie::scenario_bimodule(sc, it.key(), sc.fixed_values);
    std::cout << "bimodule " << it.key() << ":\n";
    std::cout << "  n  dim  rank_out  rank_in  betti\n";
    prelie::Json rows = prelie::Json::array();
    for (const auto& row : prelie::cohomology_dims(b, nmax)) {
      std::cout << "  " << row.n << "  " << row.space_dim << "  " << row.rank_out
                << "  " << row.rank_in << "  " << row.betti << "\n";
      rows.push_back(prelie::Json{{"n", row.n},
                                  {"dim", row.space_dim},
                                  {"rank_out", row.rank_out},
                                  {"rank_in", row.rank_in},
                                  {"betti", row.betti}});
    }
    out["tables"].push_back(prelie::Json{{"bimodule", it.key()}, {"rows", rows}});
  }
  write_json(json_path, out);
  return kExitOk;
}

int cmd_search(const std::string& file, const std::string& json_path) {
  prelie::Scenario sc = prelie::load_scenario(file);
  if (!sc.raw.contains("twilled") || sc.raw.at("twilled").empty())
    throw prelie::ValidationError("search needs at least one declared twilled algebra");
  prelie::Json out;
  out["searches"] = prelie::Json::array();
  for (auto it = sc.raw.at("twilled").begin(); it != sc.raw.at("twilled").end(); ++it) {
    prelie::TwilledAlgebra tw = prelie::scenario_twilled(sc, it.key(), sc.fixed_values);
    std::vector<prelie::Matrix> solutions = prelie::search_strong_mc(tw, sc.config);
    std::cout << "twilled " << it.key() << ": " << solutions.size()
              << " strong Maurer-Cartan solution(s) on the coefficient grid\n";
    prelie::Json sols = prelie::Json::array();
    for (const auto& m : solutions) {
      std::cout << "  " << prelie::corpus::detail_c::render(m) << "\n";
      sols.push_back(prelie::matrix_to_json(m));
    }
    out["searches"].push_back(
        prelie::Json{{"twilled", it.key()}, {"solutions", sols}});
  }
  write_json(json_path, out);
  return kExitOk;
}

int cmd_bracket(const std::string& file, const std::string& json_path) {
  prelie::Scenario sc = prelie::load_scenario(file);
  if (!sc.raw.contains("cochains") || sc.raw.at("cochains").empty())
    throw prelie::ValidationError("bracket needs at least one declared cochain");
  prelie::Json out;
  out["coboundaries"] = prelie::Json::array();
  out["brackets"] = prelie::Json::array();
  std::vector<std::pair<std::string, prelie::Cochain>> cochains;
  for (auto it = sc.raw.at("cochains").begin(); it != sc.raw.at("cochains").end(); ++it)
    cochains.emplace_back(it.key(),
                          prelie::scenario_cochain(sc, it.key(), sc.fixed_values));
  if (sc.raw.contains("bimodules"))
    for (auto it = sc.raw.at("bimodules").begin(); it != sc.raw.at("bimodules").end();
         ++it) {
      prelie::Bimodule b = prelie::scenario_bimodule(sc, it.key(), sc.fixed_values);
      for (const auto& [name, f] : cochains) {
        if (f.cod() != b.module_dim || f.dom() != b.base.dim) continue;
        prelie::Cochain df = prelie::delta(b, f);
        std::cout << "delta(" << it.key() << ", " << name << "): degree "
                  << df.degree() << "\n";
        out["coboundaries"].push_back(prelie::Json{{"bimodule", it.key()},
                                                   {"cochain", name},
                                                   {"result", cochain_to_json(df)}});
      }
    }
  for (const auto& [pname, p] : cochains)
    for (const auto& [qname, q] : cochains) {
      if (p.dom() != q.dom() || p.cod() != p.dom() ||
          q.cod() != q.dom())
        continue;
      prelie::Cochain br = prelie::mn_bracket(p, q);
      std::cout << "bracket(" << pname << ", " << qname << "): degree " << br.degree()
                << "\n";
      out["brackets"].push_back(prelie::Json{
          {"left", pname}, {"right", qname}, {"result", cochain_to_json(br)}});
    }
  write_json(json_path, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks for pre-Lie algebra structures"};
  app.require_subcommand(1);

  std::string json_path;
  app.add_option("--json", json_path, "write the machine-readable report here");

  std::string check_file;
  auto* check = app.add_subcommand("check", "run a scenario file's checks");
  check->add_option("file", check_file, "scenario file")->required();

  std::string filter;
  std::size_t samples = 0;
  auto* corpus = app.add_subcommand("corpus", "replay the built-in example corpus");
  corpus->add_option("--filter", filter, "run only the entry with this id");
  corpus->add_option("--samples", samples, "override the per-family sample count");

  std::string coh_file;
  std::size_t nmax = 0;
  auto* coh = app.add_subcommand("cohomology", "print cohomology dimension tables");
  coh->add_option("file", coh_file, "scenario file")->required();
  coh->add_option("--nmax", nmax, "largest degree to compute (at most 4)")->required();

  std::string search_file;
  auto* search = app.add_subcommand(
      "search", "solve for strong Maurer-Cartan solutions on the coefficient grid");
  search->add_option("file", search_file, "scenario file")->required();

  std::string bracket_file;
  auto* bracket = app.add_subcommand(
      "bracket", "compute coboundaries and graded brackets of declared cochains");
  bracket->add_option("file", bracket_file, "scenario file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(check_file, json_path);
    if (corpus->parsed()) return cmd_corpus(filter, samples, json_path);
    if (coh->parsed()) return cmd_cohomology(coh_file, nmax, json_path);
    if (search->parsed()) return cmd_search(search_file, json_path);
    if (bracket->parsed()) return cmd_bracket(bracket_file, json_path);
  } catch (const prelie::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const prelie::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitParse;
  } catch (const prelie::SearchSpaceTooLarge& e) {
    std::cerr << "search guard: " << e.what() << "\n";
    return kExitSearchGuard;
  } catch (const prelie::CheckMismatch& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}

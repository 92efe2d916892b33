// howe-osc: command-line front end for the exact verification checks.
//
// Subcommands:
//   verify    [suite...]   run named check suites (all when none given)
//   decompose              print the decomposition table, computed two ways
//   duality                run the tower (multiplicity space) checks
//   hw                     run the highest-weight census
//
// Configuration precedence: flags > HOWE_SEED environment > --config file
// > built-in defaults.  Reports with the same resolved configuration are
// byte-identical; timing never enters the JSON output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "howe/checks.hpp"

namespace {

struct CliValues {
  std::optional<int> l;
  std::optional<int> degree;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;
  std::optional<std::string> out;
  std::optional<std::string> config;
  std::optional<std::string> corrupt;
  std::vector<std::string> suites;
};

void add_common_options(CLI::App* cmd, CliValues& vals) {
  cmd->add_option("--l", vals.l, "Rank l of the symplectic space (dimension 2l)")
      ->check(CLI::Range(1, 8));
  cmd->add_option("--degree", vals.degree, "Polynomial degree bound for probes and censuses")
      ->check(CLI::Range(0, 32));
  cmd->add_option("--trials", vals.trials, "Seeded probes per check (0 = vacuous)")
      ->check(CLI::Range(0, 10000));
  cmd->add_option("--seed", vals.seed, "Base seed for the probe streams");
  cmd->add_option("--format", vals.format, "Report format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--out", vals.out, "Write the report to this file instead of stdout");
  cmd->add_option("--config", vals.config, "JSON file with default option values");
  cmd->add_option("--corrupt", vals.corrupt,
                  "Deliberately corrupt an operator (f-minus, f-plus, h, a-coeff)")
      ->check(CLI::IsMember({"f-minus", "f-plus", "h", "a-coeff"}))
      ->group("");
}

struct Resolved {
  howe::RunConfig cfg;
  std::string format = "table";
  std::string out;
};

/** Applies config file, environment and flags in increasing precedence. */
Resolved resolve(const CliValues& vals) {
  Resolved r;
  if (vals.config) {
    std::ifstream in(*vals.config);
    if (!in) throw CLI::ValidationError("--config", "cannot open '" + *vals.config + "'");
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw CLI::ValidationError("--config", e.what());
    }
    if (!doc.is_object()) throw CLI::ValidationError("--config", "expected a JSON object");
    if (doc.contains("l")) r.cfg.l = doc.at("l").get<int>();
    if (doc.contains("degree")) r.cfg.max_degree = doc.at("degree").get<int>();
    if (doc.contains("trials")) r.cfg.trials = doc.at("trials").get<int>();
    if (doc.contains("seed")) r.cfg.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("format")) r.format = doc.at("format").get<std::string>();
  }
  if (const char* env = std::getenv("HOWE_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
      throw CLI::ValidationError("HOWE_SEED", "not an unsigned integer: '" + std::string(env) + "'");
    r.cfg.seed = v;
  }
  if (vals.l) r.cfg.l = *vals.l;
  if (vals.degree) r.cfg.max_degree = *vals.degree;
  if (vals.trials) r.cfg.trials = *vals.trials;
  if (vals.seed) r.cfg.seed = *vals.seed;
  if (vals.format) r.format = *vals.format;
  if (vals.out) r.out = *vals.out;
  if (vals.corrupt) r.cfg.corrupt = *vals.corrupt;
  if (r.format != "table" && r.format != "json")
    throw CLI::ValidationError("--format", "expected table or json");
  return r;
}

using SuiteFn = howe::CheckReport (*)(const howe::WContext&, const howe::RunConfig&);

howe::CheckReport run_structure(const howe::WContext&, const howe::RunConfig& cfg) {
  return howe::check_structure(cfg);
}
howe::CheckReport run_irreducibility(const howe::WContext&, const howe::RunConfig& cfg) {
  return howe::check_irreducibility(cfg);
}

const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"structure", run_structure},
      {"grading", howe::check_grading},
      {"equivariance", howe::check_equivariance},
      {"relations", howe::check_relations},
      {"ladder", howe::check_ladder},
      {"commutation", howe::check_commutation},
      {"projectors", howe::check_projectors},
      {"irreducibility", run_irreducibility},
      {"casimir", howe::check_casimir},
  };
  return suites;
}

// Historical names accepted on the command line for compatibility with
// existing invocations; each maps onto one role-named suite.
const std::map<std::string, std::string>& suite_aliases() {
  static const std::map<std::string, std::string> aliases = {
      {"lemma4", "grading"},        {"lemma5", "equivariance"},
      {"theorem9", "relations"},    {"corollary10", "ladder"},
      {"lemma6", "ladder"},         {"lemma7", "projectors"},
      {"lemma11", "irreducibility"}, {"lemma12", "commutation"},
  };
  return aliases;
}

int emit(const howe::RunReport& report, const Resolved& r) {
  std::string body = r.format == "json" ? report.to_json().dump(2) + "\n" : report.to_table();
  if (!r.out.empty()) {
    std::ofstream out(r.out, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "error: cannot write '" << r.out << "'\n";
      return 2;
    }
    out << body;
  } else {
    std::cout << body;
  }
  if (report.any_vacuous())
    std::cerr << "warning: vacuous checks present (trials = 0)\n";
  return report.overall_ok() ? 0 : 1;
}

int run_verify(const CliValues& vals) {
  Resolved r = resolve(vals);
  std::vector<std::string> selected;
  for (const std::string& raw : vals.suites) {
    auto alias = suite_aliases().find(raw);
    std::string name = alias != suite_aliases().end() ? alias->second : raw;
    bool known = false;
    for (const auto& [suite, fn] : suite_registry()) known = known || suite == name;
    if (!known) {
      std::cerr << "error: unknown suite '" << raw << "'\n";
      return 2;
    }
    selected.push_back(name);
  }
  howe::WContext ctx(r.cfg.l, howe::parse_corruption(r.cfg.corrupt));
  howe::RunReport report;
  report.command = "verify";
  report.config = r.cfg;
  for (const auto& [suite, fn] : suite_registry()) {
    bool wanted = selected.empty();
    for (const std::string& s : selected) wanted = wanted || s == suite;
    if (wanted) report.checks.push_back(fn(ctx, r.cfg));
  }
  return emit(report, r);
}

int run_decompose(const CliValues& vals) {
  Resolved r = resolve(vals);
  howe::RunReport report;
  report.command = "decompose";
  report.config = r.cfg;
  report.checks.push_back(howe::check_decomposition(r.cfg));
  return emit(report, r);
}

int run_duality(const CliValues& vals) {
  Resolved r = resolve(vals);
  howe::WContext ctx(r.cfg.l, howe::parse_corruption(r.cfg.corrupt));
  howe::RunReport report;
  report.command = "duality";
  report.config = r.cfg;
  report.checks.push_back(howe::check_duality_equivariance(ctx, r.cfg));
  report.checks.push_back(howe::check_duality_injectivity(ctx, r.cfg));
  report.checks.push_back(howe::check_commutant(ctx, r.cfg));
  return emit(report, r);
}

int run_hw(const CliValues& vals) {
  Resolved r = resolve(vals);
  howe::WContext ctx(r.cfg.l, howe::parse_corruption(r.cfg.corrupt));
  howe::RunReport report;
  report.command = "hw";
  report.config = r.cfg;
  report.checks.push_back(howe::check_highest_weight_census(ctx, r.cfg));
  return emit(report, r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the symplectic spinor-form module"};
  app.require_subcommand(1);

  CliValues vals;
  CLI::App* verify = app.add_subcommand("verify", "Run check suites");
  verify->add_option("suites", vals.suites, "Suites to run (default: all)");
  add_common_options(verify, vals);
  CLI::App* decompose = app.add_subcommand("decompose", "Decomposition table, two ways");
  add_common_options(decompose, vals);
  CLI::App* duality = app.add_subcommand("duality", "Tower equivariance and injectivity");
  add_common_options(duality, vals);
  CLI::App* hw = app.add_subcommand("hw", "Highest-weight census");
  add_common_options(hw, vals);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(vals);
    if (decompose->parsed()) return run_decompose(vals);
    if (duality->parsed()) return run_duality(vals);
    if (hw->parsed()) return run_hw(vals);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

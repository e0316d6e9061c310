#include "plethys/cli.hpp"

#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "plethys/census.hpp"
#include "plethys/errors.hpp"
#include "plethys/io.hpp"
#include "plethys/series.hpp"
#include "plethys/verify.hpp"
#include "plethys/wreath.hpp"

namespace plethys {

namespace {

struct RunConfig {
  int max_degree = 6;
  std::string spec_path;
  std::string format = "json";
  Budget budget;
};

void add_common_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--max-degree", cfg.max_degree, "Truncation degree N")->check(CLI::PositiveNumber);
  cmd.add_option("--spec", cfg.spec_path, "Module spec JSON file");
  cmd.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  cmd.add_option("--budget-half-edges", cfg.budget.max_half_edges, "Max half-edges per enumerated graph")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--budget-classes", cfg.budget.max_classes, "Max isomorphism classes per census")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--budget-legs", cfg.budget.max_legs, "Max legs n for enumeration")->check(CLI::PositiveNumber);
}

ModuleSpec spec_or_standard(const RunConfig& cfg) {
  return cfg.spec_path.empty() ? ModuleSpec::standard() : load_module_spec(cfg.spec_path);
}

ModuleSpec required_spec(const RunConfig& cfg, const std::string& target) {
  if (cfg.spec_path.empty()) throw InvalidInput("expand " + target + " needs --spec");
  return load_module_spec(cfg.spec_path);
}

int cmd_expand(const std::string& what, const RunConfig& cfg, std::ostream& out) {
  const int n = cfg.max_degree;
  const bool json = cfg.format == "json";
  if (what == "dih") {
    const auto w = dih_series_closed(n);
    out << (json ? to_json(w).dump() : to_string(w)) << '\n';
    return kExitOk;
  }
  SymFunc result(n);
  if (what == "ass") {
    result = ass_series_closed(n);
  } else {
    const auto spec = required_spec(cfg, what);
    const auto a0 = a_series(spec, 0, n + 2);
    if (what == "cyclic-necklaces") {
      result = cyclic_necklace_series(a0, n);
    } else if (what == "necklaces") {
      result = necklace_series_direct(a0, n);
    } else if (what == "tree") {
      result = tree_fixed_point(a0, n);
    } else {
      result = b1_series(spec, n);
    }
  }
  out << (json ? to_json(result).dump() : to_string(result)) << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& suite, const RunConfig& cfg, std::ostream& out) {
  VerifyConfig vc{cfg.max_degree, spec_or_standard(cfg), cfg.budget};
  const auto results = run_suite(suite, vc);
  bool all_pass = true;
  Json report = Json::array();
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    if (cfg.format == "json") {
      Json j;
      j["suite"] = r.suite;
      j["status"] = r.pass ? "PASS" : "FAIL";
      j["max_degree"] = r.degree;
      j["mismatch_degree"] = r.mismatch_at ? Json(*r.mismatch_at) : Json(nullptr);
      if (r.mismatch_at) {
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
      }
      j["note"] = r.note;
      report.push_back(std::move(j));
    } else {
      out << r.suite << ": " << (r.pass ? "PASS" : "FAIL") << " (N=" << r.degree << ")";
      if (!r.note.empty()) out << "  " << r.note;
      out << '\n';
      if (r.mismatch_at) {
        out << "  first difference at degree " << *r.mismatch_at << '\n'
            << "    lhs: " << r.lhs << '\n'
            << "    rhs: " << r.rhs << '\n';
      }
    }
  }
  if (cfg.format == "json") {
    Json j;
    j["suites"] = std::move(report);
    j["pass"] = all_pass;
    out << j.dump() << '\n';
  }
  return all_pass ? kExitOk : kExitIdentityFailure;
}

int cmd_enumerate(const std::string& family_name, int n, const RunConfig& cfg, std::ostream& out) {
  const auto family = parse_family(family_name);
  if (!family) throw InvalidInput("unknown family \"" + family_name + "\"");
  const auto spec = spec_or_standard(cfg);
  const auto census = enumerate_decorated(spec, *family, n, cfg.budget);
  for (const auto& [code, graph] : census.classes()) out << to_json_line(graph) << '\n';
  Json summary;
  summary["family"] = std::string(to_string(*family));
  summary["n"] = n;
  summary["classes"] = census.size();
  out << summary.dump() << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact symmetric-function engine with brute-force graph oracles", "plethys"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string expand_what, suite, family;
  int legs = 0;

  auto* expand = app.add_subcommand("expand", "Print a truncated generating series");
  expand->add_option("what", expand_what, "ass | cyclic-necklaces | necklaces | dih | tree | b1")
      ->required()
      ->check(CLI::IsMember({"ass", "cyclic-necklaces", "necklaces", "dih", "tree", "b1"}));
  add_common_options(*expand, cfg);

  auto* verify = app.add_subcommand("verify", "Check closed forms against independent computations");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", suite, "Suite name or all")->required()->check(CLI::IsMember(suites));
  add_common_options(*verify, cfg);

  auto* enumerate = app.add_subcommand("enumerate", "Emit a decorated-graph census as JSON lines");
  enumerate->add_option("family", family, "genus1-stable | necklace | oriented-necklace | rooted-tree")
      ->required();
  enumerate->add_option("--n", legs, "Number of labeled legs")->required();
  add_common_options(*enumerate, cfg);

  std::vector<const char*> argv{"plethys"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "plethys: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (expand->parsed()) return cmd_expand(expand_what, cfg, out);
    if (verify->parsed()) return cmd_verify(suite, cfg, out);
    return cmd_enumerate(family, legs, cfg, out);
  } catch (const BudgetExceeded& e) {
    err << "plethys: budget exceeded: " << e.what() << '\n';
    return kExitBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    err << "plethys: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::domain_error& e) {
    err << "plethys: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace plethys

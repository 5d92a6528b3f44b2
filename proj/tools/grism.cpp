// Command-line front end: load a graph, evaluate element expressions, decide
// equivalence of orthogonal sets, reduce to canonical form, validate
// branching systems, and run the property suites.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "grism/arrow.hpp"
#include "grism/bratteli.hpp"
#include "grism/expr.hpp"
#include "grism/suites.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailure = 1;
constexpr int kUsageError = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void print_report_text(const grism::SuiteReport& rep) {
  for (const auto& c : rep.checks) {
    std::cout << (c.failures == 0 ? "pass" : "FAIL") << "  " << c.law << "  ("
              << c.checked << " checked, " << c.failures << " failures";
    if (!c.note.empty()) std::cout << "; " << c.note;
    std::cout << ")\n";
  }
  for (const auto& d : rep.diagnostics) std::cout << "note  " << d << "\n";
  std::cout << (rep.pass() ? "PASS" : "FAIL") << "  suite " << rep.suite
            << "\n";
}

void print_report_json(const grism::SuiteReport& rep,
                       const std::string& graph_file) {
  nlohmann::json j;
  j["schema"] = 1;
  j["suite"] = rep.suite;
  j["graph"] = graph_file;
  j["pass"] = rep.pass();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : rep.checks) {
    nlohmann::json cj;
    cj["law"] = c.law;
    cj["checked"] = c.checked;
    cj["failures"] = c.failures;
    if (!c.note.empty()) cj["note"] = c.note;
    j["checks"].push_back(cj);
  }
  j["diagnostics"] = rep.diagnostics;
  std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph inverse semigroup toolkit"};
  app.require_subcommand(1);

  std::string graph_file;
  std::string expr_a, expr_b;
  std::string suite_name;
  std::string bs_file;
  std::string format = "text";
  std::size_t depth = 2;
  std::size_t arrow_cap = grism::kDefaultArrowDepthCap;
  std::optional<std::string> root;

  auto* eval = app.add_subcommand("eval", "evaluate an element expression");
  eval->add_option("graph-file", graph_file)->required();
  eval->add_option("expr", expr_a)->required();

  auto* equiv_cmd =
      app.add_subcommand("equiv", "decide equivalence of two orthogonal sets");
  equiv_cmd->add_option("graph-file", graph_file)->required();
  equiv_cmd->add_option("exprA", expr_a)->required();
  equiv_cmd->add_option("exprB", expr_b)->required();
  equiv_cmd->add_option("--max-arrow-depth", arrow_cap);

  auto* canon =
      app.add_subcommand("canon", "reduce an orthogonal set to canonical form");
  canon->add_option("graph-file", graph_file)->required();
  canon->add_option("expr", expr_a)->required();

  auto* props = app.add_subcommand("props", "run a property suite");
  props->add_option("graph-file", graph_file)->required();
  props->add_option("suite", suite_name)->required();
  props->add_option("--depth", depth);
  props->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));
  props->add_option("--max-arrow-depth", arrow_cap);
  props->add_option("--root", root, "root vertex for the bratteli suite");
  props->add_option("--branching-file", bs_file,
                    "branching system for the branching suite");

  auto* branching =
      app.add_subcommand("branching", "validate a branching system file");
  branching->add_option("graph-file", graph_file)->required();
  branching->add_option("branching-file", bs_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    grism::DirectedGraph g = grism::parse_graph(slurp(graph_file));

    if (*eval) {
      grism::ExprValue v = grism::eval_expression(g, expr_a);
      std::cout << grism::to_string(v) << "\n";
      return kOk;
    }

    if (*equiv_cmd) {
      grism::OrthoSet a = grism::parse_ortho(g, expr_a);
      grism::OrthoSet b = grism::parse_ortho(g, expr_b);
      auto fwd = grism::arrow_sets(g, a, b, arrow_cap);
      auto bwd = grism::arrow_sets(g, b, a, arrow_cap);
      if (fwd.holds && bwd.holds) {
        std::cout << "yes\n";
      } else {
        const auto& bad = fwd.holds ? bwd : fwd;
        std::cout << "no (witness: extension " << bad.fail_path << " of "
                  << bad.fail_source << " meets nothing on the other side)\n";
      }
      return kOk;
    }

    if (*canon) {
      grism::OrthoSet a = grism::parse_ortho(g, expr_a);
      std::cout << grism::to_string(grism::reduce(g, a)) << "\n";
      return kOk;
    }

    if (*props) {
      grism::SuiteOptions opt;
      opt.depth = depth;
      opt.arrow_cap = arrow_cap;
      opt.root = root;
      if (!bs_file.empty()) opt.branching_text = slurp(bs_file);
      grism::SuiteReport rep = grism::run_suite(g, suite_name, opt);
      if (format == "json")
        print_report_json(rep, graph_file);
      else
        print_report_text(rep);
      return rep.pass() ? kOk : kCheckFailure;
    }

    if (*branching) {
      grism::BranchingSystem bs =
          grism::parse_branching_system(slurp(bs_file), g);
      grism::StrongReport rep = grism::validate_strong(g, bs);
      for (const auto& c : rep.checks) {
        std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name;
        if (!c.note.empty()) std::cout << "  (" << c.note << ")";
        std::cout << "\n";
      }
      std::cout << (rep.pass() ? "PASS" : "FAIL") << "  branching system\n";
      return rep.pass() ? kOk : kCheckFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

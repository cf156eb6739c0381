// Command-line front end: analyze, generate, sweep.
//
// Exit codes: 0 analysis completed, 2 no criterion applies, 3 input error,
// 4 budget exceeded.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gorenstein/gorenstein.hpp"

namespace {

using namespace gorenstein;
using io::json;

constexpr int kOk = 0;
constexpr int kInapplicable = 2;
constexpr int kInputError = 3;
constexpr int kBudgetExceeded = 4;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

graph::Graph load_graph(const std::string& path) {
  const json j = io::parse(read_input(path), path);
  const auto input = io::graph_input_from_json(j);
  if (const auto* p = std::get_if<graph::Poset>(&input)) return graph::comparability_graph(*p);
  return std::get<graph::Graph>(input);
}

struct AnalyzeArgs {
  std::string path;
  std::string polytope = "edge";
  std::string facets = "combinatorial";
  std::string csv;
  bool hvector = false;
  bool crosscheck = false;
  bool assert_perfect = false;
  std::uint64_t budget = lattice::kDefaultNodeBudget;
};

int cmd_analyze(const AnalyzeArgs& a) {
  analysis::Options opt;
  opt.kind = a.polytope == "stable" ? analysis::PolytopeKind::stable : analysis::PolytopeKind::edge;
  opt.facets = a.facets == "oracle" ? analysis::FacetSource::oracle : analysis::FacetSource::combinatorial;
  opt.hvector = a.hvector || !a.csv.empty();
  opt.crosscheck = a.crosscheck;
  opt.assert_perfect = a.assert_perfect;
  opt.budget = a.budget;
  const auto outcome = analysis::analyze(load_graph(a.path), opt);
  std::cout << outcome.report.dump(2) << '\n';
  if (!a.csv.empty() && outcome.report.contains("hvector")) {
    std::ofstream out(a.csv);
    if (!out) throw InputError("cannot write " + a.csv);
    ehrhart::write_counts_csv(out, outcome.report["hvector"]["counts"].get<std::vector<Int>>());
  }
  return outcome.exit_code;
}

int cmd_generate(const std::string& family, const std::vector<std::string>& params) {
  auto number = [&](std::size_t i) {
    if (i >= params.size()) throw InputError(family + ": missing parameter " + std::to_string(i + 1));
    try {
      std::size_t used = 0;
      const int v = std::stoi(params[i], &used);
      if (used != params[i].size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw InputError(family + ": parameter \"" + params[i] + "\" is not an integer");
    }
  };
  auto expect = [&](std::size_t count) {
    if (params.size() != count)
      throw InputError(family + " takes " + std::to_string(count) + " parameter" + (count == 1 ? "" : "s"));
  };
  graph::Graph g;
  if (family == "prism") {
    expect(1);
    g = edge::prism_graph(number(0));
  } else if (family == "cycle") {
    expect(1);
    g = graph::cycle_graph(number(0));
  } else if (family == "complete") {
    expect(1);
    g = graph::complete_graph(number(0));
  } else if (family == "complete_bipartite") {
    expect(2);
    g = graph::complete_bipartite_graph(number(0), number(1));
  } else if (family == "from_poset") {
    expect(1);
    g = graph::comparability_graph(io::poset_from_json(io::parse(read_input(params[0]), params[0])));
  } else {
    throw InputError("unknown family \"" + family + "\"; expected prism, cycle, complete, complete_bipartite or from_poset");
  }
  std::cout << io::to_json(g).dump() << '\n';
  return kOk;
}

int cmd_sweep(int n_max, const std::string& kind, std::uint64_t budget) {
  DeciderOptions opt;
  opt.facet_budget = budget;
  opt.node_budget = budget;
  const auto k = kind == "stable" ? analysis::PolytopeKind::stable : analysis::PolytopeKind::edge;
  const auto summary = sweep::run(n_max, k, opt, [](const json& rec) { std::cout << rec.dump() << '\n'; });
  std::cout << summary.to_json().dump() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gorenstein tests for edge and stable polytopes of graphs"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "Run the full pipeline on a graph or poset JSON file");
  an->add_option("input", analyze.path, "Graph or poset JSON (- for standard input)")->required();
  an->add_option("--polytope", analyze.polytope, "edge or stable")->check(CLI::IsMember({"edge", "stable"}));
  an->add_option("--facets", analyze.facets, "combinatorial or oracle")
      ->check(CLI::IsMember({"combinatorial", "oracle"}));
  an->add_flag("--hvector", analyze.hvector, "Compute the h*-vector");
  an->add_flag("--crosscheck", analyze.crosscheck, "Compare with the geometric test");
  an->add_flag("--assert-perfect", analyze.assert_perfect, "Treat the graph as perfect without checking");
  an->add_option("--budget", analyze.budget, "Work budget for facet and lattice point searches");
  an->add_option("--csv", analyze.csv, "Write (t, L(t)) pairs to this CSV file");

  std::string family;
  std::vector<std::string> params;
  auto* gen = app.add_subcommand("generate", "Print a graph of a named family as JSON");
  gen->add_option("family", family, "prism, cycle, complete, complete_bipartite, from_poset")->required();
  gen->add_option("params", params, "Family parameters");

  int n_max = 0;
  std::string kind;
  std::uint64_t sweep_budget = lattice::kDefaultNodeBudget;
  auto* sw = app.add_subcommand("sweep", "Check every connected labeled graph up to n_max vertices");
  sw->add_option("n_max", n_max, "Largest number of vertices (1..7)")->required();
  sw->add_option("kind", kind, "edge or stable")->required()->check(CLI::IsMember({"edge", "stable"}));
  sw->add_option("--budget", sweep_budget, "Work budget per search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*an) return cmd_analyze(analyze);
    if (*gen) return cmd_generate(family, params);
    return cmd_sweep(n_max, kind, sweep_budget);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const OverflowError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const PreconditionError& e) {
    std::cerr << "not applicable: " << e.what() << '\n';
    return kInapplicable;
  }
}

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "eulertrail/report.hpp"

using namespace eulertrail;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Common {
  bool quiet = false;
  std::string format = "json";
};

int emit(const Common& c, const Report& r, const Digraph* d) {
  if (c.format == "dot" && d) std::cout << to_dot(*d, r.highlight);
  else std::cout << r.body.dump(2) << '\n';
  if (!c.quiet) std::cerr << r.summary << '\n';
  return r.exit_code;
}

int input_error(const Common& c, const std::string& msg) {
  std::cout << nlohmann::json{{"error", msg}}.dump(2) << '\n';
  if (!c.quiet) std::cerr << "error: " << msg << '\n';
  return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eulertrail: arc classification, trails and arc avoidance on semicomplete digraphs"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("-q,--quiet", common.quiet, "no summary on stderr");
  app.add_option("--format", common.format, "json, or dot for graph output")
      ->check(CLI::IsMember({"json", "dot"}));

  std::string input;
  auto* analyze = app.add_subcommand("analyze", "order, strength, cut-arcs, nice decomposition");
  analyze->add_option("input", input, "JSON digraph file, - for stdin")->required();

  auto* classify = app.add_subcommand("classify", "containment and unavoidability classes");
  classify->add_option("input", input, "JSON digraph file, - for stdin")->required();
  std::vector<int> arc;
  bool all = false;
  auto* arc_opt = classify->add_option("--arc", arc, "tail head")->expected(2);
  auto* all_opt = classify->add_flag("--all", all, "every arc");
  arc_opt->excludes(all_opt);

  auto* trail = app.add_subcommand("trail", "spanning (x,y)-trail or cut");
  trail->add_option("input", input, "JSON digraph file, - for stdin")->required();
  int from = -1, to = -1;
  trail->add_option("--from", from)->required();
  trail->add_option("--to", to)->required();

  auto* avoid = app.add_subcommand("avoid", "spanning eulerian subdigraph avoiding an arc set");
  avoid->add_option("input", input, "JSON digraph file, - for stdin")->required();
  std::string arcs_file;
  avoid->add_option("--arcs", arcs_file, "JSON list of [u,v] arcs")->required();

  auto* search = app.add_subcommand("conjecture-search", "random probe for avoidance counterexamples");
  ConjectureOptions opt;
  search->add_option("--k", opt.k)->required();
  search->add_option("--n", opt.n, "largest order")->required();
  search->add_option("--trials", opt.trials)->required();
  search->add_option("--seed", opt.seed)->required();
  search->add_option("--jobs", opt.jobs, "worker threads, 0 for all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  if (*classify && !all && arc.empty()) {
    std::cerr << "classify needs --arc u v or --all\n";
    return kExitInputError;
  }

  try {
    if (*search) return emit(common, conjecture_report(opt), nullptr);
    Digraph d = parse_json(slurp(input));
    if (*analyze) return emit(common, analyze_report(d), &d);
    if (*classify) {
      std::optional<Arc> a;
      if (!all) a = Arc{arc[0], arc[1]};
      return emit(common, classify_report(d, a), &d);
    }
    if (*trail) return emit(common, trail_report(d, from, to), &d);
    if (*avoid) return emit(common, avoid_report(d, parse_arc_list(slurp(arcs_file), d)), &d);
  } catch (const Error& e) {
    return input_error(common, e.what());
  }
  return kExitInputError;
}

// firebreak CLI. Subcommands:
//   tree run FILE --algo {greedy|unburn|optimal}   play one strategy
//   tree kpq --k K --p P --q Q                     build the (k,p,q) family
//   gap scan --n N [--without-c6] [--jobs J]       LP/IP gap census
//   grid run SCENARIO [--tie ...] [--seed ...]     containment protocol
//   grid render SCENARIO [--format ascii|svg]      board of branch 0
// Exit codes: 0 checks passed, 1 completed with mismatches (e.g. an
// uncontained outbreak), 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "firebreak/enumerate.hpp"
#include "firebreak/render.hpp"
#include "firebreak/scenario.hpp"
#include "firebreak/strategies.hpp"

namespace {

using namespace firebreak;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write output file: " + path);
  }
  out << content;
  if (!out) {
    throw std::runtime_error("cannot write output file: " + path);
  }
}

int run_tree_run(const std::string& file, const std::string& algo, int cap) {
  const RootedTree tree = parse_tree(read_file(file));
  StrategyResult result;
  if (algo == "greedy") {
    result = greedy(tree);
  } else if (algo == "unburn") {
    result = unburn(tree);
  } else {
    result = optimal_bruteforce(tree, BruteForceOptions{cap});
  }
  std::cout << "algo=" << algo << " n=" << tree.n << " saved=" << result.saved
            << '\n';
  std::cout << "seq=";
  for (std::size_t i = 0; i < result.seq.size(); i++) {
    if (i) std::cout << ' ';
    std::cout << result.seq[i];
  }
  std::cout << '\n';
  return 0;
}

int run_tree_kpq(int k, int p, int q, int cap) {
  const RootedTree tree = make_kpq(k, p, q);
  std::cout << format_tree(tree) << '\n';
  std::cout << "n=" << tree.n << '\n';
  const StrategyResult g = greedy(tree);
  const StrategyResult u = unburn(tree);
  std::ostringstream optimal_text;
  if (tree.n <= cap) {
    optimal_text << optimal_bruteforce(tree, BruteForceOptions{cap}).saved;
  } else {
    optimal_text << "na";  // raise --cap to search exhaustively
  }
  std::cout << "greedy=" << g.saved << " unburn=" << u.saved
            << " optimal=" << optimal_text.str() << '\n';
  if (adversarial_regime(k, p, q)) {
    std::cout << "regime=adversarial greedy_formula="
              << greedy_total_formula(k, p, q)
              << " unburn_formula=" << unburn_total_formula(k, p, q) << '\n';
  } else {
    std::cout << "regime=none\n";
  }
  return 0;
}

int run_gap_scan(int n, bool without_c6, int jobs, const std::string& out,
                 bool force) {
  CensusOptions opts;
  opts.jobs = jobs;
  opts.cross_level_rows = !without_c6;
  opts.override_size_guard = force;
  const CensusResult census = gap_census(n, opts);
  if (!out.empty()) {
    write_file(out, census_jsonl(census));
  }
  std::cout << census_summary_line(census) << '\n';
  return 0;
}

ProtocolConfig load_config(const std::string& scenario, const std::string& tie,
                           const std::optional<std::uint64_t>& seed,
                           const std::optional<int>& max_steps) {
  ProtocolConfig config = load_scenario_file(scenario);
  if (tie == "random") {
    config.tie = TiePolicy::random;
  } else if (tie == "branch-all") {
    config.tie = TiePolicy::branch_all;
  }
  if (seed) config.seed = *seed;
  if (max_steps) config.max_steps = *max_steps;
  return config;
}

int run_grid_run(const ProtocolConfig& config, const std::string& out) {
  const RunResult run = run_protocol(config);
  if (!out.empty()) {
    write_file(out, trace_jsonl(run));
  }
  std::cout << report_summary(config, run);
  if (run.aborted) return 1;
  for (const BranchOutcome& br : run.branches) {
    if (!br.contained) return 1;
  }
  return 0;
}

int run_grid_render(const ProtocolConfig& config, const std::string& format,
                    const std::string& out) {
  const RunResult run = run_protocol(config);
  if (run.branches.empty()) {
    throw std::runtime_error("run produced no branch to render");
  }
  const BranchOutcome& branch = run.branches.front();
  const std::string doc = format == "svg" ? render_svg(config, branch)
                                          : render_ascii(config, branch);
  if (!out.empty()) {
    write_file(out, doc);
  } else {
    std::cout << doc;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tree protection strategies and lattice containment protocol"};
  app.require_subcommand(1);
  int exit_code = 0;

  // tree run | tree kpq
  CLI::App* tree_cmd = app.add_subcommand("tree", "rooted-tree strategies");
  tree_cmd->require_subcommand(1);

  CLI::App* tree_run = tree_cmd->add_subcommand("run", "play one strategy on a tree file");
  std::string tree_file;
  std::string algo = "greedy";
  int cap = 60;
  tree_run->add_option("file", tree_file, "tree text file")->required();
  tree_run->add_option("--algo", algo, "strategy to play")
      ->check(CLI::IsMember({"greedy", "unburn", "optimal"}));
  tree_run->add_option("--cap", cap, "exhaustive-search size cap");
  tree_run->callback([&] { exit_code = run_tree_run(tree_file, algo, cap); });

  CLI::App* tree_kpq = tree_cmd->add_subcommand("kpq", "build a (k,p,q) family tree");
  int k = 1, p = 1, q = 1;
  int kpq_cap = 60;
  tree_kpq->add_option("--k,k", k, "left path length / right branch count")->required();
  tree_kpq->add_option("--p,p", p, "leaves per right branch")->required();
  tree_kpq->add_option("--q,q", q, "leaves per left path")->required();
  tree_kpq->add_option("--cap", kpq_cap, "exhaustive-search size cap");
  tree_kpq->callback([&] { exit_code = run_tree_kpq(k, p, q, kpq_cap); });

  // gap scan
  CLI::App* gap_cmd = app.add_subcommand("gap", "LP/IP integrality gap census");
  gap_cmd->require_subcommand(1);
  CLI::App* gap_scan = gap_cmd->add_subcommand("scan", "census over all rooted trees on n vertices");
  int census_n = 0;
  bool without_c6 = false;
  int jobs = 0;
  std::string census_out;
  bool force = false;
  gap_scan->add_option("--n", census_n, "vertex count")->required();
  gap_scan->add_flag("--without-c6", without_c6, "drop the cross-level tightening rows");
  gap_scan->add_option("--jobs", jobs, "worker threads (0 = hardware)");
  gap_scan->add_option("--out", census_out, "JSON-lines output path");
  gap_scan->add_flag("--force", force, "override the census size guard (n > 14)");
  gap_scan->callback(
      [&] { exit_code = run_gap_scan(census_n, without_c6, jobs, census_out, force); });

  // grid run | grid render
  CLI::App* grid_cmd = app.add_subcommand("grid", "lattice containment protocol");
  grid_cmd->require_subcommand(1);

  CLI::App* grid_run = grid_cmd->add_subcommand("run", "run the protocol on a scenario");
  std::string run_scenario;
  std::string run_tie;
  std::optional<std::uint64_t> run_seed;
  std::optional<int> run_max_steps;
  std::string trace_out;
  grid_run->add_option("scenario", run_scenario, "scenario file")->required();
  grid_run->add_option("--tie", run_tie, "tie policy override")
      ->check(CLI::IsMember({"random", "branch-all"}));
  grid_run->add_option("--seed", run_seed, "seed override");
  grid_run->add_option("--max-steps", run_max_steps, "step limit override");
  grid_run->add_option("--out", trace_out, "trace JSON-lines output path");
  grid_run->callback([&] {
    exit_code = run_grid_run(
        load_config(run_scenario, run_tie, run_seed, run_max_steps), trace_out);
  });

  CLI::App* grid_render = grid_cmd->add_subcommand("render", "render branch 0 of a scenario run");
  std::string render_scenario;
  std::string render_tie;
  std::optional<std::uint64_t> render_seed;
  std::optional<int> render_max_steps;
  std::string format = "ascii";
  std::string render_out;
  grid_render->add_option("scenario", render_scenario, "scenario file")->required();
  grid_render->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"ascii", "svg"}));
  grid_render->add_option("--out", render_out, "output path (default stdout)");
  grid_render->add_option("--tie", render_tie, "tie policy override")
      ->check(CLI::IsMember({"random", "branch-all"}));
  grid_render->add_option("--seed", render_seed, "seed override");
  grid_render->add_option("--max-steps", render_max_steps, "step limit override");
  grid_render->callback([&] {
    exit_code = run_grid_render(
        load_config(render_scenario, render_tie, render_seed, render_max_steps),
        format, render_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ScenarioError& e) {
    for (const std::string& msg : e.errors) {
      std::cerr << "error: " << msg << '\n';
    }
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}

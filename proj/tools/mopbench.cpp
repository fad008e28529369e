// mopbench: benchmark CLI for the composite multi-objective solvers.
// Subcommands: list-problems, solve, pareto, compare, profile.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "monpg/experiment.hpp"
#include "monpg/io.hpp"

namespace {

using namespace monpg;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Vector parse_vector(const std::string& csv) {
  std::vector<double> vals;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
  Vector v(static_cast<Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) v[static_cast<Index>(i)] = vals[i];
  return v;
}

struct SolverOptions {
  std::string type = "monpg";
  double beta = 0.1, r = 0.5, eps = 1e-5, subproblem_tol = 1e-8;
  int max_iter = 200, max_backtracks = 60;
  bool forward_difference = false;
  double ell = 0.0;          // mopg proximal parameter; 0 = automatic
  std::string weights;       // ws weights, comma separated
};

void add_solver_options(CLI::App* cmd, SolverOptions& opts) {
  cmd->add_option("--solver", opts.type, "monpg | mopg | ws")
      ->check(CLI::IsMember({"monpg", "mopg", "ws"}));
  cmd->add_option("--beta", opts.beta, "Armijo slope fraction");
  cmd->add_option("--r", opts.r, "backtracking ratio");
  cmd->add_option("--eps", opts.eps, "stopping tolerance on |d|");
  cmd->add_option("--max-iter", opts.max_iter, "iteration cap");
  cmd->add_option("--subproblem-tol", opts.subproblem_tol, "subproblem KKT tolerance");
  cmd->add_option("--max-backtracks", opts.max_backtracks, "line search cap");
  cmd->add_flag("--fd", opts.forward_difference, "forward-difference derivatives");
  cmd->add_option("--ell", opts.ell, "mopg proximal parameter (0 = automatic)");
  cmd->add_option("--weights", opts.weights, "ws weights, e.g. 0.2,0.8");
}

SolverSpec make_spec(const SolverOptions& opts) {
  SolverSpec spec;
  if (opts.type == "monpg")
    spec = SolverSpec::monpg();
  else if (opts.type == "mopg")
    spec = SolverSpec::mopg();
  else
    spec = SolverSpec::weighted_sum();
  spec.config.beta = opts.beta;
  spec.config.backtrack_ratio = opts.r;
  spec.config.eps = opts.eps;
  spec.config.max_iter = opts.max_iter;
  spec.config.subproblem_tol = opts.subproblem_tol;
  spec.config.max_backtracks = opts.max_backtracks;
  if (opts.forward_difference) spec.config.derivative_mode = DerivativeMode::ForwardDifference;
  if (opts.ell > 0) spec.ell = opts.ell;
  if (!opts.weights.empty()) spec.weights = parse_vector(opts.weights);
  spec.config.validate();
  return spec;
}

MultiObjectiveProblem load_problem(const std::string& name, const std::string& file,
                                   std::uint64_t problem_seed) {
  if (!file.empty()) return problem_from_json_text(read_file(file));
  if (!registry().contains(name))
    throw std::invalid_argument("unknown problem '" + name + "' (see list-problems)");
  return registry().make(name, problem_seed);
}

std::filesystem::path out_dir_override(const std::filesystem::path& given) {
  if (const char* env = std::getenv("MOPBENCH_OUT_DIR"); env && *env) return env;
  return given;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark driver for composite multi-objective optimization"};
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand("list-problems", "List registered problems");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Run one solver from one start");
  std::string solve_problem, solve_problem_file, solve_x0, solve_out = "run.json";
  std::uint64_t solve_problem_seed = 1;
  bool solve_trajectory = false, solve_trace = false;
  SolverOptions solve_opts;
  solve_cmd->add_option("problem", solve_problem, "problem name");
  solve_cmd->add_option("--problem-file", solve_problem_file, "problem JSON file");
  solve_cmd->add_option("--x0", solve_x0, "start point, comma separated")->required();
  solve_cmd->add_option("--out", solve_out, "output JSON path");
  solve_cmd->add_option("--problem-seed", solve_problem_seed, "seed for seeded problems");
  solve_cmd->add_flag("--trajectory", solve_trajectory, "include the trajectory in the JSON");
  solve_cmd->add_flag("--trace-subproblems", solve_trace,
                      "emit per-iteration barrier traces on stderr");
  add_solver_options(solve_cmd, solve_opts);

  // pareto
  auto* pareto_cmd = app.add_subcommand("pareto", "Multi-start front for one solver");
  std::string pareto_problem, pareto_problem_file, pareto_out = "results";
  std::uint64_t pareto_seed = 0, pareto_problem_seed = 1;
  int pareto_starts = 100, pareto_jobs = 0;
  SolverOptions pareto_opts;
  pareto_cmd->add_option("problem", pareto_problem, "problem name");
  pareto_cmd->add_option("--problem-file", pareto_problem_file, "problem JSON file");
  pareto_cmd->add_option("--starts", pareto_starts, "number of starts (ws: weight count)");
  pareto_cmd->add_option("--seed", pareto_seed, "master seed")->required();
  pareto_cmd->add_option("--out-dir", pareto_out, "output directory");
  pareto_cmd->add_option("--jobs", pareto_jobs, "worker count (0 = hardware)");
  pareto_cmd->add_option("--problem-seed", pareto_problem_seed, "seed for seeded problems");
  add_solver_options(pareto_cmd, pareto_opts);

  // compare / profile
  auto* compare_cmd = app.add_subcommand("compare", "Run a solver grid and emit metric CSVs");
  auto* profile_cmd =
      app.add_subcommand("profile", "compare plus pairwise performance profiles");
  std::string compare_config, profile_config;
  std::uint64_t compare_seed = 0, profile_seed = 0;
  bool compare_seed_set = false, profile_seed_set = false;
  compare_cmd->add_option("--config", compare_config, "experiment config JSON")->required();
  compare_cmd->add_option("--seed", compare_seed, "override the config seed")
      ->trigger_on_parse()
      ->each([&](const std::string&) { compare_seed_set = true; });
  profile_cmd->add_option("--config", profile_config, "experiment config JSON")->required();
  profile_cmd->add_option("--seed", profile_seed, "override the config seed")
      ->trigger_on_parse()
      ->each([&](const std::string&) { profile_seed_set = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : monpg::kExitUsage;
  }

  try {
    if (list_cmd->parsed()) {
      for (const auto& name : registry().names()) {
        const MultiObjectiveProblem p = registry().make(name);
        std::cout << name << " m=" << p.objective_count() << " n=" << p.dimension() << " box=[";
        for (Index i = 0; i < p.dimension(); ++i)
          std::cout << (i ? "," : "") << format_double(p.lower_bound()[i]);
        std::cout << "]..[";
        for (Index i = 0; i < p.dimension(); ++i)
          std::cout << (i ? "," : "") << format_double(p.upper_bound()[i]);
        std::cout << "] sigma_known=" << (p.has_declared_sigma() ? "yes" : "no") << "\n";
      }
      return kExitOk;
    }

    if (solve_cmd->parsed()) {
      const MultiObjectiveProblem problem =
          load_problem(solve_problem, solve_problem_file, solve_problem_seed);
      return run_solve(problem, parse_vector(solve_x0), make_spec(solve_opts), solve_out,
                       solve_trajectory, solve_trace);
    }

    if (pareto_cmd->parsed()) {
      const MultiObjectiveProblem problem =
          load_problem(pareto_problem, pareto_problem_file, pareto_problem_seed);
      return run_pareto(problem, make_spec(pareto_opts), pareto_starts, pareto_seed,
                        out_dir_override(pareto_out), pareto_jobs);
    }

    if (compare_cmd->parsed() || profile_cmd->parsed()) {
      const bool with_profiles = profile_cmd->parsed();
      const std::string path = with_profiles ? profile_config : compare_config;
      ExperimentConfig config = parse_experiment_config(read_file(path));
      if (with_profiles ? profile_seed_set : compare_seed_set)
        config.seed = with_profiles ? profile_seed : compare_seed;
      config.out_dir = out_dir_override(config.out_dir);
      return run_compare(config, with_profiles);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

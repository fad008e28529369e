#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "monpg/metrics.hpp"
#include "monpg/test_problems.hpp"

namespace monpg {

// Exit codes shared by the CLI subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMaxIter = 2;
inline constexpr int kExitFailure = 3;
inline constexpr int kExitUsage = 64;

/// Declarative description of a compare/profile run (docs/config-schema.md).
struct ExperimentConfig {
  std::vector<std::string> problems;
  std::vector<SolverSpec> solvers;
  int n_starts = 100;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir = "results";
  std::vector<std::string> metrics = {"delta", "hv", "iterations", "evals"};
  int hv_samples = 10000;
  int jobs = 0;  // 0 = hardware concurrency
  std::uint64_t problem_seed = 1;
};

/// Parses and validates a config document. Error messages carry the line of
/// the offending construct in `text` where one can be determined.
ExperimentConfig parse_experiment_config(const std::string& text);

/// FNV-1a hash of the canonical config rendering; embedded in every output
/// file header so results can be traced to their configuration.
std::uint64_t config_hash(const ExperimentConfig& config);

/// Single run from an explicit start; writes a RunResult JSON file and prints
/// a one-line summary. Returns kExitOk / kExitMaxIter / kExitFailure.
int run_solve(const MultiObjectiveProblem& problem, const Vector& x0, const SolverSpec& spec,
              const std::filesystem::path& out_file, bool include_trajectory,
              bool trace_subproblems);

/// Multi-start front for one (problem, solver): writes front and per-run
/// CSVs into out_dir. Returns kExitFailure when every run fails.
int run_pareto(const MultiObjectiveProblem& problem, const SolverSpec& spec, int n_starts,
               std::uint64_t seed, const std::filesystem::path& out_dir, int jobs);

/// Full experiment grid: fronts, per-run summaries, a metrics table, the
/// hypervolume reference points, and (with `with_profiles`) pairwise
/// performance-profile CSVs per metric.
int run_compare(const ExperimentConfig& config, bool with_profiles);

}  // namespace monpg

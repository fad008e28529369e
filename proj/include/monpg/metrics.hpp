#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "monpg/dominance.hpp"
#include "monpg/solvers.hpp"

namespace monpg {

/// Mutually nondominated (x, F(x)) points with their provenance. The filter
/// is applied at construction.
struct Front {
  std::vector<FrontPoint> points;
  std::string problem;
  std::string solver;
  std::uint64_t seed = 0;

  Front() = default;
  Front(std::vector<FrontPoint> raw, std::string problem, std::string solver,
        std::uint64_t seed);
};

/// How a multi-start drives individual runs.
struct SolverSpec {
  enum class Type { Monpg, Mopg, WeightedSum };
  Type type = Type::Monpg;
  std::string name = "monpg";  // label used for streams, files, profiles
  SolverConfig config;
  std::optional<double> ell;      // mopg only
  std::optional<Vector> weights;  // ws single runs; multi-start uses the grid

  static SolverSpec monpg(SolverConfig cfg = {});
  static SolverSpec mopg(SolverConfig cfg = {}, std::optional<double> ell = std::nullopt);
  static SolverSpec weighted_sum(SolverConfig cfg = {});
};

struct MultiStartResult {
  Front front;
  std::vector<RunResult> runs;  // one per start, in start order
};

/// Runs `spec` from n_starts points drawn uniformly in the sampling box
/// (weighted-sum mode instead sweeps the deterministic weight grid, one
/// random start per weight). Start i draws from the stream derived from
/// (seed, problem, solver name, i), so results are independent of `jobs`.
/// Throws EmptyFront when no run terminates successfully.
MultiStartResult multi_start(const MultiObjectiveProblem& problem, const SolverSpec& spec,
                             int n_starts, std::uint64_t seed, int jobs = 1);

/// Best/worst objective values over the union of the compared fronts,
/// per objective.
struct SpreadExtremes {
  Vector best;   // componentwise minima
  Vector worst;  // componentwise maxima
};

SpreadExtremes spread_extremes(const std::vector<Front>& fronts);

/// Delta spread of a front against per-objective best/worst references:
/// for each objective sort the front's values, take boundary gaps delta_0,
/// delta_N against the references and interior gaps delta_i, and evaluate
/// (delta_0 + delta_N + sum |delta_i - mean|) /
/// (delta_0 + delta_N + (N-1) mean); the metric is the max over objectives.
/// A single-point front returns 1 by convention; an empty front throws.
double delta_spread(const Front& front, const SpreadExtremes& extremes);

/// Monte-Carlo hypervolume: the fraction of n_samples uniform draws from
/// [ideal, ref] weakly dominated by some front point. Deterministic in seed.
/// Throws std::invalid_argument for empty fronts, degenerate boxes, or front
/// values outside the box.
double hypervolume_mc(const Front& front, const Vector& ref_point, const Vector& ideal_point,
                      int n_samples = 10000, std::uint64_t seed = 0);

/// Right-continuous nondecreasing step function rho_s(tau) stored as sorted
/// breakpoints; the value before the first breakpoint is 0.
struct ProfileCurve {
  std::string solver;
  std::vector<std::pair<double, double>> breakpoints;

  double value_at(double tau) const;
};

/// Performance profiles over a problems-by-solvers metric matrix. Entries
/// that are NaN, infinite, or nonpositive count as failures: they are
/// excluded from the row minimum and never satisfy r <= tau. With `invert`
/// the matrix is replaced entrywise by 1/value first (the hypervolume
/// convention, where larger raw values are better).
std::vector<ProfileCurve> performance_profile(const Matrix& metric,
                                              const std::vector<std::string>& solvers,
                                              bool invert = false);

enum class AccountingMethod { Monpg, WeightedSum, Mopg };

/// Total function-evaluation charge under the forward-difference cost model:
/// n_f + n*n_it + n(n+1)/2*n_it for the Hessian-based methods and
/// n_f + n*n_it for mopg.
std::int64_t eval_accounting(const EvalCounter& counter, Index n, AccountingMethod method);

}  // namespace monpg

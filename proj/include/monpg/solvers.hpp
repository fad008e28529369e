#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monpg/problem.hpp"
#include "monpg/subproblem.hpp"
#include "monpg/types.hpp"

namespace monpg {

enum class DerivativeMode { Analytic, ForwardDifference };

struct SolverConfig {
  double beta = 0.1;             // Armijo slope fraction, in (0,1)
  double backtrack_ratio = 0.5;  // r, in (0,1)
  double eps = 1e-5;             // stop when |d^k| < eps
  int max_iter = 200;
  double subproblem_tol = 1e-8;
  int max_backtracks = 60;
  DerivativeMode derivative_mode = DerivativeMode::Analytic;

  // Debug sink: receives the barrier trace of each outer iteration's
  // subproblem solve.
  std::function<void(int iteration, const SubproblemTrace&)> subproblem_trace;

  void validate() const;
};

enum class Termination { Critical, MaxIterations, LineSearchStall, SubproblemFailure };

std::string to_string(Termination t);

/// One accepted outer step: state before the step, the direction/model value
/// that produced it, and the accepted step length.
struct IterationRecord {
  Vector x;
  Vector f;
  Vector d;
  double t = 0.0;
  double alpha = 0.0;
  double mu = 0.0;  // model regularization used at this iterate
};

struct RunResult {
  std::string problem;
  std::string solver;
  std::vector<IterationRecord> trajectory;
  Termination termination = Termination::MaxIterations;
  Vector final_x;
  Vector final_f;
  double final_d_norm = 0.0;
  EvalCounter counter;
  double max_regularization = 0.0;
  double wall_time_seconds = 0.0;
  std::string failure_message;  // set for stall/failure terminations
};

/// First alpha in {1, r, r^2, ...} with F_j(x + alpha d) <= F_j(x) + beta
/// alpha t for every j. fx must equal F(x). Throws LineSearchStall after
/// max_backtracks trials and std::invalid_argument when t >= 0 or d = 0.
/// On success *f_accepted holds F(x + alpha d), saving a re-evaluation.
double armijo_search(const MultiObjectiveProblem& problem, const Vector& x, const Vector& fx,
                     const Vector& d, double t, const SolverConfig& config,
                     EvalCounter* counter = nullptr, Vector* f_accepted = nullptr);

/// Convenience overload that evaluates F(x) itself.
double armijo_search(const MultiObjectiveProblem& problem, const Vector& x, const Vector& d,
                     double t, const SolverConfig& config);

/// Newton-type proximal gradient method: at each iterate solve the quadratic
/// minimax subproblem, stop when |d| < eps, otherwise take the Armijo step.
RunResult monpg_run(const MultiObjectiveProblem& problem, const Vector& x0,
                    const SolverConfig& config);

/// Proximal-gradient baseline: same loop with curvature ell*I in place of the
/// Hessians. Without an explicit ell it uses the declared Lipschitz constant
/// when available, otherwise starts at max(1, sigma) and doubles until the
/// proximal decrease condition holds at the trial step.
RunResult mopg_run(const MultiObjectiveProblem& problem, const Vector& x0,
                   const SolverConfig& config, std::optional<double> ell = std::nullopt);

/// Scalarization of `problem` by simplex weights w: smooth part sum w_j f_j,
/// nonsmooth part expanded over the product of piece index sets. Throws
/// UnsupportedProblem if the expansion exceeds 10^4 pieces.
MultiObjectiveProblem make_weighted_problem(const MultiObjectiveProblem& problem,
                                            const Vector& weights);

/// Runs monpg on the weighted scalar problem. The result's trajectory and
/// counters refer to the scalarized problem.
RunResult weighted_sum_run(const MultiObjectiveProblem& problem, const Vector& weights,
                           const Vector& x0, const SolverConfig& config);

/// Deterministic weight grid: for m = 2, w1 = i/(count-1); for m = 3 the
/// simplex lattice {(a,b,c)/q : a+b+c = q} with q chosen so the lattice size
/// is closest to count. Unit vectors are always included. m = 1 returns
/// `count` copies of (1).
std::vector<Vector> weight_grid(Index m, int count);

}  // namespace monpg

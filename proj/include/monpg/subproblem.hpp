#pragma once

#include <stdexcept>
#include <vector>

#include "monpg/problem.hpp"
#include "monpg/types.hpp"

namespace monpg {

/// Second-order minimax model of the objectives at a base point x:
///
///   Q_j(x, d) = grad_j' d + 1/2 d' H_j d + (mu/2)|d|^2 + g_j(x+d) - g_j(x)
///
/// with grad_j, H_j the smooth part's derivatives at x. The proximal-gradient
/// variant replaces H_j by ell*I. The model owns copies of the nonsmooth
/// parts and is immutable, so concurrent solves on distinct models are safe.
class MinimaxModel {
 public:
  MinimaxModel(const MultiObjectiveProblem& problem, const Vector& x, double mu,
               EvalCounter* counter = nullptr);

  /// Proximal-gradient model: curvature ell*I instead of the Hessians.
  /// Counts gradient batches only (no Hessian evaluations).
  static MinimaxModel proximal_gradient(const MultiObjectiveProblem& problem, const Vector& x,
                                        double ell, EvalCounter* counter = nullptr);

  Index dimension() const { return n_; }
  Index objective_count() const { return m_; }
  const Vector& base_point() const { return x_; }
  double regularization() const { return mu_; }

  const Vector& smooth_gradient(Index j) const { return grads_[static_cast<size_t>(j)]; }
  /// H_j + mu*I, the curvature actually used by the model.
  const Matrix& curvature(Index j) const { return hessians_mu_[static_cast<size_t>(j)]; }
  const PiecewiseMaxFunction& nonsmooth(Index j) const { return gs_[static_cast<size_t>(j)]; }
  double nonsmooth_at_base(Index j) const { return g_at_x_[static_cast<size_t>(j)]; }

  double quad_term(Index j, const Vector& d) const;
  /// Q_j(x, d).
  double objective_model(Index j, const Vector& d) const;
  /// max_j Q_j(x, d).
  double model_max(const Vector& d) const;
  /// Smallest eigenvalue over all curvature matrices H_j + mu*I.
  double min_curvature_eigenvalue() const { return min_eig_; }

  Index total_pieces() const { return total_pieces_; }

 private:
  MinimaxModel() = default;
  void finalize();

  Index n_ = 0, m_ = 0;
  Vector x_;
  double mu_ = 0.0;
  std::vector<Vector> grads_;
  std::vector<Matrix> hessians_mu_;
  std::vector<PiecewiseMaxFunction> gs_;
  std::vector<double> g_at_x_;
  double min_eig_ = 0.0;
  Index total_pieces_ = 0;
};

/// Solution certificate for P(x): direction d, model value t = max_j Q_j(x,d),
/// simplex multipliers lambda, the per-objective subgradients xi_j backing the
/// stationarity condition, the active objective set, and the verified KKT
/// residual.
struct SubproblemSolution {
  Vector d;
  double t = 0.0;
  Vector lambda;
  std::vector<Vector> xi;
  std::vector<int> active;
  double kkt = 0.0;
  int newton_iterations = 0;
  double barrier_mu_final = 0.0;
};

/// Thrown when the barrier iteration cap is exceeded; carries the best
/// iterate found so far.
class SubproblemFailure : public std::runtime_error {
 public:
  SubproblemFailure(const std::string& what, SubproblemSolution best)
      : std::runtime_error(what), best_solution(std::move(best)) {}
  SubproblemSolution best_solution;
};

/// Per-stage trace of the barrier solve, for debugging output.
struct SubproblemTrace {
  struct Stage {
    double barrier_mu;
    int newton_iterations;
    double gradient_norm;
    double kkt_residual;
  };
  std::vector<Stage> stages;
};

/// Spec'd regularization rule: zero when every Hessian is safely positive
/// definite, otherwise 1e-6*(1 + max_j |H_j|_inf), raised further if that
/// still leaves the smallest curvature eigenvalue below 1e-8 (possible with
/// forward-difference Hessians).
double suggest_regularization(const std::vector<Matrix>& hessians);

/// Builds the model at x with the given regularization.
MinimaxModel build_model(const MultiObjectiveProblem& problem, const Vector& x, double mu,
                         EvalCounter* counter = nullptr);

/// Builds the model at x, choosing mu by suggest_regularization. The chosen
/// value is available as model.regularization().
MinimaxModel build_model_regularized(const MultiObjectiveProblem& problem, const Vector& x,
                                     EvalCounter* counter = nullptr);

/// Solves P(x): min_d max_j Q_j(x, d) through the epigraph reformulation
/// (min t s.t. per-piece constraints <= t) with a log-barrier Newton method.
/// Returns a solution with kkt <= tol; throws std::invalid_argument if the
/// model is not positive definite and SubproblemFailure if the barrier stage
/// cap is exhausted before reaching tol.
SubproblemSolution solve_subproblem(const MinimaxModel& model, double tol = 1e-8,
                                    SubproblemTrace* trace = nullptr);

/// Max of the four KKT defect measures for (d, t, lambda, xi): stationarity
/// in the infinity norm, complementarity lambda_j*|Q_j - t|, feasibility
/// (Q_j - t)_+, and simplex defect |sum lambda - 1|. Uses the solution's own
/// xi vectors; lambda must lie on the simplex to 1e-8.
double kkt_residual(const MinimaxModel& model, const SubproblemSolution& solution);

/// True iff |d(x)| < eps where d(x) solves P(x) built with the automatic
/// regularization rule.
bool is_critical(const MultiObjectiveProblem& problem, const Vector& x, double eps,
                 double subproblem_tol = 1e-8);

}  // namespace monpg

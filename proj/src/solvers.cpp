#include "monpg/solvers.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "monpg/errors.hpp"

namespace monpg {

void SolverConfig::validate() const {
  if (!(beta > 0 && beta < 1)) throw std::invalid_argument("config: beta must be in (0,1)");
  if (!(backtrack_ratio > 0 && backtrack_ratio < 1))
    throw std::invalid_argument("config: backtrack ratio must be in (0,1)");
  if (!(eps > 0)) throw std::invalid_argument("config: eps must be positive");
  if (max_iter < 1) throw std::invalid_argument("config: max_iter must be positive");
  if (!(subproblem_tol > 0)) throw std::invalid_argument("config: subproblem_tol must be positive");
  if (max_backtracks < 1) throw std::invalid_argument("config: max_backtracks must be positive");
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::Critical:
      return "critical";
    case Termination::MaxIterations:
      return "max_iter";
    case Termination::LineSearchStall:
      return "line_search_stall";
    case Termination::SubproblemFailure:
      return "subproblem_failure";
  }
  return "unknown";
}

double armijo_search(const MultiObjectiveProblem& problem, const Vector& x, const Vector& fx,
                     const Vector& d, double t, const SolverConfig& config, EvalCounter* counter,
                     Vector* f_accepted) {
  config.validate();
  if (!(t < 0)) throw std::invalid_argument("armijo_search: requires t < 0");
  if (d.norm() == 0) throw std::invalid_argument("armijo_search: requires d != 0");

  double alpha = 1.0;
  for (int i = 0; i < config.max_backtracks; ++i) {
    const Vector f_trial = eval_objectives(problem, x + alpha * d, counter);
    if ((f_trial.array() <= (fx.array() + config.beta * alpha * t)).all()) {
      if (f_accepted) *f_accepted = f_trial;
      return alpha;
    }
    alpha *= config.backtrack_ratio;
  }
  throw LineSearchStall("armijo_search: no acceptable step within max_backtracks");
}

double armijo_search(const MultiObjectiveProblem& problem, const Vector& x, const Vector& d,
                     double t, const SolverConfig& config) {
  return armijo_search(problem, x, eval_objectives(problem, x), d, t, config);
}

namespace {

using Clock = std::chrono::steady_clock;

// What one outer iteration proposes: the subproblem solution, the model
// regularization used, and optionally a unit step already verified to give
// sufficient decrease (the proximal backtracking path), with its objective
// values so the line search can be skipped.
struct Proposal {
  SubproblemSolution sol;
  double mu = 0.0;
  bool unit_step_verified = false;
  Vector f_at_unit_step;
};

// Common MONPG/MOPG outer loop: propose a direction at x, stop on |d| < eps
// or on the iteration cap, otherwise step by the Armijo rule and record.
template <typename Propose>
RunResult descent_loop(const MultiObjectiveProblem& problem, const Vector& x0,
                       const SolverConfig& config, const std::string& solver_name,
                       Propose&& propose) {
  config.validate();
  if (x0.size() != problem.dimension())
    throw std::invalid_argument("run: x0 has wrong dimension");

  const auto t_start = Clock::now();
  RunResult result;
  result.problem = problem.name();
  result.solver = solver_name;

  Vector x = x0;
  Vector fx = eval_objectives(problem, x, &result.counter);

  while (true) {
    Proposal p;
    try {
      p = propose(x, fx, &result.counter);
    } catch (const SubproblemFailure& e) {
      result.termination = Termination::SubproblemFailure;
      result.failure_message = e.what();
      break;
    } catch (const LineSearchStall& e) {
      result.termination = Termination::LineSearchStall;
      result.failure_message = e.what();
      break;
    }
    result.max_regularization = std::max(result.max_regularization, p.mu);
    result.final_d_norm = p.sol.d.norm();

    if (p.sol.d.norm() < config.eps) {
      result.termination = Termination::Critical;
      break;
    }
    if (result.counter.n_it >= config.max_iter) {
      result.termination = Termination::MaxIterations;
      break;
    }

    double alpha = 1.0;
    Vector f_next;
    try {
      if (p.unit_step_verified) {
        f_next = p.f_at_unit_step;
      } else {
        alpha = armijo_search(problem, x, fx, p.sol.d, p.sol.t, config, &result.counter, &f_next);
      }
    } catch (const LineSearchStall& e) {
      result.termination = Termination::LineSearchStall;
      result.failure_message = e.what();
      break;
    } catch (const std::invalid_argument& e) {
      // t >= 0 while |d| >= eps: numerically degenerate subproblem
      result.termination = Termination::LineSearchStall;
      result.failure_message = e.what();
      break;
    }

    result.trajectory.push_back({x, fx, p.sol.d, p.sol.t, alpha, p.mu});
    x += alpha * p.sol.d;
    fx = f_next;
    result.counter.n_it += 1;
  }

  result.final_x = x;
  result.final_f = fx;
  result.wall_time_seconds = std::chrono::duration<double>(Clock::now() - t_start).count();
  return result;
}

}  // namespace

RunResult monpg_run(const MultiObjectiveProblem& problem, const Vector& x0,
                    const SolverConfig& config) {
  const MultiObjectiveProblem* prob = &problem;
  MultiObjectiveProblem fd_problem = problem;
  if (config.derivative_mode == DerivativeMode::ForwardDifference) {
    fd_problem = with_forward_differences(problem);
    prob = &fd_problem;
  }
  return descent_loop(*prob, x0, config, "monpg",
                      [prob, &config](const Vector& x, const Vector&, EvalCounter* counter) {
                        MinimaxModel model = build_model_regularized(*prob, x, counter);
                        Proposal p;
                        p.mu = model.regularization();
                        if (config.subproblem_trace) {
                          SubproblemTrace trace;
                          p.sol = solve_subproblem(model, config.subproblem_tol, &trace);
                          config.subproblem_trace(static_cast<int>(counter->n_it), trace);
                        } else {
                          p.sol = solve_subproblem(model, config.subproblem_tol);
                        }
                        return p;
                      });
}

RunResult mopg_run(const MultiObjectiveProblem& problem, const Vector& x0,
                   const SolverConfig& config, std::optional<double> ell) {
  const MultiObjectiveProblem* prob = &problem;
  MultiObjectiveProblem fd_problem = problem;
  if (config.derivative_mode == DerivativeMode::ForwardDifference) {
    fd_problem = with_forward_differences(problem);
    prob = &fd_problem;
  }
  if (ell && !(*ell > 0)) throw std::invalid_argument("mopg_run: ell must be positive");

  const bool fixed_ell = ell.has_value() || prob->has_declared_lipschitz();
  double current_ell =
      ell ? *ell
          : (prob->has_declared_lipschitz()
                 ? prob->declared_lipschitz()
                 : std::max(1.0, prob->has_declared_sigma() ? prob->declared_sigma() : 1.0));

  auto propose = [prob, &config, fixed_ell, current_ell](
                     const Vector& x, const Vector& fx, EvalCounter* counter) mutable {
    MinimaxModel model = MinimaxModel::proximal_gradient(*prob, x, current_ell, counter);
    SubproblemSolution sol = solve_subproblem(model, config.subproblem_tol);
    Proposal p;
    if (fixed_ell) {
      p.sol = std::move(sol);
      return p;
    }
    // backtracking on the proximal parameter: double ell until the model
    // majorizes the objectives at the trial step
    const Index m = prob->objective_count();
    for (int doublings = 0; doublings <= 60; ++doublings) {
      if (sol.d.norm() < config.eps) {
        p.sol = std::move(sol);
        return p;
      }
      const Vector f_trial = eval_objectives(*prob, x + sol.d, counter);
      bool majorizes = true;
      for (Index j = 0; j < m; ++j) {
        if (f_trial[j] > fx[j] + model.objective_model(j, sol.d)) {
          majorizes = false;
          break;
        }
      }
      if (majorizes) {
        p.sol = std::move(sol);
        // the majorization gives F_j(x+d) <= F_j(x) + t with t < 0, which is
        // stronger than the Armijo condition at alpha = 1
        p.unit_step_verified = true;
        p.f_at_unit_step = f_trial;
        return p;
      }
      current_ell *= 2.0;
      // gradients are unchanged; do not recount the batch
      model = MinimaxModel::proximal_gradient(*prob, x, current_ell, nullptr);
      sol = solve_subproblem(model, config.subproblem_tol);
    }
    throw LineSearchStall("mopg: proximal parameter doubling exhausted");
  };
  return descent_loop(*prob, x0, config, "mopg", propose);
}

MultiObjectiveProblem make_weighted_problem(const MultiObjectiveProblem& problem,
                                            const Vector& weights) {
  const Index m = problem.objective_count();
  if (weights.size() != m)
    throw std::invalid_argument("make_weighted_problem: weight length mismatch");
  if ((weights.array() < -1e-12).any() || std::abs(weights.sum() - 1.0) > 1e-8)
    throw std::invalid_argument("make_weighted_problem: weights must lie on the simplex");

  std::vector<Index> active;
  for (Index j = 0; j < m; ++j)
    if (weights[j] > 0) active.push_back(j);
  if (active.empty()) throw std::invalid_argument("make_weighted_problem: all weights zero");

  std::size_t product = 1;
  for (Index j : active) {
    product *= static_cast<std::size_t>(problem.nonsmooth(j).piece_count());
    if (product > 10000)
      throw UnsupportedProblem("make_weighted_problem: piece product exceeds 10^4");
  }

  const Index n = problem.dimension();

  std::vector<SmoothFunction> parts;
  std::vector<double> ws;
  for (Index j : active) {
    parts.push_back(problem.smooth(j));
    ws.push_back(weights[j]);
  }
  SmoothFunction fsum;
  fsum.n = n;
  fsum.value = [parts, ws](const Vector& x) {
    double v = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) v += ws[i] * parts[i].value(x);
    return v;
  };
  fsum.gradient = [parts, ws, n](const Vector& x) {
    Vector g = Vector::Zero(n);
    for (std::size_t i = 0; i < parts.size(); ++i) g += ws[i] * parts[i].gradient(x);
    return g;
  };
  fsum.hessian = [parts, ws, n](const Vector& x) {
    Matrix h = Matrix::Zero(n, n);
    for (std::size_t i = 0; i < parts.size(); ++i) h += ws[i] * parts[i].hessian(x);
    return h;
  };
  double sigma = 0.0;
  for (Index j = 0; j < m; ++j) sigma += weights[j] * problem.smooth(j).strong_convexity;
  fsum.strong_convexity = sigma;
  bool all_lipschitz = true;
  double lip = 0.0;
  for (Index j : active) {
    if (!problem.smooth(j).grad_lipschitz) {
      all_lipschitz = false;
      break;
    }
    lip += weights[j] * *problem.smooth(j).grad_lipschitz;
  }
  if (all_lipschitz) fsum.grad_lipschitz = lip;

  // max over piece tuples of the weighted piece sums; closed forms are kept
  // closed-form where the tuple allows it
  std::vector<ConvexPiece> combined;
  std::vector<std::size_t> tuple(active.size(), 0);
  while (true) {
    bool all_affine = true, quad_ok = true;
    for (std::size_t i = 0; i < active.size(); ++i) {
      const auto& piece = problem.nonsmooth(active[i]).pieces[tuple[i]];
      if (piece.kind != ConvexPiece::Kind::Affine) all_affine = false;
      if (piece.kind != ConvexPiece::Kind::Affine && piece.kind != ConvexPiece::Kind::Quadratic)
        quad_ok = false;
    }
    if (all_affine) {
      Vector u = Vector::Zero(n);
      double c = 0;
      for (std::size_t i = 0; i < active.size(); ++i) {
        const auto& piece = problem.nonsmooth(active[i]).pieces[tuple[i]];
        u += ws[i] * piece.u;
        c += ws[i] * piece.c;
      }
      combined.push_back(ConvexPiece::affine(u, c));
    } else if (quad_ok) {
      Matrix A = Matrix::Zero(n, n);
      Vector b = Vector::Zero(n);
      double c = 0;
      for (std::size_t i = 0; i < active.size(); ++i) {
        const auto& piece = problem.nonsmooth(active[i]).pieces[tuple[i]];
        if (piece.kind == ConvexPiece::Kind::Affine) {
          b += ws[i] * piece.u;
        } else {
          A += ws[i] * piece.A;
          b += ws[i] * piece.b;
        }
        c += ws[i] * piece.c;
      }
      combined.push_back(ConvexPiece::quadratic(A, b, c));
    } else {
      std::vector<ConvexPiece> tuple_pieces;
      for (std::size_t i = 0; i < active.size(); ++i)
        tuple_pieces.push_back(problem.nonsmooth(active[i]).pieces[tuple[i]]);
      const std::vector<double> tuple_ws = ws;
      combined.push_back(ConvexPiece::generic(
          n,
          [tuple_pieces, tuple_ws](const Vector& x) {
            double v = 0;
            for (std::size_t i = 0; i < tuple_pieces.size(); ++i)
              v += tuple_ws[i] * tuple_pieces[i].value(x);
            return v;
          },
          [tuple_pieces, tuple_ws, n](const Vector& x) {
            Vector g = Vector::Zero(n);
            for (std::size_t i = 0; i < tuple_pieces.size(); ++i)
              g += tuple_ws[i] * tuple_pieces[i].gradient(x);
            return g;
          },
          [tuple_pieces, tuple_ws, n](const Vector& x) {
            Matrix h = Matrix::Zero(n, n);
            for (std::size_t i = 0; i < tuple_pieces.size(); ++i)
              h += tuple_ws[i] * tuple_pieces[i].hessian(x);
            return h;
          },
          /*declared_convex=*/true));
    }

    // advance the tuple odometer, last position fastest
    std::size_t pos = active.size();
    while (pos > 0) {
      ++tuple[pos - 1];
      if (tuple[pos - 1] <
          static_cast<std::size_t>(problem.nonsmooth(active[pos - 1]).piece_count()))
        break;
      tuple[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }

  return MultiObjectiveProblem(problem.name() + ":ws", n, {fsum},
                               {PiecewiseMaxFunction(std::move(combined))},
                               problem.lower_bound(), problem.upper_bound());
}

RunResult weighted_sum_run(const MultiObjectiveProblem& problem, const Vector& weights,
                           const Vector& x0, const SolverConfig& config) {
  MultiObjectiveProblem scalar = make_weighted_problem(problem, weights);
  RunResult result = monpg_run(scalar, x0, config);
  result.problem = problem.name();
  result.solver = "ws";
  return result;
}

std::vector<Vector> weight_grid(Index m, int count) {
  if (count < 1) throw std::invalid_argument("weight_grid: count must be positive");
  std::vector<Vector> grid;
  if (m == 1) {
    grid.assign(static_cast<std::size_t>(count), Vector::Ones(1));
  } else if (m == 2) {
    if (count == 1) {
      grid.push_back(Vector::Constant(2, 0.5));
    } else {
      for (int i = 0; i < count; ++i) {
        const double w1 = static_cast<double>(i) / (count - 1);
        Vector w(2);
        w << w1, 1.0 - w1;
        grid.push_back(w);
      }
    }
  } else if (m == 3) {
    // lattice size closest to count-3; the three unit vectors are the
    // lattice corners, so the grid totals the lattice size
    auto lattice_size = [](int q) { return (q + 1) * (q + 2) / 2; };
    const int target = std::max(count - 3, 3);
    int best_q = 1;
    for (int q = 1; q <= 200; ++q)
      if (std::abs(lattice_size(q) - target) < std::abs(lattice_size(best_q) - target))
        best_q = q;
    const int q = best_q;
    for (int a = q; a >= 0; --a)
      for (int b = q - a; b >= 0; --b) {
        Vector w(3);
        w << static_cast<double>(a) / q, static_cast<double>(b) / q,
            static_cast<double>(q - a - b) / q;
        grid.push_back(w);
      }
  } else {
    throw UnsupportedProblem("weight_grid: only m <= 3 is supported");
  }
  return grid;
}

}  // namespace monpg

#include "monpg/subproblem.hpp"
#include <cstdlib>
#include <cstdio>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "monpg/piecewise_max.hpp"

namespace monpg {

MinimaxModel::MinimaxModel(const MultiObjectiveProblem& problem, const Vector& x, double mu,
                           EvalCounter* counter) {
  if (x.size() != problem.dimension())
    throw std::invalid_argument("MinimaxModel: x has wrong dimension");
  if (mu < 0) throw std::invalid_argument("MinimaxModel: mu must be nonnegative");
  n_ = problem.dimension();
  m_ = problem.objective_count();
  x_ = x;
  mu_ = mu;
  const Matrix reg = mu * Matrix::Identity(n_, n_);
  for (Index j = 0; j < m_; ++j) {
    grads_.push_back(problem.smooth(j).gradient(x));
    Matrix h = problem.smooth(j).hessian(x);
    hessians_mu_.push_back(0.5 * (h + h.transpose()) + reg);
    gs_.push_back(problem.nonsmooth(j));
    g_at_x_.push_back(problem.nonsmooth(j).value(x));
  }
  if (counter) {
    counter->n_grad += m_;
    counter->n_hess += m_;
  }
  finalize();
}

MinimaxModel MinimaxModel::proximal_gradient(const MultiObjectiveProblem& problem,
                                             const Vector& x, double ell, EvalCounter* counter) {
  if (x.size() != problem.dimension())
    throw std::invalid_argument("MinimaxModel: x has wrong dimension");
  if (!(ell > 0)) throw std::invalid_argument("MinimaxModel: ell must be positive");
  MinimaxModel model;
  model.n_ = problem.dimension();
  model.m_ = problem.objective_count();
  model.x_ = x;
  model.mu_ = 0.0;
  const Matrix curv = ell * Matrix::Identity(model.n_, model.n_);
  for (Index j = 0; j < model.m_; ++j) {
    model.grads_.push_back(problem.smooth(j).gradient(x));
    model.hessians_mu_.push_back(curv);
    model.gs_.push_back(problem.nonsmooth(j));
    model.g_at_x_.push_back(problem.nonsmooth(j).value(x));
  }
  if (counter) counter->n_grad += model.m_;
  model.finalize();
  return model;
}

void MinimaxModel::finalize() {
  min_eig_ = std::numeric_limits<double>::infinity();
  for (const auto& h : hessians_mu_) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    min_eig_ = std::min(min_eig_, es.eigenvalues().minCoeff());
  }
  total_pieces_ = 0;
  for (const auto& g : gs_) total_pieces_ += g.piece_count();
}

double MinimaxModel::quad_term(Index j, const Vector& d) const {
  return grads_[static_cast<size_t>(j)].dot(d) +
         0.5 * d.dot(hessians_mu_[static_cast<size_t>(j)] * d);
}

double MinimaxModel::objective_model(Index j, const Vector& d) const {
  return quad_term(j, d) + gs_[static_cast<size_t>(j)].value(x_ + d) -
         g_at_x_[static_cast<size_t>(j)];
}

double MinimaxModel::model_max(const Vector& d) const {
  double v = -std::numeric_limits<double>::infinity();
  for (Index j = 0; j < m_; ++j) v = std::max(v, objective_model(j, d));
  return v;
}

double suggest_regularization(const std::vector<Matrix>& hessians) {
  constexpr double min_eig_floor = 1e-8;
  double min_eig = std::numeric_limits<double>::infinity();
  double max_norm = 0.0;
  for (const auto& h : hessians) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.transpose()).eval(),
                                             Eigen::EigenvaluesOnly);
    min_eig = std::min(min_eig, es.eigenvalues().minCoeff());
    max_norm = std::max(max_norm, h.cwiseAbs().rowwise().sum().maxCoeff());
  }
  if (min_eig >= min_eig_floor) return 0.0;
  double mu = 1e-6 * (1.0 + max_norm);
  if (min_eig + mu < min_eig_floor) mu = min_eig_floor - min_eig;
  return mu;
}

MinimaxModel build_model(const MultiObjectiveProblem& problem, const Vector& x, double mu,
                         EvalCounter* counter) {
  return MinimaxModel(problem, x, mu, counter);
}

MinimaxModel build_model_regularized(const MultiObjectiveProblem& problem, const Vector& x,
                                     EvalCounter* counter) {
  std::vector<Matrix> hessians;
  hessians.reserve(static_cast<size_t>(problem.objective_count()));
  for (Index j = 0; j < problem.objective_count(); ++j)
    hessians.push_back(problem.smooth(j).hessian(x));
  const double mu = suggest_regularization(hessians);
  // Rebuilding through the public constructor keeps the counter consistent
  // (one gradient/Hessian batch per outer iteration).
  return MinimaxModel(problem, x, mu, counter);
}

namespace {

// Epigraph barrier state: w = (d, t), constraints q_c(d) - t <= 0, one per
// (objective, piece) pair.
struct BarrierWorkspace {
  const MinimaxModel& model;
  Index n;
  Index n_constraints;
  std::vector<std::pair<Index, Index>> constraint_of;  // (objective j, piece k)

  explicit BarrierWorkspace(const MinimaxModel& m) : model(m), n(m.dimension()) {
    for (Index j = 0; j < m.objective_count(); ++j)
      for (Index k = 0; k < m.nonsmooth(j).piece_count(); ++k) constraint_of.emplace_back(j, k);
    n_constraints = static_cast<Index>(constraint_of.size());
  }

  double constraint_value(Index c, const Vector& d) const {
    const auto [j, k] = constraint_of[static_cast<size_t>(c)];
    return model.quad_term(j, d) +
           model.nonsmooth(j).pieces[static_cast<size_t>(k)].value(model.base_point() + d) -
           model.nonsmooth_at_base(j);
  }

  // Slacks t - q_c(d); false if any is nonpositive or non-finite.
  bool slacks(const Vector& d, double t, Vector& s) const {
    s.resize(n_constraints);
    for (Index c = 0; c < n_constraints; ++c) {
      const double q = constraint_value(c, d);
      if (!std::isfinite(q)) return false;
      s[c] = t - q;
      if (!(s[c] > 0)) return false;
    }
    return true;
  }

  double barrier_value(const Vector& s, double t, double mu_b) const {
    double v = t;
    for (Index c = 0; c < n_constraints; ++c) v -= mu_b * std::log(s[c]);
    return v;
  }
};

struct NewtonResult {
  Vector d;
  double t = 0.0;
  Vector slacks;
  int iterations = 0;
  double grad_norm = 0.0;
};

// Damped Newton on the barrier function for fixed mu_b, warm-started at
// (d0, t0) which must be strictly feasible.
NewtonResult newton_center(const BarrierWorkspace& ws, const Vector& d0, double t0, double mu_b,
                           double inner_tol, int max_iters) {
  const Index n = ws.n;
  NewtonResult res;
  res.d = d0;
  res.t = t0;

  Vector s;
  if (!ws.slacks(res.d, res.t, s)) throw std::logic_error("barrier: infeasible warm start");

  Vector grad(n + 1);
  Matrix hess(n + 1, n + 1);
  Vector z(n + 1);

  for (int it = 0; it < max_iters; ++it) {
    // gradient and Hessian of B(d, t) = t - mu_b * sum log(t - q_c(d))
    grad.setZero();
    grad[n] = 1.0;
    hess.setZero();
    const Vector y = ws.model.base_point() + res.d;
    for (Index c = 0; c < ws.n_constraints; ++c) {
      const auto [j, k] = ws.constraint_of[static_cast<size_t>(c)];
      const auto& piece = ws.model.nonsmooth(j).pieces[static_cast<size_t>(k)];
      const double nu = mu_b / s[c];
      const Vector gq = ws.model.smooth_gradient(j) + ws.model.curvature(j) * res.d +
                        piece.gradient(y);
      grad.head(n) += nu * gq;
      grad[n] -= nu;
      z.head(n) = gq;
      z[n] = -1.0;
      hess += (nu / s[c]) * (z * z.transpose());
      hess.topLeftCorner(n, n) += nu * (ws.model.curvature(j) + piece.hessian(y));
    }

    Vector step = -grad;
    Eigen::LDLT<Matrix> ldlt(hess);
    if (ldlt.info() == Eigen::Success) {
      step = ldlt.solve(-grad);
    } else {
      Eigen::LDLT<Matrix> ridged(hess + 1e-10 * hess.diagonal().maxCoeff() *
                                            Matrix::Identity(n + 1, n + 1));
      step = ridged.solve(-grad);
    }

    const double decrement_sq = -grad.dot(step);
    res.grad_norm = grad.lpNorm<Eigen::Infinity>();
    res.iterations = it;
    if (decrement_sq <= 2.0 * inner_tol && decrement_sq >= 0) break;
    if (!step.allFinite()) break;

    // backtrack to strict feasibility with a fraction-to-boundary guard (no
    // step may consume more than 99% of any slack), then Armijo on the
    // barrier; the guard keeps cold iterates off the boundary crawl
    const double b0 = ws.barrier_value(s, res.t, mu_b);
    const double slope = grad.dot(step);
    double alpha = 1.0;
    Vector d_trial;
    double t_trial = 0.0;
    Vector s_trial;
    bool accepted = false;
    for (int ls = 0; ls < 80; ++ls) {
      d_trial = res.d + alpha * step.head(n);
      t_trial = res.t + alpha * step[n];
      if (ws.slacks(d_trial, t_trial, s_trial) &&
          (s_trial.array() >= 0.01 * s.array()).all() &&
          ws.barrier_value(s_trial, t_trial, mu_b) <= b0 + 1e-4 * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) break;  // stalled; caller judges by the KKT residual
    res.d = d_trial;
    res.t = t_trial;
    s = s_trial;
    res.iterations = it + 1;
  }
  res.slacks = s;
  return res;
}

// Keeps a maximal subset of `active` whose KKT columns (grad q_c(d); 1) are
// linearly independent, chosen by pivoted QR. Tied pieces at a kink make the
// full system singular; a Caratheodory-style basic subset suffices for the
// certificate.
std::vector<Index> prune_to_independent(const BarrierWorkspace& ws, const Vector& d,
                                        const std::vector<Index>& active) {
  const Index n = ws.n;
  const Index na = static_cast<Index>(active.size());
  Matrix w(n + 1, na);
  const Vector y = ws.model.base_point() + d;
  for (Index a = 0; a < na; ++a) {
    const auto [j, k] = ws.constraint_of[static_cast<size_t>(active[static_cast<size_t>(a)])];
    w.col(a).head(n) = ws.model.smooth_gradient(j) + ws.model.curvature(j) * d +
                       ws.model.nonsmooth(j).pieces[static_cast<size_t>(k)].gradient(y);
    w(n, a) = 1.0;
  }
  Eigen::ColPivHouseholderQR<Matrix> qr(w);
  qr.setThreshold(1e-10);
  const Index rank = qr.rank();
  std::vector<Index> kept;
  for (Index i = 0; i < rank; ++i)
    kept.push_back(active[static_cast<size_t>(qr.colsPermutation().indices()[i])]);
  std::sort(kept.begin(), kept.end());
  return kept;
}

// Active-set Newton polish. The barrier identifies which constraints bind;
// with that set fixed, the KKT equations
//   sum_{c in A} nu_c grad q_c(d) = 0,  sum nu_c = 1,  q_c(d) = t  (c in A)
// are a smooth square system in (d, t, nu_A) that plain Newton solves to
// machine precision from the barrier warm start. Returns false when the
// guess is wrong (singular system, negative multipliers, no convergence).
bool polish_active_set(const BarrierWorkspace& ws, const Vector& d0, double t0,
                       const std::vector<Index>& active, const Vector& nu0, Vector& d_out,
                       double& t_out, Vector& nu_out) {
  const Index n = ws.n;
  const Index na = static_cast<Index>(active.size());
  const Index dim = n + 1 + na;

  Vector z(dim);
  z.head(n) = d0;
  z[n] = t0;
  z.tail(na) = nu0;

  Vector residual(dim);
  Matrix jac(dim, dim);

  // Constraint values are differences of quantities of this magnitude, so
  // the residual cannot be driven below roughly eps * value_scale; accept a
  // stalled iterate as long as it sits near that floor.
  double value_scale = 1.0 + std::abs(t0);
  for (Index a = 0; a < na; ++a) {
    const auto [j, k] =
        ws.constraint_of[static_cast<size_t>(active[static_cast<size_t>(a)])];
    value_scale = std::max(value_scale, std::abs(ws.model.nonsmooth_at_base(j)));
    value_scale = std::max(
        value_scale,
        std::abs(ws.model.nonsmooth(j).pieces[static_cast<size_t>(k)].value(
            ws.model.base_point() + d0)));
  }
  const double target = 1e-14 * value_scale;
  const double accept_cap = 1e-9 * value_scale;

  Vector best_z = z;
  double best_norm = std::numeric_limits<double>::infinity();
  int stale = 0;
  for (int it = 0; it < 30; ++it) {
    const Vector d = z.head(n);
    const double t = z[n];
    const Vector nu = z.tail(na);
    const Vector y = ws.model.base_point() + d;

    residual.setZero();
    jac.setZero();
    residual[n] = -1.0;
    for (Index a = 0; a < na; ++a) {
      const Index c = active[static_cast<size_t>(a)];
      const auto [j, k] = ws.constraint_of[static_cast<size_t>(c)];
      const auto& piece = ws.model.nonsmooth(j).pieces[static_cast<size_t>(k)];
      const Vector gq =
          ws.model.smooth_gradient(j) + ws.model.curvature(j) * d + piece.gradient(y);
      residual.head(n) += nu[a] * gq;
      residual[n] += nu[a];
      residual[n + 1 + a] = ws.constraint_value(c, d) - t;

      jac.topLeftCorner(n, n) += nu[a] * (ws.model.curvature(j) + piece.hessian(y));
      jac.block(0, n + 1 + a, n, 1) = gq;
      jac(n, n + 1 + a) = 1.0;
      jac.block(n + 1 + a, 0, 1, n) = gq.transpose();
      jac(n + 1 + a, n) = -1.0;
    }

    const double norm = residual.lpNorm<Eigen::Infinity>();
    if (norm < best_norm) {
      best_norm = norm;
      best_z = z;
      stale = 0;
    } else if (++stale >= 4) {
      break;  // stalled at the evaluation noise floor
    }
    if (norm <= target) break;

    Eigen::FullPivLU<Matrix> lu(jac);
    if (!lu.isInvertible()) {
      if (std::getenv("MONPG_DEBUG_POLISH"))
        fprintf(stderr, "    polish: singular jacobian at it %d (norm %g)\n", it, norm);
      return false;
    }
    const Vector step = lu.solve(-residual);
    if (!step.allFinite()) return false;
    z += step;
  }
  if (!(best_norm <= accept_cap)) {
    if (std::getenv("MONPG_DEBUG_POLISH"))
      fprintf(stderr, "    polish: best_norm %g > cap %g\n", best_norm, accept_cap);
    return false;
  }

  const Vector nu = best_z.tail(na);
  if ((nu.array() < -1e-10).any()) {
    if (std::getenv("MONPG_DEBUG_POLISH"))
      fprintf(stderr, "    polish: negative nu %g\n", nu.minCoeff());
    return false;
  }
  d_out = best_z.head(n);
  t_out = best_z[n];
  nu_out = nu.cwiseMax(0.0);
  const double total = nu_out.sum();
  if (!(total > 0)) return false;
  nu_out /= total;
  return true;
}

// Builds the solution certificate (lambda, xi, t, kkt) from a direction and
// per-constraint multipliers.
SubproblemSolution build_certificate(const BarrierWorkspace& ws, const Vector& d,
                                     const std::vector<std::pair<Index, double>>& multipliers,
                                     double mu_b, int total_newton) {
  const MinimaxModel& model = ws.model;
  const Index m = model.objective_count();
  SubproblemSolution sol;
  sol.d = d;
  sol.newton_iterations = total_newton;
  sol.barrier_mu_final = mu_b;

  Vector lambda_raw = Vector::Zero(m);
  std::vector<Vector> xi_weighted(static_cast<size_t>(m), Vector::Zero(model.dimension()));
  const Vector y = model.base_point() + d;
  for (const auto& [c, nu] : multipliers) {
    const auto [j, k] = ws.constraint_of[static_cast<size_t>(c)];
    lambda_raw[j] += nu;
    xi_weighted[static_cast<size_t>(j)] +=
        nu * model.nonsmooth(j).pieces[static_cast<size_t>(k)].gradient(y);
  }
  sol.xi.resize(static_cast<size_t>(m));
  for (Index j = 0; j < m; ++j) {
    if (lambda_raw[j] > 1e-300) {
      sol.xi[static_cast<size_t>(j)] = xi_weighted[static_cast<size_t>(j)] / lambda_raw[j];
    } else {
      sol.xi[static_cast<size_t>(j)] = subgradient_g(model.nonsmooth(j), y).xi;
    }
  }
  // project onto the simplex: the multipliers are nonnegative by
  // construction, so this is just a normalization
  sol.lambda = lambda_raw / lambda_raw.sum();

  sol.t = model.model_max(d);
  const double active_tol = 1e-7 * (1.0 + std::abs(sol.t));
  for (Index j = 0; j < m; ++j)
    if (model.objective_model(j, d) >= sol.t - active_tol)
      sol.active.push_back(static_cast<int>(j));
  sol.kkt = kkt_residual(model, sol);
  return sol;
}

SubproblemSolution extract_solution(const BarrierWorkspace& ws, const NewtonResult& centered,
                                    double mu_b, int total_newton) {
  std::vector<std::pair<Index, double>> multipliers;
  for (Index c = 0; c < ws.n_constraints; ++c)
    multipliers.emplace_back(c, mu_b / centered.slacks[c]);
  return build_certificate(ws, centered.d, multipliers, mu_b, total_newton);
}

}  // namespace

SubproblemSolution solve_subproblem(const MinimaxModel& model, double tol,
                                    SubproblemTrace* trace) {
  if (!(tol > 0)) throw std::invalid_argument("solve_subproblem: tol must be positive");
  if (!(model.min_curvature_eigenvalue() > 0))
    throw std::invalid_argument(
        "solve_subproblem: model curvature is not positive definite; regularize first");

  BarrierWorkspace ws(model);
  constexpr int max_newton_per_stage = 200;
  constexpr double inner_tol = 1e-10;

  // d = 0, t = 1 is strictly feasible: every q_c(0) = psi(x) - g(x) <= 0.
  Vector d = Vector::Zero(model.dimension());
  double t = 1.0;

  // Start the schedule at the problem's own scale: with mu_b far below the
  // constraint range the first center is a hard cold-start Newton problem.
  // The scale reads off the epigraph constraints at d = 0 (gradient size and
  // how far below t = 1 they sit).
  double scale = 1.0;
  {
    const Vector& y = model.base_point();
    for (Index c = 0; c < ws.n_constraints; ++c) {
      const auto [j, k] = ws.constraint_of[static_cast<size_t>(c)];
      const Vector gq = model.smooth_gradient(j) +
                        model.nonsmooth(j).pieces[static_cast<size_t>(k)].gradient(y);
      scale = std::max({scale, gq.lpNorm<Eigen::Infinity>(), -ws.constraint_value(c, d)});
    }
  }
  double mu_b = 1.0;
  while (mu_b < scale) mu_b *= 10.0;
  // mu_b decays by 10 each stage; 14 stages below 1 exhaust double precision
  const int max_stages = 14 + static_cast<int>(std::round(std::log10(mu_b)));
  int total_newton = 0;

  SubproblemSolution best;
  bool have_best = false;

  for (int stage = 0; stage < max_stages; ++stage) {
    NewtonResult centered = newton_center(ws, d, t, mu_b, inner_tol, max_newton_per_stage);
    total_newton += centered.iterations;
    d = centered.d;
    t = centered.t;

    SubproblemSolution sol = extract_solution(ws, centered, mu_b, total_newton);
    bool polished = false;

    // Once the barrier separates binding from slack constraints, a Newton
    // polish on the active-set KKT system reaches machine precision. The
    // initial guess comes from the barrier multipliers; a constraint that
    // rises above the polished t reveals a too-small set and is added for
    // another attempt (plain active-set iteration). Degenerate sets (tied
    // pieces at a kink) are rank-pruned first.
    std::vector<Index> active;
    for (Index c = 0; c < ws.n_constraints; ++c)
      if (mu_b / centered.slacks[c] >= std::sqrt(mu_b)) active.push_back(c);

    const bool dbg = std::getenv("MONPG_DEBUG_POLISH") != nullptr;
    for (int attempt = 0; attempt < 4 && !active.empty(); ++attempt) {
      const std::vector<Index> pruned = prune_to_independent(ws, centered.d, active);
      if (dbg)
        fprintf(stderr, "stage mu_b=%g attempt %d: active=%zu pruned=%zu\n", mu_b, attempt,
                active.size(), pruned.size());
      if (pruned.empty()) break;
      Vector nu0(static_cast<Index>(pruned.size()));
      for (std::size_t a = 0; a < pruned.size(); ++a)
        nu0[static_cast<Index>(a)] = mu_b / centered.slacks[pruned[a]];
      nu0 /= nu0.sum();

      Vector d_p;
      double t_p = 0.0;
      Vector nu_p;
      if (!polish_active_set(ws, centered.d, centered.t, pruned, nu0, d_p, t_p, nu_p)) {
        if (dbg) fprintf(stderr, "  polish newton failed\n");
        break;
      }

      Index worst_c = -1;
      double worst = -std::numeric_limits<double>::infinity();
      for (Index cc = 0; cc < ws.n_constraints; ++cc) {
        const double q = ws.constraint_value(cc, d_p);
        if (q > worst) {
          worst = q;
          worst_c = cc;
        }
      }
      if (worst <= t_p + 1e-9 * (1.0 + std::abs(t_p))) {
        std::vector<std::pair<Index, double>> multipliers;
        for (std::size_t a = 0; a < pruned.size(); ++a)
          multipliers.emplace_back(pruned[a], nu_p[static_cast<Index>(a)]);
        SubproblemSolution refined =
            build_certificate(ws, d_p, multipliers, mu_b, total_newton);
        if (dbg)
          fprintf(stderr, "  polish ok: refined kkt=%g (raw %g) t_p=%g\n", refined.kkt, sol.kkt,
                  t_p);
        if (refined.kkt < sol.kkt) {
          sol = std::move(refined);
          polished = true;
        }
        break;
      }
      if (dbg)
        fprintf(stderr, "  violator c=%lld worst=%g t_p=%g\n",
                static_cast<long long>(worst_c), worst, t_p);
      if (std::find(active.begin(), active.end(), worst_c) != active.end()) break;
      active.push_back(worst_c);
      std::sort(active.begin(), active.end());
    }

    if (trace)
      trace->stages.push_back({mu_b, centered.iterations, centered.grad_norm, sol.kkt});
    if (!have_best || sol.kkt < best.kkt) {
      best = sol;
      have_best = true;
    }
    // A polished certificate uses exact subgradients of the active pieces, so
    // its KKT residual alone certifies optimality; the raw barrier
    // certificate additionally needs the duality-gap estimate to vouch for
    // its epsilon-subgradients.
    const double gap_estimate = static_cast<double>(ws.n_constraints) * mu_b;
    if (sol.kkt <= tol && (polished || gap_estimate <= tol / 10.0)) return sol;
    mu_b /= 10.0;
  }
  throw SubproblemFailure("solve_subproblem: barrier stage cap exceeded", best);
}

double kkt_residual(const MinimaxModel& model, const SubproblemSolution& solution) {
  const Index m = model.objective_count();
  if (solution.lambda.size() != m || solution.xi.size() != static_cast<size_t>(m))
    throw std::invalid_argument("kkt_residual: multiplier shape mismatch");
  const double simplex_defect = std::abs(solution.lambda.sum() - 1.0);
  if (simplex_defect > 1e-8 || (solution.lambda.array() < -1e-8).any())
    throw std::invalid_argument("kkt_residual: lambda is not on the simplex");

  Vector stationarity = Vector::Zero(model.dimension());
  double complementarity = 0.0;
  double feasibility = 0.0;
  for (Index j = 0; j < m; ++j) {
    stationarity += solution.lambda[j] *
                    (model.smooth_gradient(j) + model.curvature(j) * solution.d +
                     solution.xi[static_cast<size_t>(j)]);
    const double qj = model.objective_model(j, solution.d);
    complementarity = std::max(complementarity, solution.lambda[j] * std::abs(qj - solution.t));
    feasibility = std::max(feasibility, qj - solution.t);
  }
  return std::max({stationarity.lpNorm<Eigen::Infinity>(), complementarity, feasibility,
                   simplex_defect});
}

bool is_critical(const MultiObjectiveProblem& problem, const Vector& x, double eps,
                 double subproblem_tol) {
  if (!(eps > 0)) throw std::invalid_argument("is_critical: eps must be positive");
  MinimaxModel model = build_model_regularized(problem, x);
  SubproblemSolution sol = solve_subproblem(model, subproblem_tol);
  return sol.d.norm() < eps;
}

}  // namespace monpg

// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion pins its tolerances in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "monpg/experiment.hpp"
#include "monpg/metrics.hpp"
#include "monpg/rng.hpp"
#include "monpg/solvers.hpp"
#include "monpg/subproblem.hpp"
#include "monpg/test_problems.hpp"
#include "oracles.hpp"
#include "test_instances.hpp"

using namespace monpg;
namespace fs = std::filesystem;

namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

struct Criterion {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Example 1 golden trajectory
Criterion criterion_golden_trajectory() {
  Criterion c;
  const auto p1 = make_p1();
  const Vector x0 = vec2(3.7990, 1.8743);

  const auto t_begin = std::chrono::steady_clock::now();
  const Vector f0 = eval_objectives(p1, x0);
  const MinimaxModel model0 = build_model_regularized(p1, x0);
  const SubproblemSolution sol0 = solve_subproblem(model0, 1e-8);
  const RunResult run = monpg_run(p1, x0, SolverConfig{});
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_begin).count();

  c.require(std::abs(f0[0] - 250.0622) <= 1e-3 && std::abs(f0[1] - 118.4027) <= 1e-3,
            "F(x0) = (" + fmt(f0[0]) + "," + fmt(f0[1]) + ") != (250.0622,118.4027) @1e-3");
  c.require((sol0.d - vec2(-0.6444, 0.9601)).lpNorm<Eigen::Infinity>() <= 1e-2,
            "d0 = (" + fmt(sol0.d[0]) + "," + fmt(sol0.d[1]) + ") != (-0.6444,0.9601) @1e-2");
  c.require(std::abs(sol0.t - (-57.4460)) <= 0.5, "t0 = " + fmt(sol0.t) + " != -57.4460 @0.5");
  c.require(!run.trajectory.empty() && run.trajectory[0].alpha == 1.0, "alpha0 != 1");
  if (run.trajectory.size() >= 2) {
    const Vector& x1 = run.trajectory[1].x;
    const Vector& f1 = run.trajectory[1].f;
    c.require((x1 - vec2(3.1546, 2.8344)).lpNorm<Eigen::Infinity>() <= 1e-2,
              "x1 = (" + fmt(x1[0]) + "," + fmt(x1[1]) + ") != (3.1546,2.8344) @1e-2");
    c.require(std::abs(f1[0] - 196.2014) <= 1e-1 && std::abs(f1[1] - 52.1993) <= 1e-1,
              "F(x1) off the printed value @1e-1");
  } else {
    c.require(false, "run recorded fewer than 2 steps");
  }
  c.require(run.termination == Termination::Critical, "run did not reach |d| < eps");
  c.require(run.counter.n_it <= 10, "took more than 10 iterations");
  c.require((run.final_x - vec2(3, 3)).lpNorm<Eigen::Infinity>() <= 1e-2,
            "final point (" + fmt(run.final_x[0]) + "," + fmt(run.final_x[1]) +
                ") not within 1e-2 of (3,3)");
  c.require(elapsed < 1.0, "runtime " + fmt(elapsed) + "s >= 1s");
  return c;
}

// ---------------------------------------------------------------------------
// 2. Criticality certificate at (3,3)
Criterion criterion_criticality_certificate() {
  Criterion c;
  const auto p1 = make_p1();
  const Vector x = vec2(3, 3);
  const Vector w = vec2(0.18637886, 0.81362114);

  const Vector grad_f1 = p1.smooth(0).gradient(x);
  const Vector grad_f2 = p1.smooth(1).gradient(x);
  const Vector xi1 = subgradient_g(p1.nonsmooth(0), x).xi;  // unique active piece

  // both pieces of g2 are active at (3,3); search the segment between their
  // gradients for the combination that closes the weighted sum
  const Vector a = p1.nonsmooth(1).pieces[0].gradient(x);
  const Vector b = p1.nonsmooth(1).pieces[1].gradient(x);
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 1000000; ++i) {
    const double theta = static_cast<double>(i) / 1000000.0;
    const Vector xi2 = theta * a + (1.0 - theta) * b;
    const double norm = (w[0] * (grad_f1 + xi1) + w[1] * (grad_f2 + xi2)).norm();
    best = std::min(best, norm);
  }
  c.require(best <= 1e-2,
            "min over the subgradient segment is " + fmt(best) + " > 1e-2");
  c.require(is_critical(p1, x, 1e-4), "is_critical((3,3), 1e-4) is false");
  return c;
}

// ---------------------------------------------------------------------------
// 3. Descent invariant suite
struct NamedSpec {
  SolverSpec spec;
  bool needs_sigma_checks;
};

Criterion criterion_descent_invariants() {
  Criterion c;
  std::vector<MultiObjectiveProblem> problems;
  problems.push_back(make_p1());
  problems.push_back(make_p1_gb());
  problems.push_back(make_gh_quad());
  for (int i = 0; i < 5; ++i)
    problems.push_back(make_synthetic_quadratic(2, 2, 1.0, 7000 + i));

  const SolverConfig config;
  int violations = 0;
  int failures = 0;
  long steps_checked = 0;

  auto check_run = [&](const RunResult& run, double sigma, double lipschitz) {
    if (run.termination == Termination::LineSearchStall ||
        run.termination == Termination::SubproblemFailure) {
      ++failures;
      return;
    }
    const double alpha_floor =
        (sigma > 0 && lipschitz > 0)
            ? std::min(1.0, sigma * (1.0 - config.beta) * config.backtrack_ratio / lipschitz)
            : 0.0;
    for (std::size_t k = 0; k < run.trajectory.size(); ++k) {
      const auto& step = run.trajectory[k];
      const Vector& f_next =
          k + 1 < run.trajectory.size() ? run.trajectory[k + 1].f : run.final_f;
      ++steps_checked;
      if (!(step.t <= 0.0)) ++violations;
      for (Index j = 0; j < f_next.size(); ++j)
        if (!(f_next[j] <= step.f[j] + config.beta * step.alpha * step.t)) ++violations;
      if (sigma > 0) {
        if (!(step.t <= -0.5 * sigma * step.d.squaredNorm() + 1e-6)) ++violations;
        if (!(step.alpha >= alpha_floor)) ++violations;
      }
    }
  };

  for (const auto& problem : problems) {
    const double sigma = problem.has_declared_sigma() ? problem.declared_sigma() : 0.0;
    const double lipschitz =
        problem.has_declared_lipschitz() ? problem.declared_lipschitz() : 0.0;
    const auto weights = weight_grid(problem.objective_count(), 20);
    for (int i = 0; i < 20; ++i) {
      SplitMix64 stream(stream_seed(2026, problem.name(), "acceptance", i));
      const Vector x0 = stream.next_in_box(problem.lower_bound(), problem.upper_bound());
      check_run(monpg_run(problem, x0, config), sigma, lipschitz);
      check_run(mopg_run(problem, x0, config), sigma, lipschitz);
      const MultiObjectiveProblem scalar =
          make_weighted_problem(problem, weights[static_cast<std::size_t>(i)]);
      const double ws_sigma = scalar.has_declared_sigma() ? scalar.declared_sigma() : 0.0;
      const double ws_lip =
          scalar.has_declared_lipschitz() ? scalar.declared_lipschitz() : 0.0;
      check_run(monpg_run(scalar, x0, config), ws_sigma, ws_lip);
    }
  }
  c.require(violations == 0, std::to_string(violations) + " invariant violations");
  c.require(failures == 0, std::to_string(failures) + " runs failed");
  c.detail += (c.ok ? std::to_string(steps_checked) + " steps checked" : "");
  return c;
}

// ---------------------------------------------------------------------------
// 4. Subproblem oracle equivalence
Criterion criterion_subproblem_oracle() {
  Criterion c;
  const auto t_begin = std::chrono::steady_clock::now();
  int bad_t = 0, bad_kkt = 0, bad_value = 0;

  for (int i = 0; i < 50; ++i) {
    const auto problem = test_instances::random_strongly_convex(1, 2, 40000 + i);
    SplitMix64 rng(41000 + i);
    const Vector x = rng.next_in_box(problem.lower_bound(), problem.upper_bound());
    const MinimaxModel model = build_model_regularized(problem, x);
    const SubproblemSolution sol = solve_subproblem(model, 1e-8);
    const auto grid = oracles::grid_min_1d(
        [&](double d) { return model.model_max(Vector::Constant(1, d)); }, -5, 5, 1e-3);
    if (!(std::abs(sol.t - grid.value) <= 1e-3)) ++bad_t;
    if (!(sol.kkt <= 1e-8)) ++bad_kkt;
    if (!(model.model_max(sol.d) <= grid.value + 1e-6)) ++bad_value;
  }
  for (int i = 0; i < 25; ++i) {
    const auto problem = test_instances::random_strongly_convex(2, 2, 42000 + i);
    SplitMix64 rng(43000 + i);
    const Vector x = rng.next_in_box(problem.lower_bound(), problem.upper_bound());
    const MinimaxModel model = build_model_regularized(problem, x);
    const SubproblemSolution sol = solve_subproblem(model, 1e-8);
    const auto grid =
        oracles::grid_min_2d([&](const Vector& d) { return model.model_max(d); }, -5, 5);
    if (!(std::abs(sol.t - grid.value) <= 1e-3)) ++bad_t;
    if (!(sol.kkt <= 1e-8)) ++bad_kkt;
    if (!(model.model_max(sol.d) <= grid.value + 1e-6)) ++bad_value;
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_begin).count();

  c.require(bad_t == 0, std::to_string(bad_t) + " instances off the grid value @1e-3");
  c.require(bad_kkt == 0, std::to_string(bad_kkt) + " instances with kkt > 1e-8");
  c.require(bad_value == 0,
            std::to_string(bad_value) + " instances where the grid beat the solver");
  c.require(elapsed < 30.0, "runtime " + fmt(elapsed) + "s >= 30s");
  if (c.ok) c.detail = "75 instances, " + fmt(elapsed) + "s";
  return c;
}

// ---------------------------------------------------------------------------
// 5. Metric oracles
Criterion criterion_metric_oracles() {
  Criterion c;

  // delta spread: uniform front -> 2/(N+1)
  for (int n : {4, 9}) {
    std::vector<FrontPoint> pts;
    for (int i = 0; i < n; ++i)
      pts.push_back({Vector::Zero(1), vec2(i, n - 1 - i)});
    Front fr(std::move(pts), "p", "s", 0);
    SpreadExtremes ex;
    ex.best = vec2(-1, -1);
    ex.worst = vec2(n, n);
    c.require(std::abs(delta_spread(fr, ex) - 2.0 / (n + 1)) <= 1e-12,
              "uniform-front delta != 2/(N+1) @1e-12");
  }
  {
    // {0,1,4} with tight extremes -> 0.5
    std::vector<FrontPoint> pts;
    for (double v : {0.0, 1.0, 4.0}) pts.push_back({Vector::Zero(1), vec2(v, 4.0 - v)});
    Front fr(std::move(pts), "p", "s", 0);
    SpreadExtremes ex;
    ex.best = vec2(0, 0);
    ex.worst = vec2(4, 4);
    c.require(std::abs(delta_spread(fr, ex) - 0.5) <= 1e-12, "{0,1,4} delta != 0.5 @1e-12");
  }

  // hypervolume of {(0.5, 0.5)} in the unit box
  {
    Front fr({{Vector::Zero(1), vec2(0.5, 0.5)}}, "p", "s", 0);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const double hv = hypervolume_mc(fr, vec2(1, 1), vec2(0, 0), 10000, seed);
      c.require(std::abs(hv - 0.25) <= 0.02,
                "hv = " + fmt(hv) + " outside 0.25 +- 0.02 (seed " + std::to_string(seed) + ")");
    }
  }

  // performance profile vs the direct definition
  {
    SplitMix64 rng(2025);
    for (int trial = 0; trial < 20; ++trial) {
      Matrix metric(10, 3);
      for (Index p = 0; p < 10; ++p)
        for (Index s = 0; s < 3; ++s) metric(p, s) = rng.next_in(0.5, 30.0);
      const bool invert = trial % 2 == 1;
      const auto curves = performance_profile(metric, {"a", "b", "c"}, invert);
      for (Index s = 0; s < 3; ++s)
        for (const auto& [tau, rho] : curves[static_cast<std::size_t>(s)].breakpoints)
          c.require(rho == oracles::direct_profile_value(metric, s, tau, invert),
                    "profile mismatch vs direct recomputation");
    }
  }

  // evaluation accounting
  {
    EvalCounter counter;
    counter.n_f = 10;
    counter.n_it = 3;
    c.require(eval_accounting(counter, 2, AccountingMethod::Monpg) == 25, "monpg accounting");
    c.require(eval_accounting(counter, 2, AccountingMethod::WeightedSum) == 25,
              "ws accounting");
    c.require(eval_accounting(counter, 2, AccountingMethod::Mopg) == 16, "mopg accounting");
    counter.n_it = 0;
    c.require(eval_accounting(counter, 9, AccountingMethod::Monpg) == 10,
              "zero-iteration accounting");
  }
  return c;
}

// ---------------------------------------------------------------------------
// 6. Paper-scale comparison: iteration profiles
Criterion criterion_iteration_profiles() {
  Criterion c;
  std::vector<MultiObjectiveProblem> problems;
  problems.push_back(make_p1());
  problems.push_back(make_p1_gb());
  problems.push_back(make_gh_quad());
  for (const auto& name : registry().names())
    if (name.rfind("quadg-", 0) == 0) problems.push_back(registry().make(name));

  const Index n_problems = static_cast<Index>(problems.size());
  Matrix iterations(n_problems, 2);
  for (Index p = 0; p < n_problems; ++p) {
    const auto& problem = problems[static_cast<std::size_t>(p)];
    const auto newton = multi_start(problem, SolverSpec::monpg(), 20, 6001, 4);
    const auto proximal = multi_start(problem, SolverSpec::mopg(), 20, 6001, 4);
    std::int64_t it_newton = 0, it_proximal = 0;
    for (const auto& r : newton.runs) it_newton += r.counter.n_it;
    for (const auto& r : proximal.runs) it_proximal += r.counter.n_it;
    iterations(p, 0) = static_cast<double>(it_newton);
    iterations(p, 1) = static_cast<double>(it_proximal);
  }
  const auto curves = performance_profile(iterations, {"monpg", "mopg"});
  const double rho_newton = curves[0].value_at(1.0);
  const double rho_proximal = curves[1].value_at(1.0);
  c.require(rho_newton >= rho_proximal,
            "rho_monpg(1) = " + fmt(rho_newton) + " < rho_mopg(1) = " + fmt(rho_proximal));
  c.require(rho_newton >= 0.7, "rho_monpg(1) = " + fmt(rho_newton) + " < 0.7");
  if (c.ok)
    c.detail = "rho_monpg(1) = " + fmt(rho_newton) + ", rho_mopg(1) = " + fmt(rho_proximal) +
               " over " + std::to_string(n_problems) + " problems";
  return c;
}

// ---------------------------------------------------------------------------
// 7. Determinism of the file-producing commands
std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Criterion criterion_determinism() {
  Criterion c;
  const fs::path base = fs::temp_directory_path() / "monpg_acceptance";
  fs::remove_all(base);

  const auto p1 = make_p1();
  const int rc1 = run_pareto(p1, SolverSpec::monpg(), 30, 17, base / "a", 1);
  const int rc2 = run_pareto(p1, SolverSpec::monpg(), 30, 17, base / "b", 4);
  c.require(rc1 == 0 && rc2 == 0, "pareto runs failed");
  for (const char* file : {"front_P1_monpg.csv", "runs_P1_monpg.csv"}) {
    c.require(!slurp(base / "a" / file).empty(), std::string(file) + " missing");
    c.require(slurp(base / "a" / file) == slurp(base / "b" / file),
              std::string(file) + " differs across jobs");
  }

  ExperimentConfig config;
  config.problems = {"P1", "gH-quad"};
  config.solvers = {SolverSpec::monpg(), SolverSpec::mopg()};
  config.n_starts = 10;
  config.seed = 23;
  config.metrics = {"delta", "iterations", "evals"};
  config.jobs = 1;
  config.out_dir = base / "c1";
  c.require(run_compare(config, true) == 0, "profile run 1 failed");
  config.jobs = 4;
  config.out_dir = base / "c2";
  c.require(run_compare(config, true) == 0, "profile run 2 failed");
  for (const char* file :
       {"metrics.csv", "refpoints.csv", "profile_iterations_monpg_vs_mopg.csv",
        "profile_delta_monpg_vs_mopg.csv", "front_P1_monpg.csv", "runs_gH-quad_mopg.csv"}) {
    c.require(!slurp(base / "c1" / file).empty(), std::string(file) + " missing");
    c.require(slurp(base / "c1" / file) == slurp(base / "c2" / file),
              std::string(file) + " differs across jobs");
  }
  return c;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<Criterion()> run;
  };
  const std::vector<Entry> criteria = {
      {"Example 1 golden trajectory", criterion_golden_trajectory},
      {"criticality certificate at (3,3)", criterion_criticality_certificate},
      {"descent invariant suite", criterion_descent_invariants},
      {"subproblem oracle equivalence", criterion_subproblem_oracle},
      {"metric oracles", criterion_metric_oracles},
      {"iteration-count profiles", criterion_iteration_profiles},
      {"deterministic outputs", criterion_determinism},
  };

  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion result;
    try {
      result = criteria[i].run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    all_ok = all_ok && result.ok;
    std::cout << (result.ok ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": "
              << criteria[i].name;
    if (!result.detail.empty()) std::cout << " (" << result.detail << ")";
    std::cout << "\n";
  }
  return all_ok ? 0 : 1;
}

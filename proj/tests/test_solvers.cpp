#include <doctest.h>

#include "test_support.hpp"

#include <cmath>

#include "monpg/errors.hpp"
#include "monpg/rng.hpp"
#include "monpg/solvers.hpp"
#include "monpg/test_problems.hpp"
#include "test_instances.hpp"

using namespace monpg;

namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

const Vector kX0 = vec2(3.7990, 1.8743);

MultiObjectiveProblem scalar_half_square() {
  SmoothFunction f;
  f.n = 1;
  f.value = [](const Vector& x) { return 0.5 * x[0] * x[0]; };
  f.gradient = [](const Vector& x) { return x; };
  f.hessian = [](const Vector&) { return Matrix::Identity(1, 1).eval(); };
  f.strong_convexity = 1.0;
  f.grad_lipschitz = 1.0;
  return MultiObjectiveProblem("half-square", 1, {f}, {PiecewiseMaxFunction::zero(1)},
                               Vector::Constant(1, -2.0), Vector::Constant(1, 2.0));
}

// Re-checks eq. (14) on a recorded run using the same float expression the
// line search used.
void check_monotone_descent(const RunResult& run, double beta) {
  for (std::size_t k = 0; k < run.trajectory.size(); ++k) {
    const auto& step = run.trajectory[k];
    const Vector& f_next =
        k + 1 < run.trajectory.size() ? run.trajectory[k + 1].f : run.final_f;
    CHECK(step.t < 0.0);
    for (Index j = 0; j < f_next.size(); ++j)
      CHECK(f_next[j] <= step.f[j] + beta * step.alpha * step.t);
  }
}

}  // namespace

TEST_CASE("armijo accepts the unit step on the worked example") {
  const auto p1 = make_p1();
  const auto sol = solve_subproblem(build_model_regularized(p1, kX0), 1e-8);
  SolverConfig config;
  const double alpha = armijo_search(p1, kX0, sol.d, sol.t, config);
  CHECK(alpha == 1.0);
}

TEST_CASE("armijo on the scalar parabola") {
  const auto p = scalar_half_square();
  SolverConfig config;  // beta = 0.1, r = 0.5

  // d = -1 at x = 1 with t = -1/2: unit step lands at the minimum
  CHECK(armijo_search(p, Vector::Ones(1), -Vector::Ones(1), -0.5, config) == 1.0);

  // deliberately bad d = -10: first accepted step is 0.125
  CHECK(armijo_search(p, Vector::Ones(1), Vector::Constant(1, -10.0), -0.5, config) == 0.125);
}

TEST_CASE("armijo rejects bad preconditions and stalls out") {
  const auto p = scalar_half_square();
  SolverConfig config;
  CHECK_THROWS_AS(armijo_search(p, Vector::Ones(1), -Vector::Ones(1), 0.5, config),
                  std::invalid_argument);  // t >= 0
  CHECK_THROWS_AS(armijo_search(p, Vector::Ones(1), Vector::Zero(1), -0.5, config),
                  std::invalid_argument);  // d = 0
  // an unreachable decrease target exhausts the backtracking budget
  config.max_backtracks = 5;
  CHECK_THROWS_AS(armijo_search(p, Vector::Ones(1), Vector::Constant(1, 1e6), -1e-12, config),
                  LineSearchStall);
}

TEST_CASE("monpg reproduces the worked trajectory") {
  const auto p1 = make_p1();
  SolverConfig config;
  const RunResult run = monpg_run(p1, kX0, config);

  CHECK(run.termination == Termination::Critical);
  CHECK(run.counter.n_it <= 10);
  REQUIRE(run.trajectory.size() >= 2);
  CHECK(run.trajectory[0].alpha == 1.0);
  CHECK((run.trajectory[1].x - vec2(3.1546, 2.8344)).lpNorm<Eigen::Infinity>() < 1e-2);
  CHECK((run.final_x - vec2(3.0, 3.0)).lpNorm<Eigen::Infinity>() < 1e-2);
  check_monotone_descent(run, config.beta);
}

TEST_CASE("monpg stops immediately at a critical start") {
  const auto p1 = make_p1();
  const RunResult run = monpg_run(p1, vec2(3, 3), SolverConfig{});
  CHECK(run.termination == Termination::Critical);
  CHECK(run.counter.n_it == 0);
  CHECK(run.trajectory.empty());
}

TEST_CASE("monpg solves a scalar quadratic in one Newton step") {
  SmoothFunction f;
  f.n = 2;
  f.value = [](const Vector& x) { return 0.5 * x.squaredNorm(); };
  f.gradient = [](const Vector& x) { return x; };
  f.hessian = [](const Vector& x) { return Matrix::Identity(x.size(), x.size()).eval(); };
  f.strong_convexity = 1.0;
  f.grad_lipschitz = 1.0;
  MultiObjectiveProblem p("halfnorm", 2, {f}, {PiecewiseMaxFunction::zero(2)},
                          Vector::Constant(2, -2.0), Vector::Constant(2, 2.0));
  const RunResult run = monpg_run(p, Vector::Ones(2), SolverConfig{});
  CHECK(run.termination == Termination::Critical);
  CHECK(run.counter.n_it == 1);
  CHECK(run.final_x.norm() < 1e-8);
  REQUIRE(run.trajectory.size() == 1);
  CHECK((run.trajectory[0].d + Vector::Ones(2)).norm() < 1e-7);  // d = -x
  CHECK(run.trajectory[0].alpha == 1.0);
}

TEST_CASE("mopg takes the unit proximal gradient step on the scalar parabola") {
  const auto p = scalar_half_square();
  const RunResult run = mopg_run(p, Vector::Ones(1), SolverConfig{}, 1.0);
  CHECK(run.termination == Termination::Critical);
  CHECK(run.counter.n_it == 1);
  REQUIRE(run.trajectory.size() == 1);
  CHECK(run.trajectory[0].d[0] == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(std::abs(run.final_x[0]) < 1e-8);
}

TEST_CASE("mopg converges on the worked problem, slower than monpg") {
  const auto p1 = make_p1();
  SolverConfig config;
  const RunResult newton = monpg_run(p1, kX0, config);
  const RunResult proximal = mopg_run(p1, kX0, config);
  CHECK(proximal.termination == Termination::Critical);
  CHECK(proximal.counter.n_it >= newton.counter.n_it);
  CHECK(proximal.counter.n_hess == 0);
  check_monotone_descent(proximal, config.beta);
}

TEST_CASE("a proximal-gradient critical point is critical for the Newton model too") {
  const auto p = make_gh_quad();
  const RunResult run = mopg_run(p, Vector::Constant(1, 1.7), SolverConfig{});
  CHECK(run.termination == Termination::Critical);
  CHECK(is_critical(p, run.final_x, 1e-3));
}

TEST_CASE("weighted sum with a degenerate weight minimizes one objective") {
  const auto p1 = make_p1();
  const RunResult run = weighted_sum_run(p1, vec2(1, 0), vec2(1, 1), SolverConfig{});
  CHECK(run.termination == Termination::Critical);
  // the returned point is critical for F1 alone
  MultiObjectiveProblem f1_only = make_weighted_problem(p1, vec2(1, 0));
  CHECK(is_critical(f1_only, run.final_x, 1e-4));
}

TEST_CASE("weighted sum with the worked weight finds the known critical point") {
  const auto p1 = make_p1();
  const RunResult run =
      weighted_sum_run(p1, vec2(0.18637886, 0.81362114), vec2(1, 1), SolverConfig{});
  CHECK(run.termination == Termination::Critical);
  CHECK((run.final_x - vec2(3, 3)).lpNorm<Eigen::Infinity>() < 1e-2);
}

TEST_CASE("weighted sum respects symmetry") {
  std::vector<SmoothFunction> fs = {
      SmoothFunction::quadratic(Matrix::Identity(1, 1), Vector::Ones(1)),
      SmoothFunction::quadratic(Matrix::Identity(1, 1), -Vector::Ones(1))};
  MultiObjectiveProblem p("sym", 1, std::move(fs),
                          {PiecewiseMaxFunction::zero(1), PiecewiseMaxFunction::zero(1)},
                          Vector::Constant(1, -2.0), Vector::Constant(1, 2.0));
  const RunResult run = weighted_sum_run(p, Vector::Constant(2, 0.5), Vector::Ones(1),
                                         SolverConfig{});
  CHECK(std::abs(run.final_x[0]) < 1e-6);
}

TEST_CASE("weighted-sum piece expansion stays exact") {
  const auto p1 = make_p1();
  const Vector w = vec2(0.3, 0.7);
  MultiObjectiveProblem scalar = make_weighted_problem(p1, w);
  CHECK(scalar.objective_count() == 1);
  CHECK(scalar.nonsmooth(0).piece_count() == 4);  // 2 x 2 product
  SplitMix64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Vector x = rng.next_in_box(p1.lower_bound(), p1.upper_bound());
    const double expected = w[0] * (p1.smooth(0).value(x) + p1.nonsmooth(0).value(x)) +
                            w[1] * (p1.smooth(1).value(x) + p1.nonsmooth(1).value(x));
    const double got = scalar.smooth(0).value(x) + scalar.nonsmooth(0).value(x);
    CHECK_NEAR(got, expected, 1e-9 * (1.0 + std::abs(expected)));
  }
  // zero weights drop out of the product entirely
  CHECK(make_weighted_problem(p1, vec2(1, 0)).nonsmooth(0).piece_count() == 2);
}

TEST_CASE("weighted-sum expansion over exp pieces keeps derivatives consistent") {
  // gD has exponential pieces, so tuples fall back to generic sums
  std::vector<SmoothFunction> fs(3, SmoothFunction::zero(2));
  MultiObjectiveProblem p("gD-zero-local", 2, std::move(fs), make_gd(),
                          Vector::Constant(2, -2.0), Vector::Constant(2, 3.0));
  Vector w(3);
  w << 0.2, 0.5, 0.3;
  MultiObjectiveProblem scalar = make_weighted_problem(p, w);
  CHECK(scalar.nonsmooth(0).piece_count() == 27);
  SplitMix64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const Vector x = rng.next_in_box(p.lower_bound(), p.upper_bound());
    double expected = 0;
    for (Index j = 0; j < 3; ++j) expected += w[j] * p.nonsmooth(j).value(x);
    CHECK_NEAR(scalar.nonsmooth(0).value(x), expected, 1e-9 * (1.0 + std::abs(expected)));
  }
}

TEST_CASE("weighted-sum expansion cap throws UnsupportedProblem") {
  // two objectives with 101 tangent lines each: 101^2 > 10^4 products
  std::vector<ConvexPiece> tangents;
  for (int k = 0; k <= 100; ++k) {
    const double slope = -5.0 + 0.1 * k;
    tangents.push_back(ConvexPiece::affine(Vector::Constant(1, slope), -0.25 * slope * slope));
  }
  PiecewiseMaxFunction big(tangents);
  std::vector<SmoothFunction> fs(2, SmoothFunction::zero(1));
  MultiObjectiveProblem p("big", 1, std::move(fs), {big, big}, Vector::Constant(1, -1.0),
                          Vector::Ones(1));
  CHECK_THROWS_AS(make_weighted_problem(p, Vector::Constant(2, 0.5)), UnsupportedProblem);
}

TEST_CASE("weight grids") {
  const auto grid2 = weight_grid(2, 100);
  REQUIRE(grid2.size() == 100);
  CHECK(grid2.front()[0] == 0.0);  // includes (0,1)
  CHECK(grid2.back()[0] == 1.0);   // includes (1,0)
  for (const auto& w : grid2) CHECK(w.sum() == doctest::Approx(1.0));

  // m = 3: lattice size closest to 97 is 91 (q = 12), corners included
  const auto grid3 = weight_grid(3, 100);
  CHECK(grid3.size() == 91);
  int corners = 0;
  for (const auto& w : grid3)
    if (w.maxCoeff() == 1.0) ++corners;
  CHECK(corners == 3);

  CHECK(weight_grid(1, 5).size() == 5);
  CHECK_THROWS_AS(weight_grid(4, 10), UnsupportedProblem);
}

TEST_CASE("level sets are monotone along every run") {
  SplitMix64 rng(300);
  for (int i = 0; i < 5; ++i) {
    const auto problem = test_instances::random_strongly_convex(2, 2, 2200 + i);
    const Vector x0 = rng.next_in_box(problem.lower_bound(), problem.upper_bound());
    for (const RunResult& run :
         {monpg_run(problem, x0, SolverConfig{}), mopg_run(problem, x0, SolverConfig{})}) {
      CHECK(run.termination == Termination::Critical);
      const Vector f0 = run.trajectory.empty() ? run.final_f : run.trajectory.front().f;
      CHECK((run.final_f.array() <= f0.array()).all());
      check_monotone_descent(run, SolverConfig{}.beta);
    }
  }
}

TEST_CASE("sigma and Lipschitz invariants hold on declared problems") {
  SplitMix64 rng(310);
  const SolverConfig config;
  for (int i = 0; i < 5; ++i) {
    const auto problem = make_synthetic_quadratic(2, 2, 1.0, 3100 + i, /*with_gg=*/true);
    const double sigma = problem.declared_sigma();
    const double lipschitz = problem.declared_lipschitz();
    const double alpha_floor =
        std::min(1.0, sigma * (1.0 - config.beta) * config.backtrack_ratio / lipschitz);
    const Vector x0 = rng.next_in_box(problem.lower_bound(), problem.upper_bound());
    for (const RunResult& run :
         {monpg_run(problem, x0, config), mopg_run(problem, x0, config)}) {
      for (const auto& step : run.trajectory) {
        CHECK(step.t <= -0.5 * sigma * step.d.squaredNorm() + 1e-6);
        CHECK(step.alpha >= alpha_floor);
      }
    }
  }
}

TEST_CASE("critical termination is re-checkable") {
  const auto p1 = make_p1();
  SplitMix64 rng(777);
  for (int i = 0; i < 5; ++i) {
    const Vector x0 = rng.next_in_box(p1.lower_bound(), p1.upper_bound());
    const RunResult run = monpg_run(p1, x0, SolverConfig{});
    REQUIRE(run.termination == Termination::Critical);
    CHECK(is_critical(p1, run.final_x, SolverConfig{}.eps));
  }
}

TEST_CASE("forward-difference mode follows the analytic trajectory") {
  const auto p1 = make_p1();
  SolverConfig fd;
  fd.derivative_mode = DerivativeMode::ForwardDifference;
  const RunResult run = monpg_run(p1, kX0, fd);
  CHECK(run.termination == Termination::Critical);
  CHECK((run.final_x - vec2(3.0, 3.0)).lpNorm<Eigen::Infinity>() < 2e-2);
}

TEST_CASE("config validation") {
  SolverConfig bad;
  bad.beta = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = SolverConfig{};
  bad.backtrack_ratio = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = SolverConfig{};
  bad.eps = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

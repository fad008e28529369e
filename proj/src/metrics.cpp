#include "monpg/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "monpg/errors.hpp"
#include "monpg/rng.hpp"

namespace monpg {

Front::Front(std::vector<FrontPoint> raw, std::string problem_, std::string solver_,
             std::uint64_t seed_)
    : points(nondominated_filter(raw)),
      problem(std::move(problem_)),
      solver(std::move(solver_)),
      seed(seed_) {}

SolverSpec SolverSpec::monpg(SolverConfig cfg) { return {Type::Monpg, "monpg", cfg, {}, {}}; }

SolverSpec SolverSpec::mopg(SolverConfig cfg, std::optional<double> ell) {
  return {Type::Mopg, "mopg", cfg, ell, {}};
}

SolverSpec SolverSpec::weighted_sum(SolverConfig cfg) {
  return {Type::WeightedSum, "ws", cfg, {}, {}};
}

namespace {

bool run_succeeded(const RunResult& r) {
  return r.termination == Termination::Critical || r.termination == Termination::MaxIterations;
}

// Streams derive from the solver type, not the display label, so two
// identically configured solvers under different labels see identical starts
// (and produce identical columns in a comparison).
std::string type_name(SolverSpec::Type type) {
  switch (type) {
    case SolverSpec::Type::Monpg:
      return "monpg";
    case SolverSpec::Type::Mopg:
      return "mopg";
    case SolverSpec::Type::WeightedSum:
      return "ws";
  }
  return "unknown";
}

}  // namespace

MultiStartResult multi_start(const MultiObjectiveProblem& problem, const SolverSpec& spec,
                             int n_starts, std::uint64_t seed, int jobs) {
  if (n_starts < 1) throw std::invalid_argument("multi_start: n_starts must be positive");
  if (jobs < 1) jobs = 1;

  std::vector<Vector> weights;
  if (spec.type == SolverSpec::Type::WeightedSum)
    weights = weight_grid(problem.objective_count(), n_starts);
  const int total = spec.type == SolverSpec::Type::WeightedSum
                        ? static_cast<int>(weights.size())
                        : n_starts;

  const std::string stream_name = type_name(spec.type);
  std::vector<RunResult> runs(static_cast<std::size_t>(total));
  auto run_one = [&](int i) {
    SplitMix64 stream(
        stream_seed(seed, problem.name(), stream_name, static_cast<std::uint64_t>(i)));
    const Vector x0 = stream.next_in_box(problem.lower_bound(), problem.upper_bound());
    switch (spec.type) {
      case SolverSpec::Type::Monpg:
        runs[static_cast<std::size_t>(i)] = monpg_run(problem, x0, spec.config);
        break;
      case SolverSpec::Type::Mopg:
        runs[static_cast<std::size_t>(i)] = mopg_run(problem, x0, spec.config, spec.ell);
        break;
      case SolverSpec::Type::WeightedSum:
        runs[static_cast<std::size_t>(i)] =
            weighted_sum_run(problem, weights[static_cast<std::size_t>(i)], x0, spec.config);
        break;
    }
  };

  if (jobs == 1) {
    for (int i = 0; i < total; ++i) run_one(i);
  } else {
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (int i = next.fetch_add(1); i < total; i = next.fetch_add(1)) run_one(i);
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < std::min(jobs, total); ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<FrontPoint> collected;
  for (const auto& r : runs) {
    if (!run_succeeded(r)) continue;
    // weighted-sum runs report the scalarized objective; the front needs the
    // original objective vector
    Vector f = spec.type == SolverSpec::Type::WeightedSum
                   ? eval_objectives(problem, r.final_x)
                   : r.final_f;
    collected.push_back({r.final_x, std::move(f)});
  }
  if (collected.empty()) throw EmptyFront("multi_start: every run failed");

  MultiStartResult out;
  out.front = Front(std::move(collected), problem.name(), spec.name, seed);
  out.runs = std::move(runs);
  return out;
}

SpreadExtremes spread_extremes(const std::vector<Front>& fronts) {
  SpreadExtremes ex;
  bool first = true;
  for (const auto& fr : fronts) {
    for (const auto& p : fr.points) {
      if (first) {
        ex.best = p.f;
        ex.worst = p.f;
        first = false;
      } else {
        ex.best = ex.best.cwiseMin(p.f);
        ex.worst = ex.worst.cwiseMax(p.f);
      }
    }
  }
  if (first) throw std::invalid_argument("spread_extremes: no points");
  return ex;
}

double delta_spread(const Front& front, const SpreadExtremes& extremes) {
  const std::size_t n_points = front.points.size();
  if (n_points == 0) throw std::invalid_argument("delta_spread: empty front");
  const Index m = front.points.front().f.size();

  double worst_delta = 0.0;
  for (Index j = 0; j < m; ++j) {
    std::vector<double> vals;
    vals.reserve(n_points);
    for (const auto& p : front.points) vals.push_back(p.f[j]);
    std::sort(vals.begin(), vals.end());

    const double delta0 = vals.front() - extremes.best[j];
    const double deltaN = extremes.worst[j] - vals.back();
    if (n_points == 1) {
      worst_delta = 1.0;  // no interior gaps; flagged convention
      continue;
    }
    double mean = 0.0;
    for (std::size_t i = 0; i + 1 < n_points; ++i) mean += vals[i + 1] - vals[i];
    mean /= static_cast<double>(n_points - 1);
    double sum_dev = 0.0;
    for (std::size_t i = 0; i + 1 < n_points; ++i)
      sum_dev += std::abs(vals[i + 1] - vals[i] - mean);
    const double denom = delta0 + deltaN + static_cast<double>(n_points - 1) * mean;
    const double numer = delta0 + deltaN + sum_dev;
    worst_delta = std::max(worst_delta, denom > 0 ? numer / denom : 1.0);
  }
  return worst_delta;
}

double hypervolume_mc(const Front& front, const Vector& ref_point, const Vector& ideal_point,
                      int n_samples, std::uint64_t seed) {
  if (front.points.empty()) throw std::invalid_argument("hypervolume_mc: empty front");
  if (n_samples < 1) throw std::invalid_argument("hypervolume_mc: n_samples must be positive");
  const Index m = ref_point.size();
  if (ideal_point.size() != m) throw std::invalid_argument("hypervolume_mc: box shape mismatch");
  for (Index j = 0; j < m; ++j)
    if (!(ideal_point[j] < ref_point[j]))
      throw std::invalid_argument("hypervolume_mc: degenerate box");
  for (const auto& p : front.points) {
    if (p.f.size() != m) throw std::invalid_argument("hypervolume_mc: front shape mismatch");
    for (Index j = 0; j < m; ++j)
      if (p.f[j] < ideal_point[j] - 1e-12 || p.f[j] > ref_point[j] + 1e-12)
        throw std::invalid_argument("hypervolume_mc: front value outside [ideal, ref]");
  }

  SplitMix64 rng(seed);
  Vector sample(m);
  int dominated = 0;
  for (int s = 0; s < n_samples; ++s) {
    for (Index j = 0; j < m; ++j) sample[j] = rng.next_in(ideal_point[j], ref_point[j]);
    for (const auto& p : front.points) {
      if ((p.f.array() <= sample.array()).all()) {
        ++dominated;
        break;
      }
    }
  }
  return static_cast<double>(dominated) / static_cast<double>(n_samples);
}

double ProfileCurve::value_at(double tau) const {
  double v = 0.0;
  for (const auto& [bp, rho] : breakpoints) {
    if (bp <= tau)
      v = rho;
    else
      break;
  }
  return v;
}

std::vector<ProfileCurve> performance_profile(const Matrix& metric,
                                              const std::vector<std::string>& solvers,
                                              bool invert) {
  const Index n_problems = metric.rows();
  const Index n_solvers = metric.cols();
  if (static_cast<Index>(solvers.size()) != n_solvers)
    throw std::invalid_argument("performance_profile: solver name count mismatch");
  if (n_problems == 0) throw std::invalid_argument("performance_profile: no problems");

  const double inf = std::numeric_limits<double>::infinity();
  Matrix ratios(n_problems, n_solvers);
  for (Index p = 0; p < n_problems; ++p) {
    double row_min = inf;
    for (Index s = 0; s < n_solvers; ++s) {
      double v = metric(p, s);
      if (std::isfinite(v) && v > 0) {
        if (invert) v = 1.0 / v;
        row_min = std::min(row_min, v);
      }
    }
    for (Index s = 0; s < n_solvers; ++s) {
      double v = metric(p, s);
      const bool ok = std::isfinite(v) && v > 0;
      if (ok && invert) v = 1.0 / v;
      ratios(p, s) = (ok && std::isfinite(row_min)) ? v / row_min : inf;
    }
  }

  std::vector<ProfileCurve> curves;
  for (Index s = 0; s < n_solvers; ++s) {
    ProfileCurve curve;
    curve.solver = solvers[static_cast<std::size_t>(s)];
    std::vector<double> rs;
    for (Index p = 0; p < n_problems; ++p)
      if (std::isfinite(ratios(p, s))) rs.push_back(ratios(p, s));
    std::sort(rs.begin(), rs.end());
    // one breakpoint per distinct ratio; count ties once at their shared tau
    std::size_t i = 0;
    while (i < rs.size()) {
      std::size_t k = i;
      while (k < rs.size() && rs[k] == rs[i]) ++k;
      curve.breakpoints.emplace_back(
          rs[i], static_cast<double>(k) / static_cast<double>(n_problems));
      i = k;
    }
    if (curve.breakpoints.empty() || curve.breakpoints.front().first > 1.0)
      curve.breakpoints.insert(curve.breakpoints.begin(), {1.0, 0.0});
    curves.push_back(std::move(curve));
  }
  return curves;
}

std::int64_t eval_accounting(const EvalCounter& counter, Index n, AccountingMethod method) {
  const std::int64_t nf = counter.n_f;
  const std::int64_t it = counter.n_it;
  const std::int64_t nn = static_cast<std::int64_t>(n);
  switch (method) {
    case AccountingMethod::Monpg:
    case AccountingMethod::WeightedSum:
      return nf + nn * it + (nn * (nn + 1) / 2) * it;
    case AccountingMethod::Mopg:
      return nf + nn * it;
  }
  throw std::logic_error("eval_accounting: bad method");
}

}  // namespace monpg

#include "monpg/experiment.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <thread>

#include "monpg/errors.hpp"
#include "monpg/io.hpp"
#include "monpg/rng.hpp"

namespace monpg {

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

[[noreturn]] void config_error(const std::string& text, const std::string& needle,
                               const std::string& message) {
  std::string anchored = "config: " + message;
  const std::size_t pos = text.find(needle);
  if (pos != std::string::npos)
    anchored += " (line " + std::to_string(line_of_offset(text, pos)) + ")";
  throw std::invalid_argument(anchored);
}

SolverConfig solver_config_from_json(const Json& j) {
  SolverConfig cfg;
  cfg.beta = j.value("beta", cfg.beta);
  cfg.backtrack_ratio = j.value("r", cfg.backtrack_ratio);
  cfg.eps = j.value("eps", cfg.eps);
  cfg.max_iter = j.value("max_iter", cfg.max_iter);
  cfg.subproblem_tol = j.value("subproblem_tol", cfg.subproblem_tol);
  cfg.max_backtracks = j.value("max_backtracks", cfg.max_backtracks);
  if (j.value("forward_difference", false))
    cfg.derivative_mode = DerivativeMode::ForwardDifference;
  cfg.validate();
  return cfg;
}

std::ofstream open_output(const fs::path& path, std::uint64_t hash, std::uint64_t seed) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  out << "# config_hash=" << buf << " seed=" << seed << "\n";
  return out;
}

void write_front_csv(const fs::path& path, const Front& front, std::uint64_t hash) {
  std::ofstream out = open_output(path, hash, front.seed);
  const Index n = front.points.empty() ? 0 : front.points.front().x.size();
  const Index m = front.points.empty() ? 0 : front.points.front().f.size();
  for (Index i = 0; i < n; ++i) out << (i ? "," : "") << "x" << (i + 1);
  for (Index j = 0; j < m; ++j) out << ",F" << (j + 1);
  out << "\n";
  for (const auto& p : front.points) {
    for (Index i = 0; i < n; ++i) out << (i ? "," : "") << format_double(p.x[i]);
    for (Index j = 0; j < m; ++j) out << "," << format_double(p.f[j]);
    out << "\n";
  }
}

void write_runs_csv(const fs::path& path, const std::vector<RunResult>& runs,
                    std::uint64_t hash, std::uint64_t seed) {
  std::ofstream out = open_output(path, hash, seed);
  const Index m = runs.empty() ? 0 : runs.front().final_f.size();
  out << "problem,solver,start,iterations,n_f,d_norm";
  for (Index j = 0; j < m; ++j) out << ",F" << (j + 1);
  out << "\n";
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const RunResult& r = runs[i];
    out << r.problem << "," << r.solver << "," << i << "," << r.counter.n_it << ","
        << r.counter.n_f << "," << format_double(r.final_d_norm);
    for (Index j = 0; j < r.final_f.size(); ++j) out << "," << format_double(r.final_f[j]);
    out << "\n";
  }
}

std::string sanitize(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
  return out;
}

AccountingMethod accounting_method(SolverSpec::Type type) {
  switch (type) {
    case SolverSpec::Type::Monpg:
      return AccountingMethod::Monpg;
    case SolverSpec::Type::Mopg:
      return AccountingMethod::Mopg;
    case SolverSpec::Type::WeightedSum:
      return AccountingMethod::WeightedSum;
  }
  throw std::logic_error("accounting_method: bad type");
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("config: parse error at line " +
                                std::to_string(line_of_offset(text, e.byte)) + ": " + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");

  ExperimentConfig cfg;
  if (!j.contains("problems") || !j.at("problems").is_array() || j.at("problems").empty())
    throw std::invalid_argument("config: 'problems' must be a nonempty array");
  for (const auto& p : j.at("problems")) {
    if (!p.is_string()) throw std::invalid_argument("config: problem names must be strings");
    const std::string name = p.get<std::string>();
    if (!registry().contains(name))
      config_error(text, "\"" + name + "\"", "unknown problem '" + name + "'");
    cfg.problems.push_back(name);
  }

  if (!j.contains("solvers") || !j.at("solvers").is_array() || j.at("solvers").empty())
    throw std::invalid_argument("config: 'solvers' must be a nonempty array");
  for (const auto& sj : j.at("solvers")) {
    if (!sj.is_object() || !sj.contains("type"))
      throw std::invalid_argument("config: each solver needs a 'type'");
    const std::string type = sj.at("type").get<std::string>();
    SolverSpec spec;
    if (type == "monpg") {
      spec.type = SolverSpec::Type::Monpg;
    } else if (type == "mopg") {
      spec.type = SolverSpec::Type::Mopg;
      if (sj.contains("ell")) spec.ell = sj.at("ell").get<double>();
    } else if (type == "ws") {
      spec.type = SolverSpec::Type::WeightedSum;
    } else {
      config_error(text, "\"" + type + "\"", "unknown solver type '" + type + "'");
    }
    spec.name = sj.value("name", type);
    try {
      spec.config = sj.contains("config") ? solver_config_from_json(sj.at("config"))
                                          : SolverConfig{};
    } catch (const std::invalid_argument& e) {
      config_error(text, "\"config\"", e.what());
    }
    for (const auto& other : cfg.solvers)
      if (other.name == spec.name)
        config_error(text, "\"" + spec.name + "\"", "duplicate solver name '" + spec.name + "'");
    cfg.solvers.push_back(std::move(spec));
  }
  if (cfg.solvers.size() < 2)
    throw std::invalid_argument("config: compare/profile need at least 2 solvers");

  if (!j.contains("seed") || !j.at("seed").is_number_unsigned())
    throw std::invalid_argument("config: 'seed' (unsigned integer) is required");
  cfg.seed = j.at("seed").get<std::uint64_t>();
  cfg.n_starts = j.value("n_starts", cfg.n_starts);
  if (cfg.n_starts < 1) throw std::invalid_argument("config: n_starts must be positive");
  cfg.out_dir = j.value("out_dir", cfg.out_dir.string());
  if (j.contains("metrics")) {
    cfg.metrics.clear();
    for (const auto& mj : j.at("metrics")) {
      const std::string name = mj.get<std::string>();
      if (name != "delta" && name != "hv" && name != "iterations" && name != "evals")
        config_error(text, "\"" + name + "\"", "unknown metric '" + name + "'");
      cfg.metrics.push_back(name);
    }
    if (cfg.metrics.empty()) throw std::invalid_argument("config: metrics must be nonempty");
  }
  cfg.hv_samples = j.value("hv_samples", cfg.hv_samples);
  if (cfg.hv_samples < 1) throw std::invalid_argument("config: hv_samples must be positive");
  cfg.jobs = j.value("jobs", cfg.jobs);
  if (cfg.jobs < 0) throw std::invalid_argument("config: jobs must be nonnegative");
  cfg.problem_seed = j.value("problem_seed", cfg.problem_seed);
  return cfg;
}

std::uint64_t config_hash(const ExperimentConfig& config) {
  Json j;
  j["problems"] = config.problems;
  Json solvers = Json::array();
  for (const auto& s : config.solvers) {
    Json sj;
    sj["name"] = s.name;
    sj["type"] = static_cast<int>(s.type);
    sj["beta"] = s.config.beta;
    sj["r"] = s.config.backtrack_ratio;
    sj["eps"] = s.config.eps;
    sj["max_iter"] = s.config.max_iter;
    sj["subproblem_tol"] = s.config.subproblem_tol;
    sj["max_backtracks"] = s.config.max_backtracks;
    sj["fd"] = s.config.derivative_mode == DerivativeMode::ForwardDifference;
    if (s.ell) sj["ell"] = *s.ell;
    solvers.push_back(sj);
  }
  j["solvers"] = solvers;
  j["n_starts"] = config.n_starts;
  j["seed"] = config.seed;
  j["metrics"] = config.metrics;
  j["hv_samples"] = config.hv_samples;
  j["problem_seed"] = config.problem_seed;
  // jobs and out_dir intentionally excluded: they must not change results
  return fnv1a(j.dump());
}

int run_solve(const MultiObjectiveProblem& problem, const Vector& x0, const SolverSpec& spec,
              const std::filesystem::path& out_file, bool include_trajectory,
              bool trace_subproblems) {
  SolverSpec local = spec;
  if (trace_subproblems) {
    local.config.subproblem_trace = [](int iteration, const SubproblemTrace& trace) {
      Json stages = Json::array();
      for (const auto& st : trace.stages)
        stages.push_back({{"barrier_mu", st.barrier_mu},
                          {"newton_iterations", st.newton_iterations},
                          {"gradient_norm", st.gradient_norm},
                          {"kkt_residual", st.kkt_residual}});
      std::cerr << Json{{"iteration", iteration}, {"stages", stages}}.dump() << "\n";
    };
  }

  RunResult result;
  switch (local.type) {
    case SolverSpec::Type::Monpg:
      result = monpg_run(problem, x0, local.config);
      break;
    case SolverSpec::Type::Mopg:
      result = mopg_run(problem, x0, local.config, local.ell);
      break;
    case SolverSpec::Type::WeightedSum: {
      Vector w = local.weights ? *local.weights
                               : Vector::Constant(problem.objective_count(),
                                                  1.0 / static_cast<double>(
                                                            problem.objective_count()));
      result = weighted_sum_run(problem, w, x0, local.config);
      break;
    }
  }

  if (!out_file.empty()) {
    std::ofstream out(out_file);
    if (!out) throw std::runtime_error("cannot write " + out_file.string());
    out << run_result_to_json(result, include_trajectory).dump(2) << "\n";
  }

  std::cout << result.problem << " " << result.solver << " termination=" +
                   to_string(result.termination)
            << " iterations=" << result.counter.n_it << " n_f=" << result.counter.n_f
            << " d_norm=" << format_double(result.final_d_norm) << " F=(";
  for (Index j = 0; j < result.final_f.size(); ++j)
    std::cout << (j ? "," : "") << format_double(result.final_f[j]);
  std::cout << ")\n";

  switch (result.termination) {
    case Termination::Critical:
      return kExitOk;
    case Termination::MaxIterations:
      return kExitMaxIter;
    default:
      return kExitFailure;
  }
}

int run_pareto(const MultiObjectiveProblem& problem, const SolverSpec& spec, int n_starts,
               std::uint64_t seed, const std::filesystem::path& out_dir, int jobs) {
  fs::create_directories(out_dir);
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  const std::string canonical = "pareto|" + problem.name() + "|" + spec.name + "|" +
                                std::to_string(n_starts) + "|" + std::to_string(seed);
  const std::uint64_t hash = fnv1a(canonical);

  MultiStartResult ms;
  try {
    ms = multi_start(problem, spec, n_starts, seed, jobs);
  } catch (const EmptyFront& e) {
    std::cerr << e.what() << "\n";
    return kExitFailure;
  }
  const std::string stem = sanitize(problem.name()) + "_" + sanitize(spec.name);
  write_front_csv(out_dir / ("front_" + stem + ".csv"), ms.front, hash);
  write_runs_csv(out_dir / ("runs_" + stem + ".csv"), ms.runs, hash, seed);
  std::cout << "front size " << ms.front.points.size() << " from " << ms.runs.size()
            << " runs -> " << (out_dir / ("front_" + stem + ".csv")).string() << "\n";
  return kExitOk;
}

int run_compare(const ExperimentConfig& config, bool with_profiles) {
  fs::create_directories(config.out_dir);
  int jobs = config.jobs;
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  const std::uint64_t hash = config_hash(config);

  const std::size_t n_problems = config.problems.size();
  const std::size_t n_solvers = config.solvers.size();
  Matrix delta(n_problems, n_solvers), hv(n_problems, n_solvers);
  Matrix iterations(n_problems, n_solvers), evals(n_problems, n_solvers);
  delta.setConstant(kNaN);
  hv.setConstant(kNaN);
  iterations.setConstant(kNaN);
  evals.setConstant(kNaN);
  std::vector<std::vector<std::size_t>> front_sizes(n_problems,
                                                    std::vector<std::size_t>(n_solvers, 0));

  std::ofstream refpoints = open_output(config.out_dir / "refpoints.csv", hash, config.seed);
  refpoints << "problem,objective,ideal,ref\n";

  for (std::size_t pi = 0; pi < n_problems; ++pi) {
    const MultiObjectiveProblem problem =
        registry().make(config.problems[pi], config.problem_seed);
    std::vector<std::optional<Front>> fronts(n_solvers);

    for (std::size_t si = 0; si < n_solvers; ++si) {
      const SolverSpec& spec = config.solvers[si];
      try {
        MultiStartResult ms = multi_start(problem, spec, config.n_starts, config.seed, jobs);
        const std::string stem = sanitize(problem.name()) + "_" + sanitize(spec.name);
        write_front_csv(config.out_dir / ("front_" + stem + ".csv"), ms.front, hash);
        write_runs_csv(config.out_dir / ("runs_" + stem + ".csv"), ms.runs, hash, config.seed);
        front_sizes[pi][si] = ms.front.points.size();

        std::int64_t total_it = 0, total_evals = 0;
        for (const auto& r : ms.runs) {
          total_it += r.counter.n_it;
          total_evals +=
              eval_accounting(r.counter, problem.dimension(), accounting_method(spec.type));
        }
        iterations(static_cast<Index>(pi), static_cast<Index>(si)) =
            static_cast<double>(total_it);
        evals(static_cast<Index>(pi), static_cast<Index>(si)) = static_cast<double>(total_evals);
        fronts[si] = std::move(ms.front);
      } catch (const EmptyFront&) {
        // cell stays NaN: treated as a failure by the profiles
      }
    }

    std::vector<Front> available;
    for (const auto& fr : fronts)
      if (fr) available.push_back(*fr);
    if (available.empty()) continue;

    const SpreadExtremes extremes = spread_extremes(available);
    const Vector range = extremes.worst - extremes.best;
    const Vector ref = extremes.worst + 0.1 * range;
    const Vector ideal = extremes.best;
    for (Index j = 0; j < ideal.size(); ++j)
      refpoints << problem.name() << "," << (j + 1) << "," << format_double(ideal[j]) << ","
                << format_double(ref[j]) << "\n";

    for (std::size_t si = 0; si < n_solvers; ++si) {
      if (!fronts[si]) continue;
      delta(static_cast<Index>(pi), static_cast<Index>(si)) =
          delta_spread(*fronts[si], extremes);
      try {
        hv(static_cast<Index>(pi), static_cast<Index>(si)) =
            hypervolume_mc(*fronts[si], ref, ideal, config.hv_samples,
                           stream_seed(config.seed, problem.name(), "hv", 0));
      } catch (const std::invalid_argument&) {
        // degenerate box (e.g. single-point union front): leave NaN
      }
    }
  }

  std::ofstream metrics = open_output(config.out_dir / "metrics.csv", hash, config.seed);
  metrics << "problem,solver,n_front,delta,hv,iterations_total,evals_total\n";
  for (std::size_t pi = 0; pi < n_problems; ++pi)
    for (std::size_t si = 0; si < n_solvers; ++si) {
      metrics << config.problems[pi] << "," << config.solvers[si].name << ","
              << front_sizes[pi][si] << ","
              << format_double(delta(static_cast<Index>(pi), static_cast<Index>(si))) << ","
              << format_double(hv(static_cast<Index>(pi), static_cast<Index>(si))) << ","
              << format_double(iterations(static_cast<Index>(pi), static_cast<Index>(si)))
              << ","
              << format_double(evals(static_cast<Index>(pi), static_cast<Index>(si))) << "\n";
    }

  if (with_profiles) {
    struct NamedMetric {
      std::string name;
      const Matrix* values;
      bool invert;
    };
    const NamedMetric named[] = {{"delta", &delta, false},
                                 {"hv", &hv, true},
                                 {"iterations", &iterations, false},
                                 {"evals", &evals, false}};
    for (const auto& nm : named) {
      if (std::find(config.metrics.begin(), config.metrics.end(), nm.name) ==
          config.metrics.end())
        continue;
      for (std::size_t a = 0; a < n_solvers; ++a)
        for (std::size_t b = a + 1; b < n_solvers; ++b) {
          Matrix pair_metric(n_problems, 2);
          pair_metric.col(0) = nm.values->col(static_cast<Index>(a));
          pair_metric.col(1) = nm.values->col(static_cast<Index>(b));
          const std::vector<std::string> names = {config.solvers[a].name,
                                                  config.solvers[b].name};
          const auto curves = performance_profile(pair_metric, names, nm.invert);

          std::vector<double> taus;
          for (const auto& c : curves)
            for (const auto& [tau, _] : c.breakpoints) taus.push_back(tau);
          std::sort(taus.begin(), taus.end());
          taus.erase(std::unique(taus.begin(), taus.end()), taus.end());

          const std::string fname = "profile_" + nm.name + "_" + sanitize(names[0]) + "_vs_" +
                                    sanitize(names[1]) + ".csv";
          std::ofstream out = open_output(config.out_dir / fname, hash, config.seed);
          out << "tau,rho_" << names[0] << ",rho_" << names[1] << "\n";
          for (double tau : taus) {
            out << format_double(tau);
            for (const auto& c : curves) out << "," << format_double(c.value_at(tau));
            out << "\n";
          }
        }
    }
  }
  return kExitOk;
}

}  // namespace monpg

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monpg/piecewise_max.hpp"
#include "monpg/smooth_function.hpp"
#include "monpg/types.hpp"

namespace monpg {

/// Per-run evaluation counters. n_f counts objective-vector component
/// evaluations (m per eval_objectives call); derivative batches and outer
/// iterations are tracked separately so the forward-difference cost model
/// can be applied after the fact.
struct EvalCounter {
  std::int64_t n_f = 0;
  std::int64_t n_grad = 0;
  std::int64_t n_hess = 0;
  std::int64_t n_it = 0;
};

/// Unconstrained composite multi-objective problem: minimize
/// F_j(x) = f_j(x) + g_j(x), j = 1..m, over R^n. The [lb, ub] box is used
/// only to draw initial points; iterates are free to leave it.
class MultiObjectiveProblem {
 public:
  MultiObjectiveProblem(std::string name, Index n, std::vector<SmoothFunction> smooth,
                        std::vector<PiecewiseMaxFunction> nonsmooth, Vector lb, Vector ub);

  const std::string& name() const { return name_; }
  Index dimension() const { return n_; }
  Index objective_count() const { return m_; }
  const SmoothFunction& smooth(Index j) const { return smooth_[static_cast<size_t>(j)]; }
  const PiecewiseMaxFunction& nonsmooth(Index j) const {
    return nonsmooth_[static_cast<size_t>(j)];
  }
  const Vector& lower_bound() const { return lb_; }
  const Vector& upper_bound() const { return ub_; }

  /// True when every smooth part declares a positive strong-convexity
  /// modulus; the common modulus is then min_j sigma_j.
  bool has_declared_sigma() const;
  double declared_sigma() const;
  /// Common gradient-Lipschitz constant max_j L_j, when every part declares one.
  bool has_declared_lipschitz() const;
  double declared_lipschitz() const;

 private:
  std::string name_;
  Index n_;
  Index m_;
  std::vector<SmoothFunction> smooth_;
  std::vector<PiecewiseMaxFunction> nonsmooth_;
  Vector lb_, ub_;
};

/// F(x) = (F_1(x), ..., F_m(x)). Adds m to counter->n_f when a counter is
/// given. Throws std::invalid_argument on dimension mismatch.
Vector eval_objectives(const MultiObjectiveProblem& problem, const Vector& x,
                       EvalCounter* counter = nullptr);

/// Problem with every smooth part's derivatives replaced by forward
/// differences of its value.
MultiObjectiveProblem with_forward_differences(const MultiObjectiveProblem& problem);

}  // namespace monpg

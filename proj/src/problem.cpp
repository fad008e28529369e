#include "monpg/problem.hpp"

#include <algorithm>
#include <stdexcept>

namespace monpg {

MultiObjectiveProblem::MultiObjectiveProblem(std::string name, Index n,
                                             std::vector<SmoothFunction> smooth,
                                             std::vector<PiecewiseMaxFunction> nonsmooth,
                                             Vector lb, Vector ub)
    : name_(std::move(name)),
      n_(n),
      m_(static_cast<Index>(smooth.size())),
      smooth_(std::move(smooth)),
      nonsmooth_(std::move(nonsmooth)),
      lb_(std::move(lb)),
      ub_(std::move(ub)) {
  if (m_ == 0) throw std::invalid_argument("problem: need at least one objective");
  if (nonsmooth_.size() != static_cast<size_t>(m_))
    throw std::invalid_argument("problem: smooth/nonsmooth counts differ");
  for (const auto& f : smooth_)
    if (f.n != n_) throw std::invalid_argument("problem: smooth part dimension mismatch");
  for (const auto& g : nonsmooth_)
    if (g.dimension() != n_) throw std::invalid_argument("problem: nonsmooth part dimension mismatch");
  if (lb_.size() != n_ || ub_.size() != n_)
    throw std::invalid_argument("problem: box dimension mismatch");
  if (!((lb_.array() < ub_.array()).all()))
    throw std::invalid_argument("problem: box requires lb < ub componentwise");
}

bool MultiObjectiveProblem::has_declared_sigma() const {
  return std::all_of(smooth_.begin(), smooth_.end(),
                     [](const SmoothFunction& f) { return f.strong_convexity > 0; });
}

double MultiObjectiveProblem::declared_sigma() const {
  double s = smooth_.front().strong_convexity;
  for (const auto& f : smooth_) s = std::min(s, f.strong_convexity);
  return s;
}

bool MultiObjectiveProblem::has_declared_lipschitz() const {
  return std::all_of(smooth_.begin(), smooth_.end(),
                     [](const SmoothFunction& f) { return f.grad_lipschitz.has_value(); });
}

double MultiObjectiveProblem::declared_lipschitz() const {
  double L = 0.0;
  for (const auto& f : smooth_) L = std::max(L, f.grad_lipschitz.value());
  return L;
}

Vector eval_objectives(const MultiObjectiveProblem& problem, const Vector& x,
                       EvalCounter* counter) {
  if (x.size() != problem.dimension())
    throw std::invalid_argument("eval_objectives: x has wrong dimension");
  const Index m = problem.objective_count();
  Vector F(m);
  for (Index j = 0; j < m; ++j)
    F[j] = problem.smooth(j).value(x) + problem.nonsmooth(j).value(x);
  if (counter) counter->n_f += m;
  return F;
}

MultiObjectiveProblem with_forward_differences(const MultiObjectiveProblem& problem) {
  std::vector<SmoothFunction> smooth;
  std::vector<PiecewiseMaxFunction> nonsmooth;
  smooth.reserve(static_cast<size_t>(problem.objective_count()));
  for (Index j = 0; j < problem.objective_count(); ++j) {
    smooth.push_back(with_forward_differences(problem.smooth(j)));
    nonsmooth.push_back(problem.nonsmooth(j));
  }
  return MultiObjectiveProblem(problem.name(), problem.dimension(), std::move(smooth),
                               std::move(nonsmooth), problem.lower_bound(),
                               problem.upper_bound());
}

}  // namespace monpg

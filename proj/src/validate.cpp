#include "monpg/validate.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "monpg/rng.hpp"

namespace monpg {

namespace {

std::string at_point(const Vector& x) {
  std::string s = "(";
  for (Index i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(x[i]);
  }
  return s + ")";
}

double rel_err(const Vector& a, const Vector& b) {
  return (a - b).lpNorm<Eigen::Infinity>() /
         (1.0 + std::max(a.lpNorm<Eigen::Infinity>(), b.lpNorm<Eigen::Infinity>()));
}

double rel_err(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff() /
         (1.0 + std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()));
}

}  // namespace

std::vector<std::string> check_problem(const MultiObjectiveProblem& problem, int n_points,
                                       std::uint64_t seed) {
  std::vector<std::string> issues;
  SplitMix64 rng(seed);
  const Index n = problem.dimension();

  // quadratic pieces: eigenvalue check is point-free
  for (Index j = 0; j < problem.objective_count(); ++j) {
    const auto& g = problem.nonsmooth(j);
    for (std::size_t k = 0; k < g.pieces.size(); ++k) {
      const auto& piece = g.pieces[k];
      if (piece.kind == ConvexPiece::Kind::Quadratic) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(piece.A, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-10)
          issues.push_back("objective " + std::to_string(j) + " piece " + std::to_string(k) +
                           ": quadratic A has eigenvalue " +
                           std::to_string(es.eigenvalues().minCoeff()));
      }
      if (piece.kind == ConvexPiece::Kind::ExpAffine && !(piece.scale > 0))
        issues.push_back("objective " + std::to_string(j) + " piece " + std::to_string(k) +
                         ": exp piece scale must be positive");
      if (piece.kind == ConvexPiece::Kind::Generic && !piece.declared_convex)
        issues.push_back("objective " + std::to_string(j) + " piece " + std::to_string(k) +
                         ": generic piece not declared convex");
    }
  }

  for (int pt = 0; pt < n_points; ++pt) {
    const Vector x = rng.next_in_box(problem.lower_bound(), problem.upper_bound());
    Vector dir(n);
    for (Index i = 0; i < n; ++i) dir[i] = rng.next_in(-1.0, 1.0);
    if (dir.norm() < 1e-12) dir = Vector::Unit(n, 0);
    dir.normalize();

    for (Index j = 0; j < problem.objective_count(); ++j) {
      const auto& f = problem.smooth(j);
      const Matrix h = f.hessian(x);
      if ((h - h.transpose()).cwiseAbs().maxCoeff() > 1e-10)
        issues.push_back("objective " + std::to_string(j) + ": Hessian not symmetric at " +
                         at_point(x));
      if (f.strong_convexity > 0 &&
          dir.dot(h * dir) < f.strong_convexity - 1e-8)
        issues.push_back("objective " + std::to_string(j) +
                         ": declared strong convexity violated at " + at_point(x));
      if (rel_err(f.gradient(x), central_diff_gradient(f.value, x)) > 1e-5)
        issues.push_back("objective " + std::to_string(j) + ": gradient mismatch at " +
                         at_point(x));
      if (rel_err(h, central_diff_hessian(f.gradient, x)) > 1e-5)
        issues.push_back("objective " + std::to_string(j) + ": Hessian mismatch at " +
                         at_point(x));

      const auto& g = problem.nonsmooth(j);
      for (std::size_t k = 0; k < g.pieces.size(); ++k) {
        const auto& piece = g.pieces[k];
        const Matrix ph = piece.hessian(x);
        Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (ph + ph.transpose()).eval(),
                                                 Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-8 * (1.0 + ph.cwiseAbs().maxCoeff()))
          issues.push_back("objective " + std::to_string(j) + " piece " + std::to_string(k) +
                           ": Hessian not PSD at " + at_point(x));
        if (rel_err(piece.gradient(x), central_diff_gradient(
                                           [&piece](const Vector& y) { return piece.value(y); },
                                           x)) > 1e-5)
          issues.push_back("objective " + std::to_string(j) + " piece " + std::to_string(k) +
                           ": gradient mismatch at " + at_point(x));
        if (rel_err(ph, central_diff_hessian(
                            [&piece](const Vector& y) { return piece.gradient(y); }, x)) > 1e-5)
          issues.push_back("objective " + std::to_string(j) + " piece " + std::to_string(k) +
                           ": Hessian mismatch at " + at_point(x));
      }
    }
    if (issues.size() > 50) break;  // enough signal
  }
  return issues;
}

std::vector<std::string> check_subgradient_inequality(const PiecewiseMaxFunction& g,
                                                      const Vector& lb, const Vector& ub,
                                                      int n_pairs, std::uint64_t seed) {
  std::vector<std::string> issues;
  SplitMix64 rng(seed);
  for (int i = 0; i < n_pairs; ++i) {
    const Vector x = rng.next_in_box(lb, ub);
    const Vector y = rng.next_in_box(lb, ub);
    const double gx = g.value(x);
    const SubgradientResult sub = subgradient_g(g, x);
    const double lower = gx + sub.xi.dot(y - x);
    if (g.value(y) < lower - 1e-9 * (1.0 + std::abs(gx))) {
      issues.push_back("subgradient inequality violated from " + at_point(x) + " to " +
                       at_point(y));
      if (issues.size() > 10) break;
    }
  }
  return issues;
}

}  // namespace monpg

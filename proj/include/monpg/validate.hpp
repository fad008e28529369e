#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monpg/problem.hpp"

namespace monpg {

/// Sampled structural checks for a problem: Hessian symmetry (1e-10),
/// gradient/Hessian agreement with central differences (relative 1e-5),
/// strong-convexity curvature when declared, piece convexity (quadratic
/// eigenvalues >= -1e-10, sampled piece Hessians >= -1e-8), and the
/// subgradient inequality at random (x, y) pairs. Returns the list of
/// violations, empty when the problem is clean.
std::vector<std::string> check_problem(const MultiObjectiveProblem& problem, int n_points,
                                       std::uint64_t seed);

/// Subgradient inequality g(y) >= g(x) + xi'(y-x) for the reported xi at
/// n_pairs box-sampled (x, y) pairs, tolerance 1e-9*(1+|g(x)|).
std::vector<std::string> check_subgradient_inequality(const PiecewiseMaxFunction& g,
                                                      const Vector& lb, const Vector& ub,
                                                      int n_pairs, std::uint64_t seed);

}  // namespace monpg

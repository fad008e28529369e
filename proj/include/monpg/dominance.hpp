#pragma once

#include <vector>

#include "monpg/types.hpp"

namespace monpg {

/// Pareto dominance for minimization: a dominates b iff a <= b componentwise
/// and a != b. Throws std::invalid_argument on length mismatch.
bool dominates(const Vector& a, const Vector& b);

/// Indices of the points not dominated by any other point, in input order.
std::vector<std::size_t> nondominated_indices(const std::vector<Vector>& values);

/// (x, F(x)) pair as collected from solver runs.
struct FrontPoint {
  Vector x;
  Vector f;
};

/// Stable nondominated filter over (x, F(x)) pairs.
std::vector<FrontPoint> nondominated_filter(const std::vector<FrontPoint>& points);

}  // namespace monpg

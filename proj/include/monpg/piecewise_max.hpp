#pragma once

#include <vector>

#include "monpg/convex_piece.hpp"
#include "monpg/types.hpp"

namespace monpg {

/// Result of a subgradient query on a piecewise-max function: the indices of
/// the pieces active at x and one subgradient (the gradient of the
/// lowest-indexed active piece, a deterministic tie-break).
struct SubgradientResult {
  std::vector<int> active;
  Vector xi;
};

/// g(x) = max_k piece_k(x), the nonsmooth convex part of an objective.
/// Evaluation takes the exact max, no smoothing.
struct PiecewiseMaxFunction {
  std::vector<ConvexPiece> pieces;

  PiecewiseMaxFunction() = default;
  explicit PiecewiseMaxFunction(std::vector<ConvexPiece> ps);

  Index dimension() const { return pieces.empty() ? 0 : pieces.front().n; }
  Index piece_count() const { return static_cast<Index>(pieces.size()); }

  double value(const Vector& x) const;

  /// Zero function represented as one affine piece, so every objective has
  /// at least one piece.
  static PiecewiseMaxFunction zero(Index n);
};

/// Active set {k : piece_k(x) >= g(x) - active_tol} and the tie-broken
/// subgradient. Negative active_tol means the default 1e-9*(1+|g(x)|).
SubgradientResult subgradient_g(const PiecewiseMaxFunction& g, const Vector& x,
                                double active_tol = -1.0);

}  // namespace monpg

// Shared generators for random strongly convex minimax instances, scaled so
// the minimizer stays well inside the grid oracle's scan region.
#pragma once

#include <cstdint>

#include "monpg/problem.hpp"
#include "monpg/rng.hpp"
#include "monpg/test_problems.hpp"

namespace test_instances {

using namespace monpg;

// m objectives over R^n: quadratic smooth parts with sigma in [1, 2],
// moderate gradients, and 1-3 affine/quadratic pieces per objective. All
// coefficients stay small so |argmin| <= ~3.
inline MultiObjectiveProblem random_strongly_convex(Index n, Index m, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<SmoothFunction> smooth;
  std::vector<PiecewiseMaxFunction> nonsmooth;
  for (Index j = 0; j < m; ++j) {
    const double sigma = rng.next_in(1.0, 2.0);
    Matrix r(n, n);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) r(a, b) = rng.next_in(-0.7, 0.7);
    const Matrix a_mat = sigma * Matrix::Identity(n, n) + r.transpose() * r;
    Vector center(n);
    for (Index i = 0; i < n; ++i) center[i] = rng.next_in(-1.5, 1.5);
    smooth.push_back(SmoothFunction::quadratic(a_mat, center));

    std::vector<ConvexPiece> pieces;
    const int n_pieces = 1 + static_cast<int>(rng.next_in(0, 3));
    for (int k = 0; k < n_pieces; ++k) {
      if (rng.next_unit() < 0.5) {
        Vector u(n);
        for (Index i = 0; i < n; ++i) u[i] = rng.next_in(-1.0, 1.0);
        pieces.push_back(ConvexPiece::affine(u, rng.next_in(-1.0, 1.0)));
      } else {
        Vector diag_a(n), b(n);
        for (Index i = 0; i < n; ++i) diag_a[i] = rng.next_in(0.0, 1.5);
        for (Index i = 0; i < n; ++i) b[i] = rng.next_in(-1.0, 1.0);
        Matrix qa = Matrix::Zero(n, n);
        qa.diagonal() = diag_a;
        pieces.push_back(ConvexPiece::quadratic(qa, b, rng.next_in(-1.0, 1.0)));
      }
    }
    nonsmooth.emplace_back(std::move(pieces));
  }
  return MultiObjectiveProblem("random-sc-" + std::to_string(seed), n, std::move(smooth),
                               std::move(nonsmooth), Vector::Constant(n, -3.0),
                               Vector::Constant(n, 3.0));
}

}  // namespace test_instances

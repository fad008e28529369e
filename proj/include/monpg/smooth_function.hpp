#pragma once

#include <functional>
#include <optional>
#include <string>

#include "monpg/types.hpp"

namespace monpg {

/// Smooth convex component of a composite objective. Value, gradient and
/// Hessian are supplied as callbacks; `strong_convexity` is the declared
/// modulus (0 for merely convex) and `grad_lipschitz` the declared Lipschitz
/// constant of the gradient when known. Both are trusted declarations used
/// by solver invariant checks, not measured quantities.
struct SmoothFunction {
  Index n = 0;
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> gradient;
  std::function<Matrix(const Vector&)> hessian;
  double strong_convexity = 0.0;
  std::optional<double> grad_lipschitz;

  static SmoothFunction zero(Index n);

  /// f(x) = 1/2 (x-center)' A (x-center) + c. Declares sigma = lambda_min(A)
  /// and L = lambda_max(A) unless overridden.
  static SmoothFunction quadratic(const Matrix& A, const Vector& center, double c = 0.0);

  /// f(x) = sum_i scale_i (x_i - center_i)^4, convex for scale >= 0.
  static SmoothFunction quartic_shift(const Vector& scale, const Vector& center);
};

/// Central finite-difference gradient of `value`, step 1e-6*(1+|x_i|) per
/// coordinate. Used by validation checks.
Vector central_diff_gradient(const std::function<double(const Vector&)>& value, const Vector& x);

/// Hessian as central differences of the analytic gradient (same step rule),
/// symmetrized. Differencing the gradient rather than the value keeps the
/// roundoff at first-difference levels.
Matrix central_diff_hessian(const std::function<Vector(const Vector&)>& gradient,
                            const Vector& x);

/// Replaces gradient/hessian by forward differences of value with step
/// h_i = 1e-6*(1+|x_i|). The forward-difference cost model (n evals per
/// gradient, n(n+1)/2 per Hessian) is what eval_accounting charges for.
SmoothFunction with_forward_differences(const SmoothFunction& f);

}  // namespace monpg

#pragma once

#include <functional>

#include "monpg/types.hpp"

namespace monpg {

/// One smooth convex piece of a piecewise-max function. Closed-form kinds
/// carry their parameters; Generic carries callbacks plus a declared-convex
/// flag (validation samples the Hessian to back the declaration up).
struct ConvexPiece {
  enum class Kind { Affine, Quadratic, ExpAffine, Generic };

  Kind kind = Kind::Affine;
  Index n = 0;

  // Affine: u'x + c.     Quadratic: 1/2 x'Ax + b'x + c.
  // ExpAffine: s*exp(u'x + c), s > 0.
  Vector u;
  Matrix A;
  Vector b;
  double c = 0.0;
  double scale = 1.0;

  std::function<double(const Vector&)> generic_value;
  std::function<Vector(const Vector&)> generic_gradient;
  std::function<Matrix(const Vector&)> generic_hessian;
  bool declared_convex = false;

  double value(const Vector& x) const;
  Vector gradient(const Vector& x) const;
  Matrix hessian(const Vector& x) const;

  static ConvexPiece affine(const Vector& u, double c);
  static ConvexPiece quadratic(const Matrix& A, const Vector& b, double c);
  static ConvexPiece exp_affine(double scale, const Vector& u, double c);
  static ConvexPiece generic(Index n, std::function<double(const Vector&)> value,
                             std::function<Vector(const Vector&)> gradient,
                             std::function<Matrix(const Vector&)> hessian,
                             bool declared_convex = true);
};

}  // namespace monpg

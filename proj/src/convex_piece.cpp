#include "monpg/convex_piece.hpp"

#include <cmath>
#include <stdexcept>

namespace monpg {

double ConvexPiece::value(const Vector& x) const {
  switch (kind) {
    case Kind::Affine:
      return u.dot(x) + c;
    case Kind::Quadratic:
      return 0.5 * x.dot(A * x) + b.dot(x) + c;
    case Kind::ExpAffine:
      return scale * std::exp(u.dot(x) + c);
    case Kind::Generic:
      return generic_value(x);
  }
  throw std::logic_error("ConvexPiece: bad kind");
}

Vector ConvexPiece::gradient(const Vector& x) const {
  switch (kind) {
    case Kind::Affine:
      return u;
    case Kind::Quadratic:
      return A * x + b;
    case Kind::ExpAffine:
      return (scale * std::exp(u.dot(x) + c)) * u;
    case Kind::Generic:
      return generic_gradient(x);
  }
  throw std::logic_error("ConvexPiece: bad kind");
}

Matrix ConvexPiece::hessian(const Vector& x) const {
  switch (kind) {
    case Kind::Affine:
      return Matrix::Zero(n, n);
    case Kind::Quadratic:
      return A;
    case Kind::ExpAffine:
      return (scale * std::exp(u.dot(x) + c)) * (u * u.transpose());
    case Kind::Generic:
      return generic_hessian(x);
  }
  throw std::logic_error("ConvexPiece: bad kind");
}

ConvexPiece ConvexPiece::affine(const Vector& u, double c) {
  ConvexPiece p;
  p.kind = Kind::Affine;
  p.n = u.size();
  p.u = u;
  p.c = c;
  return p;
}

ConvexPiece ConvexPiece::quadratic(const Matrix& A, const Vector& b, double c) {
  if (A.rows() != A.cols() || A.rows() != b.size())
    throw std::invalid_argument("ConvexPiece::quadratic: shape mismatch");
  ConvexPiece p;
  p.kind = Kind::Quadratic;
  p.n = b.size();
  p.A = 0.5 * (A + A.transpose());
  p.b = b;
  p.c = c;
  return p;
}

ConvexPiece ConvexPiece::exp_affine(double scale, const Vector& u, double c) {
  if (!(scale > 0)) throw std::invalid_argument("ConvexPiece::exp_affine: scale must be > 0");
  ConvexPiece p;
  p.kind = Kind::ExpAffine;
  p.n = u.size();
  p.scale = scale;
  p.u = u;
  p.c = c;
  return p;
}

ConvexPiece ConvexPiece::generic(Index n, std::function<double(const Vector&)> value,
                                 std::function<Vector(const Vector&)> gradient,
                                 std::function<Matrix(const Vector&)> hessian,
                                 bool declared_convex) {
  ConvexPiece p;
  p.kind = Kind::Generic;
  p.n = n;
  p.generic_value = std::move(value);
  p.generic_gradient = std::move(gradient);
  p.generic_hessian = std::move(hessian);
  p.declared_convex = declared_convex;
  return p;
}

}  // namespace monpg

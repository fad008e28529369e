#include "monpg/smooth_function.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>

namespace monpg {

SmoothFunction SmoothFunction::zero(Index n) {
  SmoothFunction f;
  f.n = n;
  f.value = [](const Vector&) { return 0.0; };
  f.gradient = [n](const Vector&) { return Vector::Zero(n).eval(); };
  f.hessian = [n](const Vector&) { return Matrix::Zero(n, n).eval(); };
  f.strong_convexity = 0.0;
  return f;
}

SmoothFunction SmoothFunction::quadratic(const Matrix& A, const Vector& center, double c) {
  if (A.rows() != A.cols() || A.rows() != center.size())
    throw std::invalid_argument("quadratic: A must be square and match center");
  SmoothFunction f;
  f.n = A.rows();
  f.value = [A, center, c](const Vector& x) {
    Vector d = x - center;
    return 0.5 * d.dot(A * d) + c;
  };
  f.gradient = [A, center](const Vector& x) { return (A * (x - center)).eval(); };
  f.hessian = [A](const Vector&) { return A; };
  Eigen::SelfAdjointEigenSolver<Matrix> es(A);
  f.strong_convexity = es.eigenvalues().minCoeff();
  f.grad_lipschitz = es.eigenvalues().maxCoeff();
  return f;
}

SmoothFunction SmoothFunction::quartic_shift(const Vector& scale, const Vector& center) {
  if (scale.size() != center.size())
    throw std::invalid_argument("quartic_shift: scale/center size mismatch");
  if ((scale.array() < 0).any())
    throw std::invalid_argument("quartic_shift: scale must be nonnegative");
  SmoothFunction f;
  f.n = scale.size();
  f.value = [scale, center](const Vector& x) {
    return (scale.array() * (x - center).array().pow(4)).sum();
  };
  f.gradient = [scale, center](const Vector& x) {
    return (4.0 * scale.array() * (x - center).array().pow(3)).matrix().eval();
  };
  f.hessian = [scale, center](const Vector& x) {
    Matrix h = Matrix::Zero(x.size(), x.size());
    h.diagonal() = 12.0 * scale.array() * (x - center).array().square();
    return h;
  };
  f.strong_convexity = 0.0;  // Hessian vanishes wherever x_i = center_i
  return f;
}

namespace {
inline double fd_step(double xi) { return 1e-6 * (1.0 + std::abs(xi)); }
}  // namespace

Vector central_diff_gradient(const std::function<double(const Vector&)>& value, const Vector& x) {
  Vector g(x.size());
  Vector xp = x, xm = x;
  for (Index i = 0; i < x.size(); ++i) {
    const double h = fd_step(x[i]);
    xp[i] = x[i] + h;
    xm[i] = x[i] - h;
    g[i] = (value(xp) - value(xm)) / (2.0 * h);
    xp[i] = x[i];
    xm[i] = x[i];
  }
  return g;
}

Matrix central_diff_hessian(const std::function<Vector(const Vector&)>& gradient,
                            const Vector& x) {
  const Index n = x.size();
  Matrix h(n, n);
  Vector xp = x, xm = x;
  for (Index i = 0; i < n; ++i) {
    const double hi = fd_step(x[i]);
    xp[i] = x[i] + hi;
    xm[i] = x[i] - hi;
    h.col(i) = (gradient(xp) - gradient(xm)) / (2.0 * hi);
    xp[i] = x[i];
    xm[i] = x[i];
  }
  return 0.5 * (h + h.transpose());
}

SmoothFunction with_forward_differences(const SmoothFunction& f) {
  SmoothFunction out = f;
  auto value = f.value;
  out.gradient = [value](const Vector& x) {
    const double f0 = value(x);
    Vector g(x.size());
    Vector y = x;
    for (Index i = 0; i < x.size(); ++i) {
      const double h = fd_step(x[i]);
      y[i] = x[i] + h;
      g[i] = (value(y) - f0) / h;
      y[i] = x[i];
    }
    return g;
  };
  out.hessian = [value](const Vector& x) {
    const Index n = x.size();
    const double f0 = value(x);
    Vector fi(n);
    Vector y = x;
    for (Index i = 0; i < n; ++i) {
      y[i] = x[i] + fd_step(x[i]);
      fi[i] = value(y);
      y[i] = x[i];
    }
    Matrix h(n, n);
    for (Index i = 0; i < n; ++i) {
      const double hi = fd_step(x[i]);
      for (Index j = i; j < n; ++j) {
        const double hj = fd_step(x[j]);
        y = x;
        y[i] += hi;
        y[j] += hj;
        const double fij = value(y);
        h(i, j) = (fij - fi[i] - fi[j] + f0) / (hi * hj);
        h(j, i) = h(i, j);
      }
    }
    return (0.5 * (h + h.transpose())).eval();
  };
  return out;
}

}  // namespace monpg

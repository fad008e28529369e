#include "monpg/piecewise_max.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace monpg {

PiecewiseMaxFunction::PiecewiseMaxFunction(std::vector<ConvexPiece> ps) : pieces(std::move(ps)) {
  if (pieces.empty()) throw std::invalid_argument("PiecewiseMaxFunction: need at least one piece");
  for (const auto& p : pieces)
    if (p.n != pieces.front().n)
      throw std::invalid_argument("PiecewiseMaxFunction: pieces disagree on dimension");
}

double PiecewiseMaxFunction::value(const Vector& x) const {
  double v = -std::numeric_limits<double>::infinity();
  for (const auto& p : pieces) v = std::max(v, p.value(x));
  return v;
}

PiecewiseMaxFunction PiecewiseMaxFunction::zero(Index n) {
  return PiecewiseMaxFunction({ConvexPiece::affine(Vector::Zero(n), 0.0)});
}

SubgradientResult subgradient_g(const PiecewiseMaxFunction& g, const Vector& x,
                                double active_tol) {
  if (x.size() != g.dimension())
    throw std::invalid_argument("subgradient_g: dimension mismatch");
  std::vector<double> vals(g.pieces.size());
  double gx = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < g.pieces.size(); ++k) {
    vals[k] = g.pieces[k].value(x);
    gx = std::max(gx, vals[k]);
  }
  if (active_tol < 0) active_tol = 1e-9 * (1.0 + std::abs(gx));

  SubgradientResult out;
  for (std::size_t k = 0; k < g.pieces.size(); ++k)
    if (vals[k] >= gx - active_tol) out.active.push_back(static_cast<int>(k));
  // lowest-indexed active piece decides the reported subgradient
  out.xi = g.pieces[static_cast<std::size_t>(out.active.front())].gradient(x);
  return out;
}

}  // namespace monpg

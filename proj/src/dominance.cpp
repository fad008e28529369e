#include "monpg/dominance.hpp"

#include <stdexcept>

namespace monpg {

bool dominates(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dominates: length mismatch");
  bool strictly_better_somewhere = false;
  for (Index i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strictly_better_somewhere = true;
  }
  return strictly_better_somewhere;
}

std::vector<std::size_t> nondominated_indices(const std::vector<Vector>& values) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < values.size(); ++i) {
    bool dominated = false;
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (k != i && dominates(values[k], values[i])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) keep.push_back(i);
  }
  return keep;
}

std::vector<FrontPoint> nondominated_filter(const std::vector<FrontPoint>& points) {
  std::vector<Vector> values;
  values.reserve(points.size());
  for (const auto& p : points) values.push_back(p.f);
  std::vector<FrontPoint> out;
  for (std::size_t i : nondominated_indices(values)) out.push_back(points[i]);
  return out;
}

}  // namespace monpg

#pragma once

#include <stdexcept>
#include <string>

namespace monpg {

/// Line search exhausted its backtracking budget. The theory guarantees a
/// finite step at non-critical points, so hitting this signals numerical
/// trouble rather than a legitimate outcome.
class LineSearchStall : public std::runtime_error {
 public:
  explicit LineSearchStall(const std::string& what) : std::runtime_error(what) {}
};

/// Weighted-sum scalarization would require expanding more pieces than the
/// supported cap.
class UnsupportedProblem : public std::runtime_error {
 public:
  explicit UnsupportedProblem(const std::string& what) : std::runtime_error(what) {}
};

/// Multi-start produced no successful run to build a front from.
class EmptyFront : public std::runtime_error {
 public:
  explicit EmptyFront(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace monpg

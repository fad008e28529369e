#pragma once

#include <Eigen/Dense>

namespace monpg {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

}  // namespace monpg

#pragma once

#include <Eigen/Dense>

namespace tq {

// Dense matrix exponential by scaling-and-squaring with Pade approximants
// (orders 3/5/7/9/13 selected from the 1-norm).
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

}  // namespace tq

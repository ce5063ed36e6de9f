#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace qnet {

using Index = Eigen::Index;
using Complex = std::complex<double>;

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

}  // namespace qnet

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <numbers>

namespace sturm {

using Index = Eigen::Index;
using Scalar = double;
using Complex = std::complex<double>;
using Vector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXd;

inline constexpr double kPi = std::numbers::pi_v<double>;

}  // namespace sturm

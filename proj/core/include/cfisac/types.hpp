#pragma once

#include <Eigen/Dense>
#include <complex>

namespace cfisac {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;
using Vec2 = Eigen::Vector2d;

}  // namespace cfisac

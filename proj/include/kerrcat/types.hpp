#pragma once

#include <complex>

#include <Eigen/Dense>

namespace kerrcat {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr const char* kVersion = "0.1.0";

} // namespace kerrcat

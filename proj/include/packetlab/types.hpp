#pragma once

#include <complex>
#include <Eigen/Dense>

namespace packetlab {

using Real = double;
using Complex = std::complex<Real>;

template <class Scalar>
using ArrayX = Eigen::Array<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using ArrayXr = ArrayX<Real>;
using ArrayXc = ArrayX<Complex>;
using MatrixXr = MatrixX<Real>;
using MatrixXc = MatrixX<Complex>;
using Vector3r = Eigen::Vector3d;
using Matrix3r = Eigen::Matrix3d;

using Index = Eigen::Index;

inline constexpr Complex kI{0.0, 1.0};

}  // namespace packetlab

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace epsreg {

using cplx = std::complex<double>;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixXd = Matrix<double>;
using MatrixXc = Matrix<cplx>;
using VectorXd = Vector<double>;
using VectorXc = Vector<cplx>;

}  // namespace epsreg

#pragma once

// Separated solutions b_i^(j)(r, phi, eps) = g_i(r, eps) H_i^(j)(phi) of
// (-Delta + eps) b = 0 on the unit disk, with H_i^(j) eigenfunctions of the
// conormal operator n o A:
//
//   Gradient:       H_0 = 1/sqrt(2 pi), H_i^(1) = cos(i phi)/sqrt(pi),
//                   H_i^(2) = sin(i phi)/sqrt(pi);          lambda_i = i
//   CauchyRiemann:  H_0 = 1/sqrt(2 pi), H_i^(1) = e^{+i i phi}/sqrt(pi),
//                   H_i^(2) = e^{-i i phi}/sqrt(pi);        lambda_i^(1) = 0,
//                                                           lambda_i^(2) = 2i

#include <span>
#include <vector>

#include "epsreg/bessel.hpp"
#include "epsreg/dirac.hpp"

namespace epsreg {

struct PolarPoint {
  double r = 0.0;
  double phi = 0.0;
};

class BasisFunction {
 public:
  /// branch is 1 for order 0; 1 or 2 otherwise.
  BasisFunction(DiracKind kind, int order, int branch, double epsilon);

  DiracKind kind() const noexcept { return kind_; }
  int order() const noexcept { return radial_.order(); }
  int branch() const noexcept { return branch_; }
  double epsilon() const noexcept { return radial_.epsilon(); }
  const RadialFactor& radial() const noexcept { return radial_; }
  double lambda() const noexcept { return lambda_; }
  /// Angular normalization constant, 1/sqrt(2 pi) or 1/sqrt(pi).
  double normalization() const noexcept { return normalization_; }

  cplx angular(double phi) const noexcept;
  cplx angular_derivative(double phi) const noexcept;

  /// b(r, phi); throws DomainError unless 0 <= r <= 1.
  cplx evaluate(double r, double phi) const;

  /// Exact value and Cartesian partials; no domain check so stencils may step
  /// slightly past the boundary.
  Jet jet(double x, double y) const;

  JetField as_field() const;

 private:
  DiracKind kind_;
  RadialFactor radial_;
  int branch_;
  double lambda_;
  double normalization_;
};

/// Number J of angular branches of order i in the plane.
constexpr int angular_branch_count(int order) noexcept { return order == 0 ? 1 : 2; }

/// b_0, b_1^(1), b_1^(2), ..., b_N^(1), b_N^(2): 2N + 1 functions.
std::vector<BasisFunction> disk_basis(DiracKind kind, int max_order, double epsilon);

/// n(A b) on the unit circle from the closed form
/// (r g' + (lambda - i) g) H evaluated at r = 1.
cplx normal_trace(const BasisFunction& b, double phi);

/// g_i'(1) + (lambda - i) g_i(1) with the r g' convention at r = 1.
double nonvanishing_check(DiracKind kind, int order, int branch, double epsilon);

/// max |(-Delta + eps) u| over the points with a 5-point Laplacian of the
/// given step. Points must satisfy 1e-3 <= r < 1 (InputError otherwise).
double helmholtz_residual(const ScalarField& u, double epsilon,
                          std::span<const PolarPoint> points, double step = 1e-4);

double check_helmholtz(const BasisFunction& b, double epsilon,
                       std::span<const PolarPoint> points);

/// Re z^i (branch 1) or Im z^i (branch 2) with exact partials; the Gradient
/// eigenfunctions r^i cos(i phi), r^i sin(i phi).
JetField harmonic_monomial(int degree, int branch);

}  // namespace epsreg

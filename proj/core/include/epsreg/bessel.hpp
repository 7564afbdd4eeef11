#pragma once

// Modified Bessel functions of the first kind for integer order, and the
// radial factors g_i(r, eps) = I_i(sqrt(eps) r) bounded at the origin of the
// planar equation r^2 g'' + r g' - (i^2 + eps r^2) g = 0.

#include <vector>

namespace epsreg {

inline constexpr int kMaxBesselOrder = 60;
inline constexpr double kMaxBesselArgument = 700.0;

/// I_nu(x) for 0 <= nu <= 60, 0 <= x <= 700. Power series up to x = 15,
/// Miller downward recurrence normalized by e^x = I_0 + 2 sum I_k above.
/// Throws DomainError for x < 0 or nu out of range, RangeError for x > 700.
double bessel_i(int nu, double x);

/// I_nu'(x) = (I_{nu-1}(x) + I_{nu+1}(x)) / 2 with I_{-1} = I_1. At x = 0
/// returns the one-sided limit (1/2 for nu = 1, else 0).
double bessel_i_prime(int nu, double x);

/// I_0(x), ..., I_nmax(x) from a single evaluation pass. nmax may exceed
/// kMaxBesselOrder by a few orders so derivatives of the top order are
/// available.
std::vector<double> bessel_i_sequence(int nmax, double x);

struct RadialValue {
  double value = 0.0;
  double derivative = 0.0;  // d/dr
};

/// g_i(r, eps) = I_i(sqrt(eps) r).
class RadialFactor {
 public:
  RadialFactor(int order, double epsilon);

  int order() const noexcept { return order_; }
  double epsilon() const noexcept { return epsilon_; }
  double scale() const noexcept { return scale_; }

  /// Value and r-derivative on 0 <= r <= 1 (one-sided at r = 0). Throws
  /// DomainError outside [0, 1].
  RadialValue eval(double r) const;

  /// Same without the range check; finite-difference stencils step slightly
  /// past r = 1.
  RadialValue eval_unchecked(double r) const;

  /// g''(r) via I'' = (I_{nu-2} + 2 I_nu + I_{nu+2}) / 4.
  double second_derivative(double r) const;

 private:
  int order_;
  double epsilon_;
  double scale_;
};

RadialValue radial_factor_eval(const RadialFactor& g, double r);

}  // namespace epsreg

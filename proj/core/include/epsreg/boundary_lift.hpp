#pragma once

// Lift of Cauchy data u0 on Gamma to a field U_0 on the disk with t(U_0) = u0
// on Gamma. u0 is continued past the endpoints of Gamma by its linear Taylor
// term under a cos^2 window that reaches zero mid-complement, and the result
// is extended harmonically by a truncated Fourier-Poisson series.

#include <functional>
#include <vector>

#include "epsreg/arc.hpp"
#include "epsreg/dirac.hpp"

namespace epsreg {

using BoundaryData = std::function<cplx(double phi)>;

class BoundaryLift {
 public:
  /// modes < 0 selects n_phi / 4. Throws InputError when u0 cannot be
  /// evaluated (throws or returns non-finite values) on Gamma.
  BoundaryLift(const ArcSpec& arc, BoundaryData u0, int n_phi = 256, int modes = -1);

  /// The C^1 boundary function before harmonic extension.
  cplx boundary_value(double phi) const;
  /// Harmonic extension with exact partials.
  Jet jet(double x, double y) const noexcept;
  JetField field() const;

  int modes() const noexcept { return modes_; }
  /// Fourier coefficients c_m, m = -modes..modes, stored at m + modes.
  const std::vector<cplx>& coefficients() const noexcept { return coeffs_; }

 private:
  ArcSpec arc_;
  BoundaryData u0_;
  int modes_;
  cplx start_value_{}, start_slope_{};
  cplx end_value_{}, end_slope_{};
  std::vector<cplx> coeffs_;
};

}  // namespace epsreg

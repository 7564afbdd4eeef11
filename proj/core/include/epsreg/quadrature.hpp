#pragma once

#include <vector>

#include "epsreg/linalg.hpp"

namespace epsreg {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [a, b].
GaussRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// Tensor rule on the unit disk: Gauss-Legendre in r on [0, 1] with the
/// Jacobian r folded into the weights, uniform trapezoid in phi on [0, 2 pi).
class DiskQuadrature {
 public:
  explicit DiskQuadrature(int n_r = 64, int n_phi = 256);

  int n_r() const noexcept { return n_r_; }
  int n_phi() const noexcept { return n_phi_; }
  std::size_t size() const noexcept { return x_.size(); }

  // Flattened node arrays, index = ir * n_phi + ip.
  const std::vector<double>& x() const noexcept { return x_; }
  const std::vector<double>& y() const noexcept { return y_; }
  const std::vector<double>& r() const noexcept { return r_; }
  const std::vector<double>& phi() const noexcept { return phi_; }
  const std::vector<double>& weights() const noexcept { return w_; }

  template <class F>
  auto integrate(F&& f) const {
    using R = decltype(f(0.0, 0.0));
    R sum{};
    for (std::size_t k = 0; k < x_.size(); ++k) sum += w_[k] * f(x_[k], y_[k]);
    return sum;
  }

 private:
  int n_r_;
  int n_phi_;
  std::vector<double> x_, y_, r_, phi_, w_;
};

}  // namespace epsreg

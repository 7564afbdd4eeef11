#include "epsreg/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "epsreg/errors.hpp"

namespace epsreg {

GaussRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw InputError("gauss_legendre: need at least one node");
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // Recompute the derivative at the converged root for the weight.
    double p0 = 1.0, p1 = 0.0;
    for (int k = 1; k <= n; ++k) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = mid - half * z;
    rule.nodes[hi] = mid + half * z;
    rule.weights[lo] = half * w;
    rule.weights[hi] = half * w;
  }
  return rule;
}

DiskQuadrature::DiskQuadrature(int n_r, int n_phi) : n_r_(n_r), n_phi_(n_phi) {
  if (n_r < 1 || n_phi < 1) throw InputError("DiskQuadrature: node counts must be positive");
  const auto radial = gauss_legendre(n_r, 0.0, 1.0);
  const double dphi = 2.0 * std::numbers::pi / n_phi;
  const std::size_t total = static_cast<std::size_t>(n_r) * static_cast<std::size_t>(n_phi);
  x_.reserve(total);
  y_.reserve(total);
  r_.reserve(total);
  phi_.reserve(total);
  w_.reserve(total);
  for (int i = 0; i < n_r; ++i) {
    const double r = radial.nodes[static_cast<std::size_t>(i)];
    const double wr = radial.weights[static_cast<std::size_t>(i)] * r;
    for (int j = 0; j < n_phi; ++j) {
      const double phi = j * dphi;
      x_.push_back(r * std::cos(phi));
      y_.push_back(r * std::sin(phi));
      r_.push_back(r);
      phi_.push_back(phi);
      w_.push_back(wr * dphi);
    }
  }
}

}  // namespace epsreg

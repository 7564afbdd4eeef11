#pragma once
// Generators and independent reference computations shared by the tests.
// Nothing here calls into the library under test.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>

#include <Eigen/Dense>

namespace epsreg::testing {

/// splitmix64: tiny, portable and fully specified, so property tests see the
/// same cases on every platform.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform(double lo = -1.0, double hi = 1.0) {
    return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
  int integer(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double log_uniform(double lo_exp, double hi_exp) {
    return std::pow(10.0, uniform(lo_exp, hi_exp));
  }
  Eigen::MatrixXd matrix(int rows, int cols) {
    Eigen::MatrixXd m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = uniform();
    return m;
  }
  Eigen::VectorXd vector(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = uniform();
    return v;
  }

 private:
  std::uint64_t state_;
};

/// I_nu(x) from the first `terms` terms of sum (x/2)^{2k+nu} / (k! (k+nu)!).
inline double bessel_series(int nu, double x, int terms = 30) {
  double term = 1.0;
  for (int k = 1; k <= nu; ++k) term *= (x / 2.0) / k;
  double sum = term;
  for (int k = 1; k < terms; ++k) {
    term *= (x / 2.0) * (x / 2.0) / (static_cast<double>(k) * (k + nu));
    sum += term;
  }
  return sum;
}

/// Composite Simpson rule with n (even) panels.
template <class F>
auto simpson(F&& f, double a, double b, int n = 2000) {
  using R = decltype(f(a));
  const double h = (b - a) / n;
  R sum = f(a) + f(b);
  for (int k = 1; k < n; ++k) sum += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
  return sum * (h / 3.0);
}

/// Largest |G_ij| / sqrt(|G_ii G_jj|) over i != j.
template <class M>
double relative_offdiag(const M& g) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      if (i == j) continue;
      const double s = std::sqrt(std::abs(g(i, i)) * std::abs(g(j, j)));
      if (s > 0.0) worst = std::max(worst, std::abs(g(i, j)) / s);
    }
  }
  return worst;
}

}  // namespace epsreg::testing

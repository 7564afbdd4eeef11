#include "epsreg/ode1d.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "epsreg/errors.hpp"
#include "epsreg/parallel.hpp"
#include "epsreg/regularization.hpp"

namespace epsreg {

namespace {

using boost::math::quadrature::gauss_kronrod;

constexpr double kTol = 1e-12;
constexpr unsigned kMaxDepth = 12;
constexpr double kScaledBeyond = 30.0;

template <class F>
double integrate(F&& f, double lo, double hi) {
  if (hi <= lo) return 0.0;
  return gauss_kronrod<double, 31>::integrate(f, lo, hi, kMaxDepth, kTol);
}

// Ratios over cosh(k L) for arguments with |z| <= L, all bounded by one. The
// direct hyperbolic functions are exact enough (and free of cancellation for
// small k) until k L is large; past that the exp-scaled forms avoid overflow.
struct Ratios {
  double k;
  double len;
  bool scaled;

  Ratios(double k_, double len_) : k(k_), len(len_), scaled(k_ * len_ > kScaledBeyond) {}

  double cosh_ratio(double z) const {
    if (!scaled) return std::cosh(k * z) / std::cosh(k * len);
    const double az = std::abs(z);
    return (std::exp(k * (az - len)) + std::exp(-k * (az + len))) / (1.0 + std::exp(-2.0 * k * len));
  }
  double sinh_ratio(double z) const {
    if (!scaled) return std::sinh(k * z) / std::cosh(k * len);
    const double az = std::abs(z);
    const double s = -std::exp(k * (az - len)) * std::expm1(-2.0 * k * az) /
                     (1.0 + std::exp(-2.0 * k * len));
    return z < 0.0 ? -s : s;
  }
  // sinh(k p) sinh(k q) / cosh(k L) and cosh(k p) sinh(k q) / cosh(k L) for
  // p, q >= 0 and p + q <= L.
  double sinh_product_ratio(double p, double q) const {
    if (!scaled) return std::sinh(k * p) * std::sinh(k * q) / std::cosh(k * len);
    return std::exp(k * (p + q - len)) * std::expm1(-2.0 * k * p) * std::expm1(-2.0 * k * q) /
           (2.0 * (1.0 + std::exp(-2.0 * k * len)));
  }
  double cosh_sinh_ratio(double p, double q) const {
    if (!scaled) return std::cosh(k * p) * std::sinh(k * q) / std::cosh(k * len);
    return -std::exp(k * (p + q - len)) * (1.0 + std::exp(-2.0 * k * p)) *
           std::expm1(-2.0 * k * q) / (2.0 * (1.0 + std::exp(-2.0 * k * len)));
  }
};

void check_point(const Ode1dProblem& p, double x) {
  if (!(x >= p.a && x <= p.b)) throw DomainError("x must lie in [a, b]");
}

}  // namespace

void validate(const Ode1dProblem& p) {
  if (!(std::isfinite(p.a) && std::isfinite(p.b) && p.a < p.b)) {
    throw InputError("ode1d: need finite a < b");
  }
  if (!std::isfinite(p.u0)) throw InputError("ode1d: u0 must be finite");
  if (!p.f) throw InputError("ode1d: f is not set");
  for (int k = 0; k <= 100; ++k) {
    if (!std::isfinite(p.f(p.a + (p.b - p.a) * k / 100.0))) {
      throw InputError("ode1d: f is not finite on [a, b]");
    }
  }
}

double exact_solution(const Ode1dProblem& p, double x) {
  check_point(p, x);
  if (x == p.a) return p.u0;
  return p.u0 + integrate(p.f, p.a, x);
}

ValueAndDerivative perturbed_solution(const Ode1dProblem& p, double x) {
  if (!(p.epsilon > 0.0) || !std::isfinite(p.epsilon)) {
    throw InputError("ode1d: epsilon must be positive");
  }
  check_point(p, x);
  const double a = p.a, b = p.b;
  const Ratios r(std::sqrt(p.epsilon), b - a);
  const double len = b - a;
  const double k = r.k;

  // Green's function of v'' - eps v = f' (in the form v = int G f), split at y = x.
  auto g_left = [&](double y) {  // y < x
    return 0.5 * (r.cosh_ratio(x - y - len) + r.cosh_ratio(x + y - a - b)) * p.f(y);
  };
  auto g_right = [&](double y) {  // y > x
    return -r.sinh_product_ratio(x - a, b - y) * p.f(y);
  };
  auto dg_left = [&](double y) {
    return 0.5 * k * (r.sinh_ratio(x - y - len) + r.sinh_ratio(x + y - a - b)) * p.f(y);
  };
  auto dg_right = [&](double y) {
    return -k * r.cosh_sinh_ratio(x - a, b - y) * p.f(y);
  };

  ValueAndDerivative out;
  out.value = x == a ? p.u0 : p.u0 + integrate(g_left, a, x) + integrate(g_right, x, b);
  out.derivative = p.f(x) + integrate(dg_left, a, x) + integrate(dg_right, x, b);
  return out;
}

std::vector<ConvergenceRow> convergence_report(const Ode1dProblem& p,
                                               std::span<const double> schedule,
                                               int grid_points, unsigned threads) {
  validate(p);
  validate_schedule(schedule);
  if (grid_points < 2) throw InputError("ode1d: need at least two grid points");

  const auto n = static_cast<std::size_t>(grid_points);
  std::vector<double> xs(n), exact(n), exact_d(n);
  for (std::size_t j = 0; j < n; ++j) {
    xs[j] = j + 1 == n ? p.b : p.a + (p.b - p.a) * static_cast<double>(j) / (grid_points - 1);
  }
  // Cumulative antiderivative cell by cell.
  exact[0] = p.u0;
  for (std::size_t j = 1; j < n; ++j) exact[j] = exact[j - 1] + integrate(p.f, xs[j - 1], xs[j]);
  for (std::size_t j = 0; j < n; ++j) exact_d[j] = p.f(xs[j]);

  std::vector<ConvergenceRow> rows(schedule.size());
  parallel_for(schedule.size(), threads, [&](std::size_t i) {
    Ode1dProblem q = p;
    q.epsilon = schedule[i];
    ConvergenceRow row;
    row.epsilon = schedule[i];
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = perturbed_solution(q, xs[j]);
      row.c0_error = std::max(row.c0_error, std::abs(v.value - exact[j]));
      row.c1_error = std::max(row.c1_error, std::abs(v.derivative - exact_d[j]));
    }
    rows[i] = row;
  });
  return rows;
}

}  // namespace epsreg

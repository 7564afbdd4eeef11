#include "epsreg/disk_basis.hpp"

#include <cmath>
#include <numbers>

#include "epsreg/errors.hpp"

namespace epsreg {

namespace {

constexpr cplx kI{0.0, 1.0};
const double kInvSqrtPi = 1.0 / std::sqrt(std::numbers::pi);
const double kInvSqrtTwoPi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

cplx ipow(cplx z, int n) {
  cplx out{1.0, 0.0};
  for (int k = 0; k < n; ++k) out *= z;
  return out;
}

double eigenvalue(DiracKind kind, int order, int branch) {
  if (kind == DiracKind::Gradient) return order;
  if (order == 0 || branch == 1) return 0.0;
  return 2.0 * order;
}

}  // namespace

BasisFunction::BasisFunction(DiracKind kind, int order, int branch, double epsilon)
    : kind_(kind),
      radial_(order, epsilon),
      branch_(branch),
      lambda_(eigenvalue(kind, order, branch)),
      normalization_(order == 0 ? kInvSqrtTwoPi : kInvSqrtPi) {
  if (branch < 1 || branch > angular_branch_count(order)) {
    throw InputError("BasisFunction: branch out of range for this order");
  }
}

cplx BasisFunction::angular(double phi) const noexcept {
  const int i = order();
  if (i == 0) return normalization_;
  const double t = i * phi;
  if (kind_ == DiracKind::Gradient) {
    return normalization_ * (branch_ == 1 ? std::cos(t) : std::sin(t));
  }
  return normalization_ * std::polar(1.0, branch_ == 1 ? t : -t);
}

cplx BasisFunction::angular_derivative(double phi) const noexcept {
  const int i = order();
  if (i == 0) return 0.0;
  const double t = i * phi;
  if (kind_ == DiracKind::Gradient) {
    return normalization_ * i * (branch_ == 1 ? -std::sin(t) : std::cos(t));
  }
  const double sign = branch_ == 1 ? 1.0 : -1.0;
  return normalization_ * sign * i * kI * std::polar(1.0, sign * t);
}

cplx BasisFunction::evaluate(double r, double phi) const {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("BasisFunction: r must lie in [0, 1]");
  return radial_.eval_unchecked(r).value * angular(phi);
}

Jet BasisFunction::jet(double x, double y) const {
  const double r = std::hypot(x, y);
  const double phi = std::atan2(y, x);
  const auto g = radial_.eval_unchecked(r);
  Jet out;
  const cplx h = angular(phi);
  out.value = g.value * h;
  const int i = order();
  if (r == 0.0) {
    // Only i = 1 has a nonzero gradient at the origin: g ~ (sqrt(eps)/2) r.
    if (i == 1) {
      const double slope = 0.5 * radial_.scale();
      // g(r) H(phi) = slope * (x cos-part + y sin-part) near the origin.
      out.dx = slope * angular(0.0);
      out.dy = slope * angular(0.5 * std::numbers::pi);
    }
    return out;
  }
  const double c = x / r, s = y / r;
  const cplx dr = g.derivative * h;
  const cplx dphi_over_r = (g.value / r) * angular_derivative(phi);
  out.dx = c * dr - s * dphi_over_r;
  out.dy = s * dr + c * dphi_over_r;
  return out;
}

JetField BasisFunction::as_field() const {
  return [b = *this](double x, double y) { return b.jet(x, y); };
}

std::vector<BasisFunction> disk_basis(DiracKind kind, int max_order, double epsilon) {
  if (max_order < 0) throw InputError("disk_basis: max_order must be nonnegative");
  std::vector<BasisFunction> out;
  out.reserve(static_cast<std::size_t>(2 * max_order + 1));
  for (int i = 0; i <= max_order; ++i) {
    for (int j = 1; j <= angular_branch_count(i); ++j) out.emplace_back(kind, i, j, epsilon);
  }
  return out;
}

cplx normal_trace(const BasisFunction& b, double phi) {
  const auto g = b.radial().eval(1.0);
  return (g.derivative + (b.lambda() - b.order()) * g.value) * b.angular(phi);
}

double nonvanishing_check(DiracKind kind, int order, int branch, double epsilon) {
  if (!(epsilon > 0.0)) throw InputError("nonvanishing_check: epsilon must be positive");
  const BasisFunction b(kind, order, branch, epsilon);
  const auto g = b.radial().eval(1.0);
  return g.derivative + (b.lambda() - order) * g.value;
}

double helmholtz_residual(const ScalarField& u, double epsilon,
                          std::span<const PolarPoint> points, double step) {
  double worst = 0.0;
  for (const auto& p : points) {
    if (!(p.r >= 1e-3 && p.r < 1.0)) {
      throw InputError("helmholtz_residual: sample points must satisfy 1e-3 <= r < 1");
    }
    const double x = p.r * std::cos(p.phi), y = p.r * std::sin(p.phi);
    const cplx centre = u(x, y);
    const cplx lap = (u(x + step, y) + u(x - step, y) + u(x, y + step) + u(x, y - step) -
                      4.0 * centre) / (step * step);
    worst = std::max(worst, std::abs(-lap + epsilon * centre));
  }
  return worst;
}

double check_helmholtz(const BasisFunction& b, double epsilon,
                       std::span<const PolarPoint> points) {
  const ScalarField u = [&b](double x, double y) { return b.jet(x, y).value; };
  return helmholtz_residual(u, epsilon, points);
}

JetField harmonic_monomial(int degree, int branch) {
  if (degree < 0 || (branch != 1 && branch != 2)) {
    throw InputError("harmonic_monomial: invalid degree or branch");
  }
  return [degree, branch](double x, double y) {
    const cplx z(x, y);
    const cplx zn = ipow(z, degree);
    const cplx dz = degree == 0 ? cplx{} : static_cast<double>(degree) * ipow(z, degree - 1);
    // d/dx z^n = n z^(n-1), d/dy z^n = i n z^(n-1).
    Jet j;
    if (branch == 1) {
      j.value = zn.real();
      j.dx = dz.real();
      j.dy = (kI * dz).real();
    } else {
      j.value = zn.imag();
      j.dx = dz.imag();
      j.dy = (kI * dz).imag();
    }
    return j;
  };
}

}  // namespace epsreg

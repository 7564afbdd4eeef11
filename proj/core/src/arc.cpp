#include "epsreg/arc.hpp"

#include <cmath>
#include <numbers>

#include "epsreg/errors.hpp"
#include "epsreg/quadrature.hpp"

namespace epsreg {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double wrap_angle(double phi) noexcept {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

ArcSpec ArcSpec::between(double start, double end) {
  if (!std::isfinite(start) || !std::isfinite(end)) throw InputError("ArcSpec: non-finite angle");
  const double s = wrap_angle(start), e = wrap_angle(end);
  if (s == e) throw InputError("ArcSpec: gamma_start equals gamma_end");
  return ArcSpec(Kind::Arc, s, e);
}

ArcSpec ArcSpec::full_circle() { return ArcSpec(Kind::Full, 0.0, kTwoPi); }

ArcSpec ArcSpec::empty() { return ArcSpec(Kind::Empty, 0.0, 0.0); }

double ArcSpec::length() const noexcept {
  switch (kind_) {
    case Kind::Full: return kTwoPi;
    case Kind::Empty: return 0.0;
    case Kind::Arc: break;
  }
  return wrap_angle(end_ - start_) == 0.0 ? kTwoPi : wrap_angle(end_ - start_);
}

double ArcSpec::offset(double phi) const noexcept { return wrap_angle(phi - start_); }

bool ArcSpec::contains(double phi) const noexcept {
  if (kind_ == Kind::Full) return true;
  if (kind_ == Kind::Empty) return false;
  const double t = offset(phi);
  return t <= length() || std::abs(t - kTwoPi) < 1e-14;
}

ArcSpec ArcSpec::complement() const noexcept {
  if (kind_ == Kind::Full) return empty();
  if (kind_ == Kind::Empty) return full_circle();
  return ArcSpec(Kind::Arc, end_, start_);
}

ArcRule arc_rule(const ArcSpec& arc, int n) {
  ArcRule rule;
  if (arc.is_empty()) return rule;
  const auto g = gauss_legendre(n, 0.0, arc.length());
  rule.phi.reserve(g.nodes.size());
  for (double t : g.nodes) rule.phi.push_back(wrap_angle(arc.start() + t));
  rule.weights = g.weights;
  return rule;
}

BoundaryQuadrature boundary_quadrature(const ArcSpec& arc, int n_per_arc) {
  if (n_per_arc < 1) throw InputError("boundary_quadrature: need at least one node per arc");
  return {arc_rule(arc, n_per_arc), arc_rule(arc.complement(), n_per_arc)};
}

}  // namespace epsreg

#include "epsreg/boundary_lift.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "epsreg/errors.hpp"

namespace epsreg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSlopeStep = 1e-4;

cplx checked(const BoundaryData& u0, double phi) {
  cplx v;
  try {
    v = u0(wrap_angle(phi));
  } catch (const std::exception& e) {
    throw InputError(std::string("Cauchy datum is not evaluable on Gamma: ") + e.what());
  }
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw InputError("Cauchy datum is not finite on Gamma");
  }
  return v;
}

}  // namespace

BoundaryLift::BoundaryLift(const ArcSpec& arc, BoundaryData u0, int n_phi, int modes)
    : arc_(arc), u0_(std::move(u0)), modes_(modes < 0 ? n_phi / 4 : modes) {
  if (n_phi < 4) throw InputError("BoundaryLift: n_phi must be at least 4");
  if (2 * modes_ >= n_phi) throw InputError("BoundaryLift: too many modes for n_phi");
  coeffs_.assign(static_cast<std::size_t>(2 * modes_ + 1), cplx{});
  if (arc_.is_empty() || !u0_) return;

  if (!arc_.is_full()) {
    if (arc_.length() <= 4.0 * kSlopeStep) throw InputError("BoundaryLift: Gamma is too short");
    // One-sided second-order differences from inside Gamma.
    const double a = arc_.start(), b = arc_.end(), h = kSlopeStep;
    start_value_ = checked(u0_, a);
    end_value_ = checked(u0_, b);
    start_slope_ = (-3.0 * start_value_ + 4.0 * checked(u0_, a + h) - checked(u0_, a + 2 * h)) /
                   (2.0 * h);
    end_slope_ = (3.0 * end_value_ - 4.0 * checked(u0_, b - h) + checked(u0_, b - 2 * h)) /
                 (2.0 * h);
  }

  std::vector<cplx> samples(static_cast<std::size_t>(n_phi));
  for (int k = 0; k < n_phi; ++k) {
    samples[static_cast<std::size_t>(k)] = boundary_value(2.0 * kPi * k / n_phi);
  }
  for (int m = -modes_; m <= modes_; ++m) {
    cplx c{};
    for (int k = 0; k < n_phi; ++k) {
      c += samples[static_cast<std::size_t>(k)] * std::polar(1.0, -2.0 * kPi * m * k / n_phi);
    }
    coeffs_[static_cast<std::size_t>(m + modes_)] = c / static_cast<double>(n_phi);
  }
}

cplx BoundaryLift::boundary_value(double phi) const {
  if (arc_.is_empty() || !u0_) return 0.0;
  if (arc_.is_full() || arc_.contains(phi)) return checked(u0_, phi);
  const ArcSpec comp = arc_.complement();
  const double len = comp.length();
  const double s = comp.offset(phi);  // measured from the end of Gamma
  const double t = std::min(s, len - s);
  const double w = std::cos(kPi * t / len);
  const cplx taylor = s <= len - s ? end_value_ + end_slope_ * t : start_value_ - start_slope_ * t;
  return w * w * taylor;
}

Jet BoundaryLift::jet(double x, double y) const noexcept {
  // sum_m c_m z^m (m >= 0) + c_{-m} conj(z)^m.
  const cplx z(x, y);
  const cplx zb = std::conj(z);
  const cplx iu{0.0, 1.0};
  Jet out;
  out.value = coeffs_[static_cast<std::size_t>(modes_)];
  cplx zp{1.0, 0.0}, zbp{1.0, 0.0};  // z^(m-1), conj(z)^(m-1)
  for (int m = 1; m <= modes_; ++m) {
    const cplx cp = coeffs_[static_cast<std::size_t>(modes_ + m)];
    const cplx cm = coeffs_[static_cast<std::size_t>(modes_ - m)];
    const cplx dp = static_cast<double>(m) * cp * zp;
    const cplx dm = static_cast<double>(m) * cm * zbp;
    out.dx += dp + dm;
    out.dy += iu * (dp - dm);
    zp *= z;
    zbp *= zb;
    out.value += cp * zp + cm * zbp;
  }
  return out;
}

JetField BoundaryLift::field() const {
  return [lift = *this](double x, double y) { return lift.jet(x, y); };
}

}  // namespace epsreg

#include "epsreg/bessel.hpp"

#include <cmath>
#include <string>

#include "epsreg/errors.hpp"

namespace epsreg {

namespace {

constexpr double kSeriesSwitch = 15.0;
constexpr int kSequenceSlack = 4;

// sum_k (x/2)^(2k+nu) / (k! (k+nu)!), all terms positive.
double series(int nu, double x) {
  if (x == 0.0) return nu == 0 ? 1.0 : 0.0;
  const double half = 0.5 * x;
  const double q = half * half;
  // Leading term (x/2)^nu / nu! accumulated as a product to avoid overflow.
  double term = 1.0;
  for (int k = 1; k <= nu; ++k) term *= half / k;
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k + nu));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

// Miller's algorithm: downward recurrence I_{k-1} = I_{k+1} + (2k/x) I_k from
// a far starting index, then normalization by e^x = I_0 + 2 sum_{k>=1} I_k.
std::vector<double> miller(int nmax, double x) {
  const int start = 2 * (static_cast<int>(x) + nmax / 2 +
                         static_cast<int>(std::sqrt(60.0 * (x + nmax))) + 30);
  std::vector<double> out(static_cast<std::size_t>(nmax) + 1, 0.0);
  double above = 0.0;  // I_{k+1}
  double here = 1e-300;  // I_k
  double norm = 0.0;
  const double two_over_x = 2.0 / x;
  for (int k = start; k >= 1; --k) {
    const double below = above + k * two_over_x * here;
    above = here;
    here = below;
    // `here` now holds I_{k-1}.
    if (k - 1 <= nmax) out[static_cast<std::size_t>(k - 1)] = here;
    if (k - 1 >= 1) norm += 2.0 * here;
    if (here > 1e250) {
      const double s = 1e-250;
      here *= s;
      above *= s;
      norm *= s;
      for (auto& v : out) v *= s;
    }
  }
  norm += here;  // I_0 term
  const double factor = std::exp(x) / norm;
  for (auto& v : out) v *= factor;
  return out;
}

void check_argument(double x) {
  if (std::isnan(x) || x < 0.0) throw DomainError("bessel_i: argument must be nonnegative");
  if (x > kMaxBesselArgument) {
    throw RangeError("bessel_i: argument " + std::to_string(x) + " exceeds supported range");
  }
}

void check_order(int nu, int limit) {
  if (nu < 0 || nu > limit) {
    throw DomainError("bessel_i: order " + std::to_string(nu) + " outside supported range");
  }
}

}  // namespace

std::vector<double> bessel_i_sequence(int nmax, double x) {
  check_argument(x);
  check_order(nmax, kMaxBesselOrder + kSequenceSlack);
  if (x <= kSeriesSwitch) {
    std::vector<double> out(static_cast<std::size_t>(nmax) + 1);
    for (int k = 0; k <= nmax; ++k) out[static_cast<std::size_t>(k)] = series(k, x);
    return out;
  }
  return miller(nmax, x);
}

double bessel_i(int nu, double x) {
  check_argument(x);
  check_order(nu, kMaxBesselOrder);
  if (x <= kSeriesSwitch) return series(nu, x);
  return miller(nu, x)[static_cast<std::size_t>(nu)];
}

double bessel_i_prime(int nu, double x) {
  check_argument(x);
  check_order(nu, kMaxBesselOrder);
  if (x == 0.0) return nu == 1 ? 0.5 : 0.0;
  const auto seq = bessel_i_sequence(nu + 1, x);
  const double lower = nu == 0 ? seq[1] : seq[static_cast<std::size_t>(nu - 1)];
  return 0.5 * (lower + seq[static_cast<std::size_t>(nu + 1)]);
}

RadialFactor::RadialFactor(int order, double epsilon)
    : order_(order), epsilon_(epsilon), scale_(std::sqrt(epsilon)) {
  if (order < 0 || order > kMaxBesselOrder) {
    throw InputError("RadialFactor: order out of supported range");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InputError("RadialFactor: epsilon must be positive");
  }
}

RadialValue RadialFactor::eval(double r) const {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("RadialFactor: r must lie in [0, 1]");
  return eval_unchecked(r);
}

RadialValue RadialFactor::eval_unchecked(double r) const {
  const double x = scale_ * std::abs(r);
  const auto seq = bessel_i_sequence(order_ + 1, x);
  RadialValue out;
  out.value = seq[static_cast<std::size_t>(order_)];
  double prime;
  if (x == 0.0) {
    prime = order_ == 1 ? 0.5 : 0.0;
  } else {
    const double lower = order_ == 0 ? seq[1] : seq[static_cast<std::size_t>(order_ - 1)];
    prime = 0.5 * (lower + seq[static_cast<std::size_t>(order_ + 1)]);
  }
  out.derivative = scale_ * prime;
  return out;
}

double RadialFactor::second_derivative(double r) const {
  const double x = scale_ * std::abs(r);
  const auto seq = bessel_i_sequence(order_ + 2, x);
  auto at = [&](int k) { return seq[static_cast<std::size_t>(std::abs(k))]; };
  return epsilon_ * 0.25 * (at(order_ - 2) + 2.0 * at(order_) + at(order_ + 2));
}

RadialValue radial_factor_eval(const RadialFactor& g, double r) { return g.eval(r); }

}  // namespace epsreg

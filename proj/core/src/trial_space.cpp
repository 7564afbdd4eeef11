#include "epsreg/trial_space.hpp"

#include <cmath>
#include <numbers>

#include "epsreg/errors.hpp"
#include "epsreg/gram_schmidt.hpp"

namespace epsreg {

namespace {

// Graded order: 1, x, y, x^2, xy, y^2, ...
std::vector<std::pair<int, int>> graded_exponents(int count) {
  std::vector<std::pair<int, int>> out;
  for (int d = 0; static_cast<int>(out.size()) < count; ++d) {
    for (int b = 0; b <= d && static_cast<int>(out.size()) < count; ++b) out.emplace_back(d - b, b);
  }
  return out;
}

double ipow(double x, int n) {
  double out = 1.0;
  for (int k = 0; k < n; ++k) out *= x;
  return out;
}

}  // namespace

DefiningFunction::DefiningFunction(ArcSpec arc, int power)
    : arc_(arc), complement_(arc.complement()), power_(power) {
  if (power < 1) throw InputError("DefiningFunction: power must be at least 1");
}

double DefiningFunction::sigma(double phi) const noexcept {
  if (arc_.is_full()) return 0.0;
  if (arc_.is_empty()) return 1.0;
  const double len = complement_.length();
  const double s = complement_.offset(phi);
  if (s >= len) return 0.0;
  return ipow(std::sin(std::numbers::pi * s / len), power_);
}

double DefiningFunction::sigma_prime(double phi) const noexcept {
  if (arc_.is_full() || arc_.is_empty()) return 0.0;
  const double len = complement_.length();
  const double s = complement_.offset(phi);
  if (s >= len) return 0.0;
  const double t = std::numbers::pi * s / len;
  return power_ * ipow(std::sin(t), power_ - 1) * std::cos(t) * std::numbers::pi / len;
}

Jet DefiningFunction::operator()(double x, double y) const noexcept {
  const double r2 = x * x + y * y;
  const double phi = std::atan2(y, x);
  const double sg = sigma(phi);
  const double sp = sigma_prime(phi);
  Jet j;
  j.value = 1.0 - r2 + r2 * sg;
  j.dx = -2.0 * x * (1.0 - sg) - y * sp;
  j.dy = -2.0 * y * (1.0 - sg) + x * sp;
  return j;
}

TrialSeeds::TrialSeeds(std::shared_ptr<const Discretization> disc, int size, int boundary_power)
    : disc_(std::move(disc)), delta_(disc_->arc(), boundary_power) {
  if (size < 1) throw InputError("trial space size must be at least 1");
  exponents_ = graded_exponents(size);
  samples_.reserve(exponents_.size());
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    samples_.push_back(disc_->sample([this, k](double x, double y) { return jet(k, x, y); }));
    if (samples_.back().trace.size() > 0) {
      max_gamma_trace_ = std::max(max_gamma_trace_, samples_.back().trace.cwiseAbs().maxCoeff());
    }
  }
}

Jet TrialSeeds::jet(std::size_t k, double x, double y) const noexcept {
  const auto [a, b] = exponents_[k];
  const double p = ipow(x, a) * ipow(y, b);
  const double px = a == 0 ? 0.0 : a * ipow(x, a - 1) * ipow(y, b);
  const double py = b == 0 ? 0.0 : b * ipow(x, a) * ipow(y, b - 1);
  const Jet d = delta_(x, y);
  return {d.value * p, d.dx * p + d.value * px, d.dy * p + d.value * py};
}

TrialSpace::TrialSpace(std::shared_ptr<const TrialSeeds> seeds, double epsilon, double drop_tol)
    : seeds_(std::move(seeds)), epsilon_(epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InputError("TrialSpace: epsilon must be positive and finite");
  }
  const Discretization& disc = seeds_->discretization();
  const auto& raw = seeds_->samples();
  auto inner = [&](const FieldSamples& u, const FieldSamples& v) {
    return disc.inner_eps(u, v, epsilon);
  };
  auto gs = gram_schmidt(raw, inner, drop_tol);
  members_ = std::move(gs.basis);
  coefficients_ = std::move(gs.coefficients);
  dropped_ = std::move(gs.dropped);

  const auto m = static_cast<Eigen::Index>(gs.kept.size());
  gram_.resize(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i; j < m; ++j) {
      gram_(i, j) = inner(raw[gs.kept[static_cast<std::size_t>(i)]],
                          raw[gs.kept[static_cast<std::size_t>(j)]]);
      gram_(j, i) = std::conj(gram_(i, j));
    }
    gram_(i, i) = gram_(i, i).real();
  }
}

JetField TrialSpace::combination(const VectorXc& c) const {
  if (c.size() != static_cast<Eigen::Index>(size())) {
    throw InputError("TrialSpace::combination: coefficient count mismatch");
  }
  const VectorXc s = coefficients_.transpose() * c;
  return [seeds = seeds_, s](double x, double y) {
    Jet out;
    for (Eigen::Index k = 0; k < s.size(); ++k) {
      if (s(k) == cplx{}) continue;
      const Jet j = seeds->jet(static_cast<std::size_t>(k), x, y);
      out.value += s(k) * j.value;
      out.dx += s(k) * j.dx;
      out.dy += s(k) * j.dy;
    }
    return out;
  };
}

JetField TrialSpace::member(std::size_t i) const {
  VectorXc c = VectorXc::Zero(static_cast<Eigen::Index>(size()));
  c(static_cast<Eigen::Index>(i)) = 1.0;
  return combination(c);
}

TrialSpace build_trial_space(const ArcSpec& arc, DiracKind kind, int size,
                             const DiskQuadrature& quad, double epsilon,
                             const TrialSpaceOptions& options) {
  auto disc = std::make_shared<const Discretization>(kind, arc, quad);
  auto seeds = std::make_shared<const TrialSeeds>(disc, size, options.boundary_power);
  if (seeds->max_gamma_trace() > options.trace_tol) {
    throw InputError("trial seeds do not vanish on Gamma");
  }
  return TrialSpace(std::move(seeds), epsilon, options.drop_tol);
}

GalerkinSolution solve_perturbed_galerkin(const TrialSpace& space, const OperatorSamples& f,
                                          const VectorXc& h) {
  const Discretization& disc = space.discretization();
  const double eps = space.epsilon();
  const auto n = static_cast<Eigen::Index>(space.size());
  const auto& e = space.members();

  GalerkinSolution out;
  out.epsilon = eps;
  out.coefficients = VectorXc::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& ei = e[static_cast<std::size_t>(i)];
    cplx c = disc.energy(f, disc.apply(ei));
    if (h.size() != 0) c += eps * disc.l2(h, ei.value);
    out.coefficients(i) = c;
  }
  // Zero field with the sample layout of the seeds.
  out.samples = space.seeds().samples().front() * 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    out.samples += out.coefficients(i) * e[static_cast<std::size_t>(i)];
  }

  for (Eigen::Index i = 0; i < n; ++i) {
    const cplx back = disc.inner_eps(out.samples, e[static_cast<std::size_t>(i)], eps);
    out.galerkin_residual = std::max(out.galerkin_residual, std::abs(out.coefficients(i) - back));
  }
  out.norm_eps = std::sqrt(std::abs(disc.inner_eps(out.samples, out.samples, eps)));
  out.norm_l2 = disc.l2_norm(out.samples.value);
  OperatorSamples r = disc.apply(out.samples);
  r.c0 -= f.c0;
  if (r.c1.size() != 0) r.c1 -= f.c1;
  out.operator_residual = disc.l2_norm(r);
  out.seed_coefficients = space.coefficients().transpose() * out.coefficients;
  out.field = space.combination(out.coefficients);
  return out;
}

GalerkinSolution solve_perturbed_galerkin(const TrialSpace& space, const VectorField& f,
                                          const ScalarField& h) {
  const Discretization& disc = space.discretization();
  OperatorSamples fs;
  if (f) {
    fs = disc.sample_operator(f);
  } else {
    const auto n = static_cast<Eigen::Index>(disc.quadrature().size());
    fs.c0 = VectorXc::Zero(n);
    if (codomain_dim(disc.kind()) == 2) fs.c1 = VectorXc::Zero(n);
  }
  return solve_perturbed_galerkin(space, fs, h ? disc.sample_scalar(h) : VectorXc{});
}

}  // namespace epsreg

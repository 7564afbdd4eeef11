#include "epsreg/mixed_series.hpp"

#include <cmath>

#include "epsreg/discretization.hpp"
#include "epsreg/errors.hpp"
#include "epsreg/gram_schmidt.hpp"

namespace epsreg {

MixedSeriesSolution::MixedSeriesSolution(std::vector<BasisFunction> basis, VectorXd basis_norms,
                                         MatrixXc coefficients, VectorXc k,
                                         std::vector<std::size_t> dropped)
    : basis_(std::move(basis)),
      basis_norms_(std::move(basis_norms)),
      coefficients_(std::move(coefficients)),
      k_(std::move(k)),
      dropped_(std::move(dropped)) {
  basis_coefficients_ = coefficients_.transpose() * k_;
}

Jet MixedSeriesSolution::jet(double x, double y) const {
  Jet out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const cplx c = basis_coefficients_(static_cast<Eigen::Index>(i));
    if (c == cplx{}) continue;
    const Jet j = basis_[i].jet(x, y);
    out.value += c * j.value;
    out.dx += c * j.dx;
    out.dy += c * j.dy;
  }
  return out;
}

JetField MixedSeriesSolution::field() const {
  return [s = *this](double x, double y) { return s.jet(x, y); };
}

MixedSeriesSolution solve_mixed_boundary_series(DiracKind kind, const ArcSpec& arc,
                                                const BoundaryData& u0, const BoundaryData& u1,
                                                double epsilon, int max_order, int n_arc) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InputError("solve_mixed_boundary_series: epsilon must be positive");
  }
  if (max_order < 0) throw InputError("solve_mixed_boundary_series: max_order must be >= 0");
  if (arc.is_empty() && arc.complement().is_empty()) {
    throw InputError("solve_mixed_boundary_series: empty boundary");
  }
  // Only the boundary nodes are used; a minimal interior rule keeps the
  // discretization cheap.
  const Discretization disc(kind, arc, DiskQuadrature(1, 4), n_arc);

  auto basis = disk_basis(kind, max_order, epsilon);
  std::vector<FieldSamples> samples;
  samples.reserve(basis.size());
  for (const auto& b : basis) samples.push_back(disc.sample(b.as_field(), false));

  // Pre-scaling to unit h-norm keeps high orders, whose boundary values are
  // tiny, on the same footing as the rest.
  auto inner = [&disc](const FieldSamples& u, const FieldSamples& v) {
    return disc.boundary_form(u, v);
  };
  VectorXd scale(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const double n = std::sqrt(std::abs(inner(samples[i], samples[i])));
    if (!(n > 0.0)) throw NumericError("basis function with zero boundary form");
    scale(static_cast<Eigen::Index>(i)) = 1.0 / n;
    samples[i] *= 1.0 / n;
  }
  auto gs = gram_schmidt(samples, inner, 1e-10);

  // Boundary data as a sampled field.
  FieldSamples data;
  const auto& bq = disc.boundary();
  data.trace = VectorXc::Zero(static_cast<Eigen::Index>(bq.gamma.phi.size()));
  data.conormal = VectorXc::Zero(static_cast<Eigen::Index>(bq.complement.phi.size()));
  for (std::size_t j = 0; j < bq.gamma.phi.size() && u0; ++j) {
    data.trace(static_cast<Eigen::Index>(j)) = u0(bq.gamma.phi[j]);
  }
  for (std::size_t j = 0; j < bq.complement.phi.size() && u1; ++j) {
    data.conormal(static_cast<Eigen::Index>(j)) = u1(bq.complement.phi[j]);
  }
  if (!data.trace.allFinite() || !data.conormal.allFinite()) {
    throw InputError("solve_mixed_boundary_series: boundary data is not finite");
  }

  VectorXc k(static_cast<Eigen::Index>(gs.basis.size()));
  for (std::size_t i = 0; i < gs.basis.size(); ++i) {
    k(static_cast<Eigen::Index>(i)) = inner(data, gs.basis[i]);
  }
  MatrixXc coefficients = gs.coefficients * scale.asDiagonal();
  const VectorXd norms = scale.cwiseInverse();
  return MixedSeriesSolution(std::move(basis), norms, std::move(coefficients), std::move(k),
                             std::move(gs.dropped));
}

}  // namespace epsreg

#include "epsreg/cauchy_pipeline.hpp"

#include <cmath>

#include "epsreg/errors.hpp"
#include "epsreg/parallel.hpp"

namespace epsreg {

void validate(const CauchyProblemSpec& spec) {
  validate_schedule(spec.schedule);
  if (spec.trial_size < 1) throw InputError("trial_size must be at least 1");
  if (spec.n_r < 2 || spec.n_phi < 8 || spec.n_arc < 2) {
    throw InputError("quadrature sizes too small (need n_r >= 2, n_phi >= 8, n_arc >= 2)");
  }
  if (spec.boundary_power < 1) throw InputError("boundary_power must be at least 1");
}

PipelineResult cauchy_pipeline(const CauchyProblemSpec& spec) {
  validate(spec);
  auto disc = std::make_shared<const Discretization>(spec.kind, spec.arc,
                                                     DiskQuadrature(spec.n_r, spec.n_phi),
                                                     spec.n_arc);
  const BoundaryLift lift(spec.arc, spec.u0, spec.n_phi);
  const JetField lift_field = lift.field();
  const FieldSamples lifted = disc->sample(lift_field);

  PipelineResult out;
  out.lift = lift_field;
  if (spec.u0) {
    const auto& g = disc->boundary().gamma.phi;
    for (std::size_t j = 0; j < g.size(); ++j) {
      out.lift_trace_error = std::max(
          out.lift_trace_error, std::abs(lifted.trace(static_cast<Eigen::Index>(j)) - spec.u0(g[j])));
    }
  }

  // f~ = f - A U_0 at the interior nodes.
  OperatorSamples ft = disc->apply(lifted);
  ft.c0 = -ft.c0;
  if (ft.c1.size()) ft.c1 = -ft.c1;
  if (spec.f) {
    const OperatorSamples fs = disc->sample_operator(spec.f);
    ft.c0 += fs.c0;
    if (ft.c1.size()) ft.c1 += fs.c1;
  }
  if (!ft.c0.allFinite() || (ft.c1.size() && !ft.c1.allFinite())) {
    throw NumericError("right-hand side is not finite on the quadrature nodes");
  }

  VectorXc reference;
  double reference_norm = 0.0;
  if (spec.reference) {
    reference = disc->sample_scalar(spec.reference);
    reference_norm = disc->l2_norm(reference);
  }

  auto seeds = std::make_shared<const TrialSeeds>(disc, spec.trial_size, spec.boundary_power);
  if (seeds->max_gamma_trace() > 1e-9) throw NumericError("trial seeds do not vanish on Gamma");

  const std::size_t n = spec.schedule.size();
  std::vector<GalerkinSolution> solutions(n);
  std::vector<char> truncated(n, 0);
  std::vector<std::size_t> dims(n, 0);
  out.entries.resize(n);
  parallel_for(n, spec.threads, [&](std::size_t i) {
    const TrialSpace space(seeds, spec.schedule[i]);
    truncated[i] = space.truncated();
    dims[i] = space.size();
    solutions[i] = solve_perturbed_galerkin(space, ft);
    auto& e = out.entries[i];
    e.epsilon = spec.schedule[i];
    e.l2_norm = solutions[i].norm_l2;
    e.eps_norm = solutions[i].norm_eps;
    e.residual = solutions[i].operator_residual;
    e.galerkin_residual = solutions[i].galerkin_residual;
    if (spec.reference && reference_norm > 0.0) {
      const VectorXc diff = lifted.value + solutions[i].samples.value - reference;
      e.rel_error = disc->l2_norm(diff) / reference_norm;
    }
  });

  std::vector<double> norms(n), residuals(n);
  for (std::size_t i = 0; i < n; ++i) {
    norms[i] = out.entries[i].l2_norm;
    residuals[i] = out.entries[i].residual;
    out.trial_truncated = out.trial_truncated || truncated[i];
  }
  out.trial_dimension = dims.empty() ? 0 : dims.back();
  const auto growth = assess_growth(spec.schedule, norms, spec.rule);
  out.verdict = growth.verdict;
  out.growth_slope = growth.slope;
  out.best_index = lcurve_corner(residuals, norms);
  out.solution = [lift_field, u = solutions[out.best_index].field](double x, double y) {
    const Jet a = lift_field(x, y);
    const Jet b = u(x, y);
    return Jet{a.value + b.value, a.dx + b.dx, a.dy + b.dy};
  };
  return out;
}

}  // namespace epsreg

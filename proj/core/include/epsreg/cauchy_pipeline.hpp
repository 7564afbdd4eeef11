#pragma once

// Cauchy problem Au = f in D, t(u) = u0 on Gamma: lift u0 to U_0, solve the
// perturbed problems for u - U_0 with homogeneous data along an eps schedule
// and pick eps at the L-curve corner.

#include <limits>
#include <vector>

#include "epsreg/boundary_lift.hpp"
#include "epsreg/regularization.hpp"
#include "epsreg/trial_space.hpp"

namespace epsreg {

struct CauchyProblemSpec {
  DiracKind kind = DiracKind::Gradient;
  ArcSpec arc = ArcSpec::upper_half();
  VectorField f;    // empty: zero
  BoundaryData u0;  // empty: zero
  std::vector<double> schedule;
  int trial_size = 24;
  int n_r = 64;
  int n_phi = 256;
  int n_arc = 128;
  int boundary_power = 1;
  VerdictRule rule;
  unsigned threads = 1;
  /// Optional exact solution; when set, relative L2 errors are reported.
  ScalarField reference;
};

/// Throws InputError for an invalid schedule or discretization.
void validate(const CauchyProblemSpec& spec);

struct PipelineEntry {
  double epsilon = 0.0;
  double l2_norm = 0.0;   // |u_eps|_{L2}, u_eps the homogeneous part
  double eps_norm = 0.0;  // |u_eps|_eps
  double residual = 0.0;  // |A u_eps - f~|_{L2}
  double galerkin_residual = 0.0;
  double rel_error = std::numeric_limits<double>::quiet_NaN();
};

struct PipelineResult {
  std::vector<PipelineEntry> entries;
  Verdict verdict = Verdict::Inconclusive;
  double growth_slope = 0.0;
  std::size_t best_index = 0;
  bool trial_truncated = false;
  std::size_t trial_dimension = 0;
  double lift_trace_error = 0.0;  // max |U_0 - u0| on the Gamma nodes
  JetField lift;
  JetField solution;  // U_0 + u_eps at the best eps
};

PipelineResult cauchy_pipeline(const CauchyProblemSpec& spec);

}  // namespace epsreg

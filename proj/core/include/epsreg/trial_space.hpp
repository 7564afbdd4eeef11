#pragma once

// Trial spaces for the Cauchy problem with homogeneous data on Gamma: seeds
// delta * x^a y^b, with delta a defining function vanishing on Gamma,
// orthonormalized under (u, v)_eps = (Au, Av) + eps (u, v). The Galerkin
// solution of the perturbed problem is then read off coefficientwise.

#include <memory>
#include <utility>
#include <vector>

#include "epsreg/discretization.hpp"

namespace epsreg {

/// delta = 1 - r^2 + r^2 sigma(phi), where sigma vanishes on Gamma and equals
/// sin^p(pi s / L) on the complement (s the offset from the complement's start,
/// L its length). Full circle: sigma = 0. Empty Gamma: sigma = 1.
class DefiningFunction {
 public:
  explicit DefiningFunction(ArcSpec arc, int power = 1);

  int power() const noexcept { return power_; }
  double sigma(double phi) const noexcept;
  double sigma_prime(double phi) const noexcept;
  Jet operator()(double x, double y) const noexcept;

 private:
  ArcSpec arc_;
  ArcSpec complement_;
  int power_;
};

/// Seeds sampled once on a discretization; independent of eps.
class TrialSeeds {
 public:
  TrialSeeds(std::shared_ptr<const Discretization> disc, int size, int boundary_power = 1);

  std::size_t size() const noexcept { return exponents_.size(); }
  const Discretization& discretization() const noexcept { return *disc_; }
  const DefiningFunction& defining_function() const noexcept { return delta_; }
  /// (a, b) of the monomial x^a y^b multiplying delta, in graded order.
  const std::vector<std::pair<int, int>>& exponents() const noexcept { return exponents_; }
  const std::vector<FieldSamples>& samples() const noexcept { return samples_; }
  Jet jet(std::size_t k, double x, double y) const noexcept;
  /// Largest |t(seed)| over the Gamma nodes.
  double max_gamma_trace() const noexcept { return max_gamma_trace_; }

 private:
  std::shared_ptr<const Discretization> disc_;
  DefiningFunction delta_;
  std::vector<std::pair<int, int>> exponents_;
  std::vector<FieldSamples> samples_;
  double max_gamma_trace_ = 0.0;
};

struct TrialSpaceOptions {
  int boundary_power = 1;
  double trace_tol = 1e-9;
  double drop_tol = 1e-10;
};

/// Seeds orthonormalized under (., .)_eps.
class TrialSpace {
 public:
  TrialSpace(std::shared_ptr<const TrialSeeds> seeds, double epsilon, double drop_tol = 1e-10);

  double epsilon() const noexcept { return epsilon_; }
  std::size_t size() const noexcept { return members_.size(); }
  const TrialSeeds& seeds() const noexcept { return *seeds_; }
  const Discretization& discretization() const noexcept { return seeds_->discretization(); }
  /// Orthonormal members e_i sampled on the discretization.
  const std::vector<FieldSamples>& members() const noexcept { return members_; }
  /// e_i = sum_k coefficients(i, k) seed_k.
  const MatrixXc& coefficients() const noexcept { return coefficients_; }
  /// (seed_j, seed_k)_eps over the kept seeds.
  const MatrixXc& gram_eps() const noexcept { return gram_; }
  /// True when ill-conditioned seeds were dropped.
  bool truncated() const noexcept { return !dropped_.empty(); }
  const std::vector<std::size_t>& dropped() const noexcept { return dropped_; }

  /// sum_i c_i e_i as an evaluable field.
  JetField combination(const VectorXc& c) const;
  JetField member(std::size_t i) const;

 private:
  std::shared_ptr<const TrialSeeds> seeds_;
  double epsilon_;
  std::vector<FieldSamples> members_;
  MatrixXc coefficients_;
  MatrixXc gram_;
  std::vector<std::size_t> dropped_;
};

/// Builds seeds and orthonormalizes them for one eps. Throws InputError for
/// size < 1 or a seed whose Gamma trace exceeds options.trace_tol.
TrialSpace build_trial_space(const ArcSpec& arc, DiracKind kind, int size,
                             const DiskQuadrature& quad, double epsilon,
                             const TrialSpaceOptions& options = {});

struct GalerkinSolution {
  double epsilon = 0.0;
  VectorXc coefficients;       // c_i on the orthonormal members
  VectorXc seed_coefficients;  // the same field on the seeds
  FieldSamples samples;
  JetField field;
  double galerkin_residual = 0.0;  // max_i |c_i - (u, e_i)_eps|
  double norm_eps = 0.0;
  double norm_l2 = 0.0;
  double operator_residual = 0.0;  // |Au - f|_{L2}
};

/// Galerkin solution of (u, v)_eps = (f, Av) + eps (h, v) over the span with
/// c_i = (f, A e_i) + eps (h, e_i). `h` may be empty (zero).
GalerkinSolution solve_perturbed_galerkin(const TrialSpace& space, const OperatorSamples& f,
                                          const VectorXc& h = {});
GalerkinSolution solve_perturbed_galerkin(const TrialSpace& space, const VectorField& f,
                                          const ScalarField& h = {});

}  // namespace epsreg

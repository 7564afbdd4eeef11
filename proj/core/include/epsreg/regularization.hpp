#pragma once

// Finite-dimensional regularization engine: solves (T*T + eps I) u = T*f + eps h
// for a dense operator T, sweeps eps along a schedule and classifies the
// resulting family as bounded or growing.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "epsreg/linalg.hpp"

namespace epsreg {

/// Dense operator T : H -> H~ between finite-dimensional inner-product spaces.
/// Entries are checked finite on construction.
template <class Scalar>
class DiscreteOperator {
 public:
  explicit DiscreteOperator(Matrix<Scalar> matrix);

  const Matrix<Scalar>& matrix() const noexcept { return matrix_; }
  Eigen::Index dom_dim() const noexcept { return matrix_.cols(); }
  Eigen::Index cod_dim() const noexcept { return matrix_.rows(); }

 private:
  Matrix<Scalar> matrix_;
};

template <class Scalar>
struct PerturbedSolution {
  double epsilon = 0.0;
  Vector<Scalar> u;
  double norm_h = 0.0;    // Euclidean norm of u
  double norm_eps = 0.0;  // sqrt(|Tu|^2 + eps |u|^2)
  double residual = 0.0;  // |(T*T + eps I) u - (T*f + eps h)|
};

enum class Verdict { Bounded, Unbounded, Inconclusive };

std::string_view to_string(Verdict v) noexcept;

/// Slope thresholds for the finite-sample boundedness test. The slope is the
/// least-squares fit of log|u_eps| against log(1/eps) over the final decade
/// of the schedule.
struct VerdictRule {
  double bounded_below = 0.1;
  double unbounded_above = 0.4;
};

struct GrowthAssessment {
  Verdict verdict = Verdict::Inconclusive;
  double slope = 0.0;
};

/// Classifies a family of norms indexed by a strictly decreasing schedule.
/// Uses every entry with eps <= 10 * eps_min; falls back to the last two
/// entries when the final decade holds fewer than two. A path of identically
/// zero norms has slope 0.
GrowthAssessment assess_growth(std::span<const double> schedule,
                               std::span<const double> norms,
                               const VerdictRule& rule = {});

template <class Scalar>
struct RegularizationPath {
  std::vector<PerturbedSolution<Scalar>> entries;
  Verdict verdict = Verdict::Inconclusive;
  double growth_slope = 0.0;
};

/// Solves (T*T + eps I) u = T*f + eps h by Cholesky factorization with one
/// step of iterative refinement.
template <class Scalar>
PerturbedSolution<Scalar> solve_perturbed(const DiscreteOperator<Scalar>& op,
                                          const Vector<Scalar>& f,
                                          const Vector<Scalar>& h,
                                          double epsilon);

/// One solve per schedule entry. Entries may be computed on `threads` worker
/// threads; they are stored in schedule order so results do not depend on
/// the thread count.
template <class Scalar>
RegularizationPath<Scalar> run_path(const DiscreteOperator<Scalar>& op,
                                    const Vector<Scalar>& f,
                                    const Vector<Scalar>& h,
                                    std::span<const double> schedule,
                                    const VerdictRule& rule = {},
                                    unsigned threads = 1);

/// Pseudo-inverse solution T^+ f via SVD. Singular values below
/// 1e-12 * sigma_max count as zero. Returns nullopt when the distance from f
/// to the range of T exceeds `range_tol * max(1, |f|)`.
template <class Scalar>
std::optional<Vector<Scalar>> minimal_norm_solution(
    const DiscreteOperator<Scalar>& op, const Vector<Scalar>& f,
    double range_tol = 1e-8);

/// Orthonormal basis of ker T from the SVD, same rank convention as
/// minimal_norm_solution.
template <class Scalar>
std::vector<Vector<Scalar>> kernel_basis(const DiscreteOperator<Scalar>& op);

/// max |(u_eps, v)| over the supplied kernel vectors. Each v must satisfy
/// |Tv| <= 1e-10 |v|. Meaningful for solutions computed with h = 0.
template <class Scalar>
double kernel_orthogonality_check(const DiscreteOperator<Scalar>& op,
                                  const PerturbedSolution<Scalar>& sol,
                                  std::span<const Vector<Scalar>> kernel);

/// Index of the L-curve corner: the interior point of maximal Menger
/// curvature of (log residual, log norm). Paths with fewer than three points
/// return the last index.
std::size_t lcurve_corner(std::span<const double> residuals,
                          std::span<const double> norms);

/// Throws InputError unless the schedule is nonempty, positive and strictly
/// decreasing.
void validate_schedule(std::span<const double> schedule);

}  // namespace epsreg

#include "epsreg/regularization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "epsreg/errors.hpp"
#include "epsreg/parallel.hpp"

namespace epsreg {

namespace {

constexpr double kRankTolerance = 1e-12;
constexpr double kKernelTolerance = 1e-10;

template <class Scalar>
Eigen::JacobiSVD<Matrix<Scalar>> full_svd(const Matrix<Scalar>& m) {
  return Eigen::JacobiSVD<Matrix<Scalar>>(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

template <class Scalar>
Eigen::Index numerical_rank(const Eigen::JacobiSVD<Matrix<Scalar>>& svd) {
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cutoff = kRankTolerance * s(0);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cutoff) ++rank;
  return rank;
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Bounded: return "Bounded";
    case Verdict::Unbounded: return "Unbounded";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

void validate_schedule(std::span<const double> schedule) {
  if (schedule.empty()) throw InputError("schedule: must be nonempty");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (!(schedule[i] > 0.0) || !std::isfinite(schedule[i])) {
      throw InputError("schedule: entry " + std::to_string(i) + " is not a positive finite number");
    }
    if (i > 0 && !(schedule[i] < schedule[i - 1])) {
      throw InputError("schedule: entries must be strictly decreasing (entry " +
                       std::to_string(i) + ")");
    }
  }
}

template <class Scalar>
DiscreteOperator<Scalar>::DiscreteOperator(Matrix<Scalar> matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() == 0 || matrix_.cols() == 0) {
    throw InputError("DiscreteOperator: dimensions must be positive");
  }
  if (!matrix_.allFinite()) throw InputError("DiscreteOperator: non-finite entry");
}

GrowthAssessment assess_growth(std::span<const double> schedule, std::span<const double> norms,
                               const VerdictRule& rule) {
  if (schedule.size() != norms.size()) throw InputError("assess_growth: length mismatch");
  validate_schedule(schedule);

  const double eps_min = schedule.back();
  std::vector<std::size_t> window;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] <= 10.0 * eps_min * (1.0 + 1e-12)) window.push_back(i);
  }
  if (window.size() < 2 && schedule.size() >= 2) {
    window = {schedule.size() - 2, schedule.size() - 1};
  }

  GrowthAssessment out;
  const bool all_zero = std::all_of(window.begin(), window.end(),
                                    [&](std::size_t i) { return norms[i] == 0.0; });
  if (window.size() < 2 || all_zero) {
    out.slope = 0.0;
  } else {
    // Zero norms inside a growing path are clamped so the log stays finite.
    const double floor = 1e-300;
    double mx = 0, my = 0;
    for (auto i : window) {
      mx += std::log(1.0 / schedule[i]);
      my += std::log(std::max(norms[i], floor));
    }
    mx /= static_cast<double>(window.size());
    my /= static_cast<double>(window.size());
    double sxy = 0, sxx = 0;
    for (auto i : window) {
      const double dx = std::log(1.0 / schedule[i]) - mx;
      sxy += dx * (std::log(std::max(norms[i], floor)) - my);
      sxx += dx * dx;
    }
    out.slope = sxy / sxx;
  }

  if (out.slope < rule.bounded_below) {
    out.verdict = Verdict::Bounded;
  } else if (out.slope > rule.unbounded_above) {
    out.verdict = Verdict::Unbounded;
  } else {
    out.verdict = Verdict::Inconclusive;
  }
  return out;
}

template <class Scalar>
PerturbedSolution<Scalar> solve_perturbed(const DiscreteOperator<Scalar>& op,
                                          const Vector<Scalar>& f, const Vector<Scalar>& h,
                                          double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InputError("solve_perturbed: epsilon must be positive");
  }
  if (f.size() != op.cod_dim()) throw InputError("solve_perturbed: f has wrong length");
  if (h.size() != op.dom_dim()) throw InputError("solve_perturbed: h has wrong length");

  const auto& t = op.matrix();
  Matrix<Scalar> normal = t.adjoint() * t;
  normal.diagonal().array() += Scalar(epsilon);
  const Vector<Scalar> rhs = t.adjoint() * f + Scalar(epsilon) * h;

  Eigen::LLT<Matrix<Scalar>> llt(normal);
  if (llt.info() != Eigen::Success) {
    throw NumericError("solve_perturbed: Cholesky factorization failed");
  }
  Vector<Scalar> u = llt.solve(rhs);
  u += llt.solve(rhs - normal * u);
  if (!u.allFinite()) throw NumericError("solve_perturbed: non-finite solution");

  PerturbedSolution<Scalar> out;
  out.epsilon = epsilon;
  out.norm_h = u.norm();
  const double tu = (t * u).norm();
  out.norm_eps = std::sqrt(tu * tu + epsilon * out.norm_h * out.norm_h);
  out.residual = (normal * u - rhs).norm();
  out.u = std::move(u);
  return out;
}

template <class Scalar>
RegularizationPath<Scalar> run_path(const DiscreteOperator<Scalar>& op, const Vector<Scalar>& f,
                                    const Vector<Scalar>& h, std::span<const double> schedule,
                                    const VerdictRule& rule, unsigned threads) {
  validate_schedule(schedule);
  RegularizationPath<Scalar> path;
  path.entries.resize(schedule.size());
  parallel_for(schedule.size(), threads,
               [&](std::size_t i) { path.entries[i] = solve_perturbed(op, f, h, schedule[i]); });

  std::vector<double> norms(schedule.size());
  for (std::size_t i = 0; i < schedule.size(); ++i) norms[i] = path.entries[i].norm_h;
  const auto growth = assess_growth(schedule, norms, rule);
  path.verdict = growth.verdict;
  path.growth_slope = growth.slope;
  return path;
}

template <class Scalar>
std::optional<Vector<Scalar>> minimal_norm_solution(const DiscreteOperator<Scalar>& op,
                                                    const Vector<Scalar>& f, double range_tol) {
  if (f.size() != op.cod_dim()) throw InputError("minimal_norm_solution: f has wrong length");
  const auto svd = full_svd(op.matrix());
  const Eigen::Index rank = numerical_rank(svd);
  const auto& s = svd.singularValues();

  Vector<Scalar> u = Vector<Scalar>::Zero(op.dom_dim());
  if (rank > 0) {
    const Vector<Scalar> coeffs =
        svd.matrixU().leftCols(rank).adjoint() * f;
    Vector<Scalar> scaled(rank);
    for (Eigen::Index k = 0; k < rank; ++k) scaled(k) = coeffs(k) / s(k);
    u = svd.matrixV().leftCols(rank) * scaled;
  }
  const double miss = (op.matrix() * u - f).norm();
  if (miss > range_tol * std::max(1.0, f.norm())) return std::nullopt;
  return u;
}

template <class Scalar>
std::vector<Vector<Scalar>> kernel_basis(const DiscreteOperator<Scalar>& op) {
  const auto svd = full_svd(op.matrix());
  const Eigen::Index rank = numerical_rank(svd);
  std::vector<Vector<Scalar>> out;
  for (Eigen::Index k = rank; k < op.dom_dim(); ++k) out.emplace_back(svd.matrixV().col(k));
  return out;
}

template <class Scalar>
double kernel_orthogonality_check(const DiscreteOperator<Scalar>& op,
                                  const PerturbedSolution<Scalar>& sol,
                                  std::span<const Vector<Scalar>> kernel) {
  if (sol.u.size() != op.dom_dim()) {
    throw InputError("kernel_orthogonality_check: solution has wrong length");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < kernel.size(); ++k) {
    const auto& v = kernel[k];
    if (v.size() != op.dom_dim()) {
      throw InputError("kernel_orthogonality_check: kernel vector has wrong length");
    }
    if ((op.matrix() * v).norm() > kKernelTolerance * v.norm()) {
      throw InputError("kernel_orthogonality_check: vector " + std::to_string(k) +
                       " is not in ker T");
    }
    worst = std::max(worst, std::abs(v.dot(sol.u)));
  }
  return worst;
}

std::size_t lcurve_corner(std::span<const double> residuals, std::span<const double> norms) {
  if (residuals.size() != norms.size()) throw InputError("lcurve_corner: length mismatch");
  const std::size_t n = residuals.size();
  if (n == 0) throw InputError("lcurve_corner: empty path");
  if (n < 3) return n - 1;

  const double floor = 1e-300;
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = std::log(std::max(residuals[i], floor));
    y[i] = std::log(std::max(norms[i], floor));
  }
  std::size_t best = n - 1;
  double best_kappa = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double ax = x[i] - x[i - 1], ay = y[i] - y[i - 1];
    const double bx = x[i + 1] - x[i], by = y[i + 1] - y[i];
    const double cx = x[i + 1] - x[i - 1], cy = y[i + 1] - y[i - 1];
    const double la = std::hypot(ax, ay), lb = std::hypot(bx, by), lc = std::hypot(cx, cy);
    if (la == 0.0 || lb == 0.0 || lc == 0.0) continue;
    // The corner of an L traversed with decreasing eps is a clockwise turn.
    const double kappa = -2.0 * (ax * by - ay * bx) / (la * lb * lc);
    if (kappa > best_kappa) {
      best_kappa = kappa;
      best = i;
    }
  }
  return best;
}

template class DiscreteOperator<double>;
template class DiscreteOperator<cplx>;

#define EPSREG_INSTANTIATE(S)                                                                   \
  template PerturbedSolution<S> solve_perturbed(const DiscreteOperator<S>&, const Vector<S>&,   \
                                                const Vector<S>&, double);                      \
  template RegularizationPath<S> run_path(const DiscreteOperator<S>&, const Vector<S>&,         \
                                          const Vector<S>&, std::span<const double>,            \
                                          const VerdictRule&, unsigned);                        \
  template std::optional<Vector<S>> minimal_norm_solution(const DiscreteOperator<S>&,           \
                                                          const Vector<S>&, double);            \
  template std::vector<Vector<S>> kernel_basis(const DiscreteOperator<S>&);                     \
  template double kernel_orthogonality_check(const DiscreteOperator<S>&,                        \
                                             const PerturbedSolution<S>&,                       \
                                             std::span<const Vector<S>>);

EPSREG_INSTANTIATE(double)
EPSREG_INSTANTIATE(cplx)

#undef EPSREG_INSTANTIATE

}  // namespace epsreg

#pragma once

// A = d/dx on (a, b) with Cauchy datum at x = a. The perturbed solution
// u_eps = u0 + v solves v'' - eps v = f', v(a) = 0, v'(b) = f(b) and converges
// to u = u0 + int_a^x f in C^1[a, b] as eps -> 0.

#include <functional>
#include <span>
#include <vector>

namespace epsreg {

struct Ode1dProblem {
  double a = 0.0;
  double b = 1.0;
  double u0 = 0.0;
  std::function<double(double)> f;
  double epsilon = 1.0;
};

struct ValueAndDerivative {
  double value = 0.0;
  double derivative = 0.0;
};

/// u0 + int_a^x f. Throws DomainError for x outside [a, b].
double exact_solution(const Ode1dProblem& p, double x);

/// u_eps(x) and u_eps'(x) from the Green's function of the mixed problem,
/// written with cosh/sinh ratios bounded by one so large sqrt(eps)(b - a)
/// cannot overflow. Throws InputError for eps <= 0 and DomainError for x
/// outside [a, b].
ValueAndDerivative perturbed_solution(const Ode1dProblem& p, double x);

struct ConvergenceRow {
  double epsilon = 0.0;
  double c0_error = 0.0;  // sup |u_eps - u|
  double c1_error = 0.0;  // sup |u_eps' - u'|
};

/// Sup-norm errors on a uniform grid of `grid_points` points for each eps of
/// a strictly decreasing schedule; p.epsilon is ignored.
std::vector<ConvergenceRow> convergence_report(const Ode1dProblem& p,
                                               std::span<const double> schedule,
                                               int grid_points = 1001, unsigned threads = 1);

/// Throws InputError unless a < b and f is set and finite on a sample grid.
void validate(const Ode1dProblem& p);

}  // namespace epsreg

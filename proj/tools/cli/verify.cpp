#include "verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "csv.hpp"
#include "epsreg/bessel.hpp"
#include "epsreg/cauchy_pipeline.hpp"
#include "epsreg/discretization.hpp"
#include "epsreg/disk_basis.hpp"
#include "epsreg/mixed_series.hpp"
#include "epsreg/ode1d.hpp"
#include "epsreg/regularization.hpp"
#include "manufactured.hpp"

namespace epsreg::cli {

namespace {

double relative_offdiag(const MatrixXc& g) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      if (i == j) continue;
      const double s = std::sqrt(std::abs(g(i, i)) * std::abs(g(j, j)));
      if (s > 0.0) worst = std::max(worst, std::abs(g(i, j)) / s);
    }
  }
  return worst;
}

struct Check {
  std::string name;
  std::function<std::pair<bool, std::string>()> run;
};

std::string fmt(double v) { return format_double(v); }

}  // namespace

BasisReport basis_report(DiracKind kind, int max_order, double epsilon) {
  const Discretization disc(kind, ArcSpec::full_circle(), DiskQuadrature(64, 256), 16);
  const auto basis = disk_basis(kind, max_order, epsilon);
  std::vector<FieldSamples> s;
  for (const auto& b : basis) s.push_back(disc.sample(b.as_field()));
  const auto n = static_cast<Eigen::Index>(basis.size());
  MatrixXc l2(n, n), energy(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      l2(i, j) = disc.l2(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]);
      energy(i, j) = disc.energy(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]);
    }
  }
  BasisReport r;
  r.l2_offdiag = relative_offdiag(l2);
  r.energy_offdiag = relative_offdiag(energy);
  std::vector<PolarPoint> pts;
  for (double rad : {0.2, 0.5, 0.8}) {
    for (int k = 0; k < 5; ++k) pts.push_back({rad, 0.4 + 1.2 * k});
  }
  r.min_nonvanishing = std::numeric_limits<double>::infinity();
  for (const auto& b : basis) {
    r.helmholtz = std::max(r.helmholtz, check_helmholtz(b, epsilon, pts));
    r.min_nonvanishing =
        std::min(r.min_nonvanishing, nonvanishing_check(kind, b.order(), b.branch(), epsilon));
  }
  for (int k = 0; k < 16; ++k) {
    const double t = 0.37 * k;
    r.symbol_defect =
        std::max(r.symbol_defect, symbol_identity_defect(kind, std::cos(t) * (1 + k), std::sin(t)));
  }
  return r;
}

int run_property_suite(std::ostream& out, std::uint64_t seed, unsigned threads) {
  std::vector<Check> checks;

  checks.push_back({"tikhonov_identity", [seed] {
    // u_eps = u - eps (T*T + eps I)^{-1} u whenever f = T u.
    Rng rng(seed);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const int m = 1 + trial % 20, n = 1 + (7 * trial) % 30;
      MatrixXd t(m, n);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) t(i, j) = rng.uniform();
      VectorXd u(n);
      for (int j = 0; j < n; ++j) u(j) = rng.uniform();
      const double eps = std::pow(10.0, -3.0 + 4.0 * (rng.uniform() + 1.0) / 2.0);
      const auto sol = solve_perturbed(DiscreteOperator<double>(t), VectorXd(t * u),
                                       VectorXd(VectorXd::Zero(n)), eps);
      MatrixXd g = t.transpose() * t;
      g.diagonal().array() += eps;
      const VectorXd oracle = u - eps * g.fullPivLu().solve(u);
      worst = std::max(worst, (sol.u - oracle).norm() / std::max(1.0, oracle.norm()));
    }
    return std::pair{worst <= 1e-10, "max_rel=" + fmt(worst)};
  }});

  checks.push_back({"energy_estimate", [seed] {
    Rng rng(seed + 1);
    double worst = -1.0;
    for (int trial = 0; trial < 20; ++trial) {
      const int m = 3 + trial % 10, n = 2 + trial % 7;
      MatrixXd t(m, n);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) t(i, j) = rng.uniform();
      VectorXd f(m), h(n);
      for (int i = 0; i < m; ++i) f(i) = rng.uniform();
      for (int j = 0; j < n; ++j) h(j) = rng.uniform();
      const double eps = std::pow(10.0, 3.0 * rng.uniform());
      const auto sol = solve_perturbed(DiscreteOperator<double>(t), f, h, eps);
      worst = std::max(worst, sol.norm_eps - (f.norm() + std::sqrt(eps) * h.norm()));
    }
    return std::pair{worst <= 1e-9, "max_excess=" + fmt(worst)};
  }});

  checks.push_back({"bessel_vs_std", [] {
    double worst = 0.0;
    for (int nu = 0; nu <= 20; ++nu) {
      for (double x : {0.1, 1.0, 5.0, 15.0, 40.0}) {
        const double want = std::cyl_bessel_i(static_cast<double>(nu), x);
        worst = std::max(worst, std::abs(bessel_i(nu, x) - want) / want);
      }
    }
    return std::pair{worst <= 1e-10, "max_rel=" + fmt(worst)};
  }});

  checks.push_back({"basis_structure", [] {
    double gram = 0.0, helm = 0.0, nonvan = 1e300;
    for (auto kind : {DiracKind::Gradient, DiracKind::CauchyRiemann}) {
      const auto r = basis_report(kind, 6, 1.0);
      gram = std::max({gram, r.l2_offdiag, r.energy_offdiag});
      helm = std::max(helm, r.helmholtz);
      nonvan = std::min(nonvan, r.min_nonvanishing);
    }
    return std::pair{gram <= 1e-8 && helm <= 1e-5 && nonvan > 0.0,
                     "gram=" + fmt(gram) + " helmholtz=" + fmt(helm) + " nonvanishing=" + fmt(nonvan)};
  }});

  checks.push_back({"gradient_eigenvalues", [] {
    double worst = 0.0;
    for (int i = 0; i <= 8; ++i) {
      const JetField u = harmonic_monomial(i, 1);
      for (int k = 0; k < 50; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / 50;
        const double x = std::cos(phi), y = std::sin(phi);
        const Jet j = u(x, y);
        const cplx n = conormal(DiracKind::Gradient, x, y, apply_operator(DiracKind::Gradient, j));
        worst = std::max(worst, std::abs(n - static_cast<double>(i) * j.value));
      }
    }
    return std::pair{worst <= 1e-9, "max_abs=" + fmt(worst)};
  }});

  checks.push_back({"ode1d_boundary_conditions", [] {
    Ode1dProblem p{0.0, 1.0, 0.0, [](double x) { return std::cos(x); }, 1.0};
    double worst = 0.0;
    for (double eps : {1.0, 1e-2}) {
      p.epsilon = eps;
      worst = std::max(worst, std::abs(perturbed_solution(p, 1.0).derivative - std::cos(1.0)));
      worst = std::max(worst, std::abs(perturbed_solution(p, 0.0).value));
    }
    return std::pair{worst <= 1e-8, "max_abs=" + fmt(worst)};
  }});

  checks.push_back({"mixed_series_roundtrip", [] {
    const double eps = 1.0;
    const BasisFunction src(DiracKind::Gradient, 2, 1, eps);
    auto t = [&src](double phi) { return src.jet(std::cos(phi), std::sin(phi)).value; };
    auto n = [&src](double phi) {
      const double x = std::cos(phi), y = std::sin(phi);
      return conormal(DiracKind::Gradient, x, y, apply_operator(DiracKind::Gradient, src.jet(x, y)));
    };
    const auto sol = solve_mixed_boundary_series(DiracKind::Gradient, ArcSpec::upper_half(), t, n,
                                                 eps, 8);
    double worst = 0.0;
    for (Eigen::Index i = 4; i < sol.k().size(); ++i) worst = std::max(worst, std::abs(sol.k()(i)));
    return std::pair{worst <= 1e-8, "max_off=" + fmt(worst)};
  }});

  checks.push_back({"galerkin_residual", [threads] {
    CauchyProblemSpec spec;
    spec.f = apply_operator(DiracKind::Gradient, manufactured_solution("re_z3"));
    spec.u0 = [](double phi) { return cplx(std::cos(3.0 * phi)); };
    spec.schedule = {1e-1, 1e-2, 1e-3};
    spec.trial_size = 10;
    spec.n_r = 24;
    spec.n_phi = 96;
    spec.threads = threads;
    const auto res = cauchy_pipeline(spec);
    double worst = 0.0;
    for (const auto& e : res.entries) worst = std::max(worst, e.galerkin_residual);
    return std::pair{worst <= 1e-9, "max=" + fmt(worst)};
  }});

  int failures = 0;
  for (const auto& c : checks) {
    bool ok = false;
    std::string detail;
    try {
      std::tie(ok, detail) = c.run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    out << (ok ? "PASS " : "FAIL ") << c.name << " " << detail << "\n";
    failures += ok ? 0 : 1;
  }
  out << (failures == 0 ? "all properties hold" : std::to_string(failures) + " violation(s)") << "\n";
  return failures;
}

}  // namespace epsreg::cli

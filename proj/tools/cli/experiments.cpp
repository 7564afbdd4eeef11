#include "experiments.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "epsreg/cauchy_pipeline.hpp"
#include "epsreg/matrix_io.hpp"
#include "epsreg/mixed_series.hpp"
#include "epsreg/ode1d.hpp"
#include "epsreg/parallel.hpp"
#include "manufactured.hpp"
#include "verify.hpp"

namespace epsreg::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

RunResult run_ode1d(const ExperimentConfig& cfg, const Ode1dParams& p, unsigned threads) {
  Ode1dProblem prob{p.a, p.b, p.u0, named_function(p.f), 1.0};
  const auto rows = convergence_report(prob, cfg.schedule, p.grid, threads);
  RunResult out;
  out.table = CsvTable({"epsilon", "c0_error", "c1_error"});
  for (const auto& r : rows) out.table.add_row({r.epsilon, r.c0_error, r.c1_error});

  std::ostringstream s;
  s << "c0_error=" << format_double(rows.back().c0_error)
    << " c1_error=" << format_double(rows.back().c1_error);
  if (rows.size() >= 2) {
    // Observed order in eps over the last step; informational only.
    const auto& a = rows[rows.size() - 2];
    const auto& b = rows.back();
    if (a.c1_error > 0.0 && b.c1_error > 0.0) {
      s << " observed_rate=" << format_double(std::log(a.c1_error / b.c1_error) /
                                              std::log(a.epsilon / b.epsilon));
    }
  }
  out.summary = s.str();
  return out;
}

RunResult run_disk_cauchy(const ExperimentConfig& cfg, const DiskCauchyParams& p,
                          unsigned threads) {
  const JetField truth = manufactured_solution(p.solution);
  CauchyProblemSpec spec;
  spec.kind = p.kind;
  spec.arc = p.arc;
  spec.f = apply_operator(p.kind, truth);
  spec.u0 = [truth, amp = p.noise_amplitude, k = p.noise_frequency](double phi) {
    return truth(std::cos(phi), std::sin(phi)).value + amp * std::cos(k * phi);
  };
  spec.reference = [truth](double x, double y) { return truth(x, y).value; };
  spec.schedule = cfg.schedule;
  spec.trial_size = p.trial_size;
  spec.n_r = p.n_r;
  spec.n_phi = p.n_phi;
  spec.n_arc = p.n_arc;
  spec.boundary_power = p.boundary_power;
  spec.rule = p.rule;
  spec.threads = threads;
  const auto res = cauchy_pipeline(spec);

  RunResult out;
  out.table = CsvTable({"epsilon", "l2_norm", "residual", "rel_error"});
  for (const auto& e : res.entries) out.table.add_row({e.epsilon, e.l2_norm, e.residual, e.rel_error});
  const auto& best = res.entries[res.best_index];
  std::ostringstream s;
  s << "best_epsilon=" << format_double(best.epsilon) << " rel_error=" << format_double(best.rel_error)
    << " slope=" << format_double(res.growth_slope) << " trial_dimension=" << res.trial_dimension
    << (res.trial_truncated ? " (truncated)" : "") << "\nverdict=" << to_string(res.verdict);
  out.summary = s.str();
  return out;
}

double arc_relative_error(const ArcRule& rule, const std::function<cplx(double)>& got,
                          const std::function<cplx(double)>& want) {
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < rule.phi.size(); ++j) {
    const cplx w = want(rule.phi[j]);
    num += rule.weights[j] * std::norm(got(rule.phi[j]) - w);
    den += rule.weights[j] * std::norm(w);
  }
  if (rule.phi.empty()) return 0.0;
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

RunResult run_disk_mixed(const ExperimentConfig& cfg, const DiskMixedParams& p, unsigned threads) {
  const std::size_t n = cfg.schedule.size();
  std::vector<std::vector<double>> rows(n);
  parallel_for(n, threads, [&](std::size_t i) {
    const double eps = cfg.schedule[i];
    const BasisFunction source(p.kind, p.source_order, p.source_branch, eps);
    auto trace = [&source](double phi) { return source.jet(std::cos(phi), std::sin(phi)).value; };
    auto conormal_data = [&source, kind = p.kind](double phi) {
      const double x = std::cos(phi), y = std::sin(phi);
      return conormal(kind, x, y, apply_operator(kind, source.jet(x, y)));
    };
    const auto sol = solve_mixed_boundary_series(p.kind, p.arc, trace, conormal_data, eps,
                                                 p.max_order, p.n_arc);
    const auto bq = boundary_quadrature(p.arc, p.n_arc);
    const double trace_err = arc_relative_error(
        bq.gamma, [&sol](double phi) { return sol.jet(std::cos(phi), std::sin(phi)).value; }, trace);
    const double conormal_err = arc_relative_error(
        bq.complement,
        [&sol, kind = p.kind](double phi) {
          const double x = std::cos(phi), y = std::sin(phi);
          return conormal(kind, x, y, apply_operator(kind, sol.jet(x, y)));
        },
        conormal_data);
    std::vector<PolarPoint> pts;
    for (double r : {0.25, 0.5, 0.75}) {
      for (int k = 0; k < 8; ++k) pts.push_back({r, 2.0 * std::numbers::pi * k / 8 + 0.1});
    }
    const ScalarField value = [&sol](double x, double y) { return sol.jet(x, y).value; };
    const double helm = helmholtz_residual(value, eps, pts, 1e-3);

    double coef_err = kNaN;
    if (p.source_order <= p.max_order) {
      const auto target = static_cast<Eigen::Index>(
          p.source_order == 0 ? 0 : 2 * p.source_order - 2 + p.source_branch);
      coef_err = 0.0;
      // Errors on the scale of the h-normalized basis, relative to the source.
      const auto& c = sol.basis_coefficients();
      const auto& nrm = sol.basis_norms();
      for (Eigen::Index k = 0; k < c.size(); ++k) {
        const double want = k == target ? 1.0 : 0.0;
        coef_err = std::max(coef_err, std::abs(c(k) - want) * nrm(k) / nrm(target));
      }
    }
    rows[i] = {eps, trace_err, conormal_err, helm, coef_err};
  });

  RunResult out;
  out.table = CsvTable({"epsilon", "trace_error", "conormal_error", "helmholtz_residual",
                        "coefficient_error"});
  double worst_trace = 0.0, worst_helm = 0.0;
  for (auto& r : rows) {
    worst_trace = std::max(worst_trace, r[1]);
    worst_helm = std::max(worst_helm, r[3]);
    out.table.add_row(std::move(r));
  }
  out.summary = "max_trace_error=" + format_double(worst_trace) +
                " max_helmholtz_residual=" + format_double(worst_helm);
  return out;
}

template <class S>
void fill_path_table(const DiscreteOperator<S>& op, const Vector<S>& f, const Vector<S>& h,
                     const ExperimentConfig& cfg, const VerdictRule& rule, unsigned threads,
                     RunResult& out) {
  const auto path = run_path(op, f, h, std::span<const double>(cfg.schedule), rule, threads);
  out.table = CsvTable({"epsilon", "norm", "eps_norm", "residual"});
  std::vector<double> norms, residuals;
  for (const auto& e : path.entries) {
    out.table.add_row({e.epsilon, e.norm_h, e.norm_eps, e.residual});
    norms.push_back(e.norm_h);
    // Discrepancy |T u_eps - f| for the L-curve.
    residuals.push_back((op.matrix() * e.u - f).norm());
  }
  const auto corner = lcurve_corner(residuals, norms);
  std::ostringstream s;
  s << "slope=" << format_double(path.growth_slope)
    << " lcurve_epsilon=" << format_double(cfg.schedule[corner])
    << "\nverdict=" << to_string(path.verdict);
  out.summary = s.str();
}

MatrixXc promote(const AnyMatrix& m) {
  if (const auto* d = std::get_if<MatrixXd>(&m)) return d->cast<cplx>();
  return std::get<MatrixXc>(m);
}

RunResult run_matrix_path(const ExperimentConfig& cfg, const MatrixPathParams& p,
                          unsigned threads) {
  RunResult out;
  if (!p.generator.empty()) {
    const auto inst = generate_instance(p.generator, p.rows, p.cols, cfg.seed);
    fill_path_table(DiscreteOperator<double>(inst.matrix), inst.rhs, inst.prior, cfg, p.rule,
                    threads, out);
    return out;
  }
  const AnyMatrix t = read_matrix_file(p.matrix);
  const AnyMatrix f = read_matrix_file(p.rhs);
  std::optional<AnyMatrix> h;
  if (!p.prior.empty()) h = read_matrix_file(p.prior);
  const bool complex = std::holds_alternative<MatrixXc>(t) || std::holds_alternative<MatrixXc>(f) ||
                       (h && std::holds_alternative<MatrixXc>(*h));
  auto rows_of = [](const AnyMatrix& m) { return std::visit([](const auto& x) { return x.rows(); }, m); };
  auto cols_of = [](const AnyMatrix& m) { return std::visit([](const auto& x) { return x.cols(); }, m); };
  if (cols_of(f) != 1 || rows_of(f) != rows_of(t)) {
    throw InputError("rhs must be a column with as many rows as the matrix");
  }
  if (h && (cols_of(*h) != 1 || rows_of(*h) != cols_of(t))) {
    throw InputError("prior must be a column with as many rows as the matrix has columns");
  }
  if (complex) {
    const MatrixXc tm = promote(t);
    const VectorXc fv = promote(f).col(0);
    const VectorXc hv = h ? VectorXc(promote(*h).col(0)) : VectorXc(VectorXc::Zero(tm.cols()));
    fill_path_table(DiscreteOperator<cplx>(tm), fv, hv, cfg, p.rule, threads, out);
  } else {
    const MatrixXd& tm = std::get<MatrixXd>(t);
    const VectorXd fv = std::get<MatrixXd>(f).col(0);
    const VectorXd hv = h ? VectorXd(std::get<MatrixXd>(*h).col(0)) : VectorXd(VectorXd::Zero(tm.cols()));
    fill_path_table(DiscreteOperator<double>(tm), fv, hv, cfg, p.rule, threads, out);
  }
  return out;
}

RunResult run_verify_basis(const ExperimentConfig& cfg, const VerifyBasisParams& p,
                           unsigned threads) {
  const std::size_t n = cfg.schedule.size();
  std::vector<BasisReport> reports(n);
  parallel_for(n, threads, [&](std::size_t i) {
    BasisReport worst;
    worst.min_nonvanishing = std::numeric_limits<double>::infinity();
    for (const auto kind : p.kinds) {
      const auto r = basis_report(kind, p.max_order, cfg.schedule[i]);
      worst.l2_offdiag = std::max(worst.l2_offdiag, r.l2_offdiag);
      worst.energy_offdiag = std::max(worst.energy_offdiag, r.energy_offdiag);
      worst.helmholtz = std::max(worst.helmholtz, r.helmholtz);
      worst.min_nonvanishing = std::min(worst.min_nonvanishing, r.min_nonvanishing);
      worst.symbol_defect = std::max(worst.symbol_defect, r.symbol_defect);
    }
    reports[i] = worst;
  });

  RunResult out;
  out.table = CsvTable({"epsilon", "l2_offdiag", "energy_offdiag", "helmholtz_residual",
                        "min_nonvanishing", "symbol_defect"});
  BasisReport all;
  all.min_nonvanishing = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = reports[i];
    out.table.add_row({cfg.schedule[i], r.l2_offdiag, r.energy_offdiag, r.helmholtz,
                       r.min_nonvanishing, r.symbol_defect});
    all.l2_offdiag = std::max(all.l2_offdiag, r.l2_offdiag);
    all.energy_offdiag = std::max(all.energy_offdiag, r.energy_offdiag);
    all.helmholtz = std::max(all.helmholtz, r.helmholtz);
    all.min_nonvanishing = std::min(all.min_nonvanishing, r.min_nonvanishing);
  }
  out.passed = all.l2_offdiag <= p.gram_tolerance && all.energy_offdiag <= p.gram_tolerance &&
               all.helmholtz <= p.helmholtz_tolerance && all.min_nonvanishing > 0.0;
  out.summary = "max_l2_offdiag=" + format_double(all.l2_offdiag) +
                " max_energy_offdiag=" + format_double(all.energy_offdiag) +
                " max_helmholtz_residual=" + format_double(all.helmholtz) +
                " min_nonvanishing=" + format_double(all.min_nonvanishing) +
                (out.passed ? " status=ok" : " status=violation");
  return out;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& config, unsigned threads) {
  return std::visit(
      [&](const auto& p) -> RunResult {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, Ode1dParams>) return run_ode1d(config, p, threads);
        if constexpr (std::is_same_v<P, DiskCauchyParams>) return run_disk_cauchy(config, p, threads);
        if constexpr (std::is_same_v<P, DiskMixedParams>) return run_disk_mixed(config, p, threads);
        if constexpr (std::is_same_v<P, MatrixPathParams>) return run_matrix_path(config, p, threads);
        if constexpr (std::is_same_v<P, VerifyBasisParams>) return run_verify_basis(config, p, threads);
      },
      config.params);
}

}  // namespace epsreg::cli

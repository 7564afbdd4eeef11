#include <benchmark/benchmark.h>

#include <cmath>
#include <memory>

#include "epsreg/bessel.hpp"
#include "epsreg/cauchy_pipeline.hpp"
#include "epsreg/mixed_series.hpp"
#include "epsreg/ode1d.hpp"
#include "epsreg/regularization.hpp"
#include "epsreg/trial_space.hpp"

namespace {

using namespace epsreg;

void BM_BesselSeries(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    x += 1e-3;
    benchmark::DoNotOptimize(bessel_i(static_cast<int>(state.range(0)), 5.0 + std::fmod(x, 1.0)));
  }
}
BENCHMARK(BM_BesselSeries)->Arg(0)->Arg(8)->Arg(40);

void BM_BesselMiller(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bessel_i_sequence(static_cast<int>(state.range(0)), 80.0));
}
BENCHMARK(BM_BesselMiller)->Arg(8)->Arg(40);

void BM_SolvePerturbed(benchmark::State& state) {
  const auto n = state.range(0);
  MatrixXd t(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) t(i, j) = std::sin(1.0 + i * n + j);
  const DiscreteOperator<double> op(t);
  const VectorXd f = VectorXd::Ones(n), h = VectorXd::Zero(n);
  for (auto _ : state) benchmark::DoNotOptimize(solve_perturbed(op, f, h, 1e-6).u.data());
}
BENCHMARK(BM_SolvePerturbed)->Arg(30)->Arg(200);

void BM_TrialSpace(benchmark::State& state) {
  auto disc = std::make_shared<const Discretization>(DiracKind::Gradient, ArcSpec::upper_half(),
                                                     DiskQuadrature(64, 256));
  auto seeds = std::make_shared<const TrialSeeds>(disc, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(TrialSpace(seeds, 1e-3).size());
}
BENCHMARK(BM_TrialSpace)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_MixedSeries(benchmark::State& state) {
  const BoundaryData u0 = [](double phi) { return cplx(std::cos(phi)); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_mixed_boundary_series(DiracKind::Gradient, ArcSpec::upper_half(), u0, u0, 1.0,
                                                         static_cast<int>(state.range(0)))
                                 .k()
                                 .data());
  }
}
BENCHMARK(BM_MixedSeries)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Ode1dPoint(benchmark::State& state) {
  const Ode1dProblem p{0.0, 1.0, 0.0, [](double x) { return std::cos(x); }, std::pow(10.0, -static_cast<double>(state.range(0)))};
  for (auto _ : state) benchmark::DoNotOptimize(perturbed_solution(p, 0.37).value);
}
BENCHMARK(BM_Ode1dPoint)->Arg(0)->Arg(6);

void BM_CauchyPipeline(benchmark::State& state) {
  CauchyProblemSpec spec;
  spec.u0 = [](double phi) { return cplx(std::cos(3 * phi)); };
  spec.schedule = {1e-1, 1e-2, 1e-3};
  spec.trial_size = 12;
  spec.n_r = 32;
  spec.n_phi = 128;
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_pipeline(spec).best_index);
}
BENCHMARK(BM_CauchyPipeline)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

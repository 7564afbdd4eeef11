#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <numbers>

#include "epsreg/bessel.hpp"
#include "epsreg/discretization.hpp"
#include "epsreg/disk_basis.hpp"
#include "epsreg/errors.hpp"
#include "epsreg/trial_space.hpp"
#include "oracles.hpp"

namespace epsreg {
namespace {

using std::numbers::pi;

JetField constant(cplx c) {
  return [c](double, double) { return Jet{c, {}, {}}; };
}
JetField coord_x() {
  return [](double x, double) { return Jet{cplx(x), cplx(1.0), {}}; };
}
JetField coord_y() {
  return [](double, double y) { return Jet{cplx(y), {}, cplx(1.0)}; };
}

TEST(DefiningFunction, VanishesOnGammaOnly) {
  const DefiningFunction d(ArcSpec::upper_half());
  for (int k = 0; k <= 40; ++k) {
    const double phi = pi * k / 40;
    EXPECT_NEAR(std::abs(d(std::cos(phi), std::sin(phi)).value), 0.0, 1e-15);
  }
  for (int k = 1; k < 40; ++k) {
    const double phi = pi + pi * k / 40;
    EXPECT_GT(d(std::cos(phi), std::sin(phi)).value.real(), 0.0);
  }
  EXPECT_NEAR(d(0.0, -1.0).value.real(), 1.0, 1e-15);  // sigma = 1 mid-complement
  EXPECT_NEAR(d(0.0, 0.0).value.real(), 1.0, 1e-15);
  EXPECT_THROW(DefiningFunction(ArcSpec::upper_half(), 0), InputError);
}

TEST(DefiningFunction, DegenerateArcs) {
  const DefiningFunction full(ArcSpec::full_circle());
  const DefiningFunction none(ArcSpec::empty());
  for (double x : {-0.4, 0.1, 0.7}) {
    for (double y : {-0.5, 0.2}) {
      EXPECT_NEAR(full(x, y).value.real(), 1.0 - x * x - y * y, 1e-15);
      EXPECT_NEAR(none(x, y).value.real(), 1.0, 1e-15);
      EXPECT_EQ(none(x, y).dx, cplx{});
    }
  }
}

TEST(DefiningFunction, PartialsMatchDifferences) {
  for (int power : {1, 2, 3}) {
    const DefiningFunction d(ArcSpec::between(0.3, 2.0), power);
    for (double r : {0.3, 0.8}) {
      for (double phi : {0.9, 2.6, 4.0, 5.5}) {
        const double x = r * std::cos(phi), y = r * std::sin(phi), h = 1e-6;
        const Jet j = d(x, y);
        EXPECT_NEAR(j.dx.real(), (d(x + h, y).value - d(x - h, y).value).real() / (2 * h), 1e-7);
        EXPECT_NEAR(j.dy.real(), (d(x, y + h).value - d(x, y - h).value).real() / (2 * h), 1e-7);
      }
    }
  }
}

class TrialSpaceTest : public ::testing::Test {
 protected:
  std::shared_ptr<const Discretization> disc =
      std::make_shared<const Discretization>(DiracKind::Gradient, ArcSpec::upper_half(), DiskQuadrature(32, 128), 64);
};

TEST_F(TrialSpaceTest, SeedsVanishOnGamma) {
  const TrialSeeds seeds(disc, 24);
  EXPECT_EQ(seeds.size(), 24u);
  EXPECT_LE(seeds.max_gamma_trace(), 1e-9);
  EXPECT_EQ(seeds.exponents()[0], std::make_pair(0, 0));
  EXPECT_EQ(seeds.exponents()[2], std::make_pair(0, 1));
  EXPECT_EQ(seeds.exponents()[5], std::make_pair(0, 2));
  EXPECT_THROW(TrialSeeds(disc, 0), InputError);
}

TEST_F(TrialSpaceTest, SingleSeedIsDeltaNormalized) {
  auto seeds = std::make_shared<const TrialSeeds>(disc, 1);
  const TrialSpace space(seeds, 0.5);
  ASSERT_EQ(space.size(), 1u);
  const double n2 = disc->inner_eps(seeds->samples()[0], seeds->samples()[0], 0.5).real();
  EXPECT_NEAR(std::abs(space.coefficients()(0, 0)), 1.0 / std::sqrt(n2), 1e-12);
}

TEST_F(TrialSpaceTest, MembersAreOrthonormalAndGramIsPositive) {
  auto seeds = std::make_shared<const TrialSeeds>(disc, 15);
  for (double eps : {1e-4, 1.0, 100.0}) {
    const TrialSpace space(seeds, eps);
    EXPECT_FALSE(space.truncated());
    const auto& e = space.members();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = 0; j < e.size(); ++j)
        EXPECT_NEAR(std::abs(disc->inner_eps(e[i], e[j], eps) - (i == j ? 1.0 : 0.0)), 0.0, 1e-10);
    const MatrixXc& g = space.gram_eps();
    EXPECT_LE((g - g.adjoint()).norm(), 1e-14 * g.norm());
    const Eigen::SelfAdjointEigenSolver<MatrixXc> es(g);
    EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
  }
  EXPECT_THROW(TrialSpace(seeds, 0.0), InputError);
  EXPECT_THROW(TrialSpace(seeds, std::nan("")), InputError);
}

TEST_F(TrialSpaceTest, CombinationMatchesSamples) {
  auto seeds = std::make_shared<const TrialSeeds>(disc, 6);
  const TrialSpace space(seeds, 0.1);
  const JetField e3 = space.member(3);
  const auto s = disc->sample(e3);
  EXPECT_LE((s.value - space.members()[3].value).norm(), 1e-12);
  EXPECT_LE((s.op0 - space.members()[3].op0).norm(), 1e-12);
  EXPECT_THROW(space.combination(VectorXc::Zero(2)), InputError);
}

TEST(BuildTrialSpace, Wrapper) {
  const auto s = build_trial_space(ArcSpec::between(1.0, 4.0), DiracKind::CauchyRiemann, 10,
                                   DiskQuadrature(24, 96), 0.3);
  EXPECT_EQ(s.size(), 10u);
  EXPECT_LE(s.seeds().max_gamma_trace(), 1e-9);
  EXPECT_THROW(build_trial_space(ArcSpec::upper_half(), DiracKind::Gradient, 0, DiskQuadrature(8, 16), 1.0),
               InputError);
}

TEST(InnerEps, ClosedForms) {
  const DiskQuadrature q(24, 64);
  for (double eps : {0.01, 1.0, 50.0}) {
    EXPECT_NEAR(std::abs(inner_eps(constant(2.0), constant(2.0), DiracKind::Gradient, eps, q) - 4.0 * eps * pi),
                0.0, 1e-11 * std::max(1.0, eps));
    EXPECT_NEAR(std::abs(inner_eps(coord_x(), coord_y(), DiracKind::Gradient, eps, q)), 0.0, 1e-13);
    EXPECT_NEAR(inner_eps(coord_x(), coord_x(), DiracKind::Gradient, eps, q).real(), pi + eps * pi / 4, 1e-11);
    // A(x) = 1 and A(y) = i for Cauchy-Riemann: (Ax, Ay) = -i pi.
    EXPECT_NEAR(std::abs(inner_eps(coord_x(), coord_y(), DiracKind::CauchyRiemann, eps, q) - cplx(0.0, -pi)),
                0.0, 1e-12);
  }
}

TEST(InnerEps, HermitianProperty) {
  testing::Gen gen(41);
  const DiskQuadrature q(16, 32);
  for (int trial = 0; trial < 10; ++trial) {
    const cplx a(gen.uniform(), gen.uniform()), b(gen.uniform(), gen.uniform());
    const double k = gen.uniform(0.5, 3.0);
    JetField u = [a, k](double x, double y) {
      return Jet{a * std::sin(k * x) * y, a * k * std::cos(k * x) * y, a * std::sin(k * x)};
    };
    JetField v = [b](double x, double y) { return Jet{b * x * x * y, b * 2.0 * x * y, b * x * x}; };
    for (auto kind : {DiracKind::Gradient, DiracKind::CauchyRiemann}) {
      const double eps = gen.log_uniform(-2, 2);
      const cplx uv = inner_eps(u, v, kind, eps, q), vu = inner_eps(v, u, kind, eps, q);
      EXPECT_NEAR(std::abs(uv - std::conj(vu)), 0.0, 1e-13);
      EXPECT_GE(inner_eps(u, u, kind, eps, q).real(), 0.0);
    }
  }
}

TEST(InnerEps, BasisFunctionAgainstRadialIntegral) {
  // (b, b)_eps = int_0^1 (g'^2 + g^2 / r^2 + eps g^2) r dr for b_1^(1).
  for (double eps : {0.25, 1.0, 4.0}) {
    const BasisFunction b(DiracKind::Gradient, 1, 1, eps);
    const double k = std::sqrt(eps);
    const double want = testing::simpson(
        [&](double r) {
          if (r == 0.0) return 0.0;
          const double g = testing::bessel_series(1, k * r);
          const double dg = k * 0.5 * (testing::bessel_series(0, k * r) + testing::bessel_series(2, k * r));
          return (dg * dg + g * g / (r * r) + eps * g * g) * r;
        },
        0.0, 1.0, 4000);
    const cplx got = inner_eps(b.as_field(), b.as_field(), DiracKind::Gradient, eps, DiskQuadrature(40, 64));
    EXPECT_NEAR(got.real(), want, 1e-10 * want);
    EXPECT_NEAR(got.imag(), 0.0, 1e-14);
  }
}

TEST(BoundaryForm, ClosedForms) {
  const ArcSpec upper = ArcSpec::upper_half();
  // Constant: trace only.
  EXPECT_NEAR(boundary_form_h(constant(1.0), constant(1.0), DiracKind::Gradient, upper).real(), pi, 1e-13);
  // x: cos^2 on each half, conormal r d/dr x = x.
  EXPECT_NEAR(boundary_form_h(coord_x(), coord_x(), DiracKind::Gradient, upper).real(), pi, 1e-13);
  // Gamma empty: pure conormal form; full circle: pure trace form.
  EXPECT_NEAR(boundary_form_h(constant(1.0), constant(1.0), DiracKind::Gradient, ArcSpec::empty()).real(), 0.0,
              1e-15);
  EXPECT_NEAR(boundary_form_h(coord_x(), coord_y(), DiracKind::Gradient, ArcSpec::full_circle()).real(), 0.0,
              1e-13);
  EXPECT_NEAR(boundary_form_h(coord_y(), coord_y(), DiracKind::Gradient, ArcSpec::full_circle()).real(), pi,
              1e-13);
}

}  // namespace
}  // namespace epsreg

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "epsreg/dirac.hpp"
#include "epsreg/errors.hpp"
#include "oracles.hpp"

namespace epsreg {
namespace {

constexpr cplx kI{0.0, 1.0};

TEST(Dirac, ParseAndPrint) {
  EXPECT_EQ(parse_dirac_kind("gradient"), DiracKind::Gradient);
  EXPECT_EQ(parse_dirac_kind("cauchy_riemann"), DiracKind::CauchyRiemann);
  EXPECT_EQ(to_string(DiracKind::CauchyRiemann), "cauchy_riemann");
  EXPECT_THROW(parse_dirac_kind("laplace"), InputError);
  EXPECT_EQ(codomain_dim(DiracKind::Gradient), 2);
  EXPECT_EQ(codomain_dim(DiracKind::CauchyRiemann), 1);
}

TEST(Dirac, SymbolIdentityHolds) {
  testing::Gen gen(21);
  for (int k = 0; k < 200; ++k) {
    const double a = gen.uniform(-100, 100), b = gen.uniform(-100, 100);
    for (auto kind : {DiracKind::Gradient, DiracKind::CauchyRiemann}) {
      EXPECT_LE(symbol_identity_defect(kind, a, b), 1e-14 * std::max(1.0, a * a + b * b));
    }
  }
  const MatrixXc s = symbol(DiracKind::CauchyRiemann, 2.0, 3.0);
  EXPECT_EQ(s(0, 0), cplx(2.0, 3.0));
}

TEST(Dirac, ApplyOperatorOnJets) {
  const Jet j{cplx(1.0), cplx(2.0, 1.0), cplx(-1.0, 4.0)};
  const auto g = apply_operator(DiracKind::Gradient, j);
  EXPECT_EQ(g.c[0], j.dx);
  EXPECT_EQ(g.c[1], j.dy);
  const auto cr = apply_operator(DiracKind::CauchyRiemann, j);
  EXPECT_EQ(cr.c[0], j.dx + kI * j.dy);
  EXPECT_EQ(cr.c[1], cplx{});
}

TEST(Dirac, HolomorphicFunctionsAreInTheCauchyRiemannKernel) {
  // u = z^3 has d1 u + i d2 u = 0.
  const ScalarField u = [](double x, double y) { return std::pow(cplx(x, y), 3); };
  const VectorField au = apply_operator(DiracKind::CauchyRiemann, differentiate(u, 1e-4));
  for (double x : {-0.5, 0.0, 0.3})
    for (double y : {-0.2, 0.6}) EXPECT_LT(std::abs(au(x, y).c[0]), 1e-7);
}

TEST(Dirac, ConormalForms) {
  // Gradient: r d/dr. For u = x^2 + y^2 on the unit circle that is 2.
  const Jet j_sq = {cplx(1.0), cplx(2.0 * 0.6), cplx(2.0 * 0.8)};
  EXPECT_NEAR(std::abs(conormal(DiracKind::Gradient, 0.6, 0.8,
                                apply_operator(DiracKind::Gradient, j_sq)) - 2.0), 0.0, 1e-15);
  // Cauchy-Riemann: conj(z) (d1 + i d2) u. For u = conj(z): (d1 + i d2) conj(z) = 2,
  // so the conormal is 2 conj(z).
  const double x = std::cos(0.7), y = std::sin(0.7);
  const Jet j_bar = {cplx(x, -y), cplx(1.0), cplx(0.0, -1.0)};
  const cplx n = conormal(DiracKind::CauchyRiemann, x, y, apply_operator(DiracKind::CauchyRiemann, j_bar));
  EXPECT_NEAR(std::abs(n - 2.0 * cplx(x, -y)), 0.0, 1e-15);
}

TEST(Dirac, OperatorDotIsHermitian) {
  OperatorValue a, b;
  a.c = {cplx(1.0, 2.0), cplx(0.5, -1.0)};
  b.c = {cplx(-0.3, 1.0), cplx(2.0, 0.25)};
  EXPECT_EQ(operator_dot(DiracKind::Gradient, a, b), std::conj(operator_dot(DiracKind::Gradient, b, a)));
  EXPECT_EQ(operator_dot(DiracKind::CauchyRiemann, a, b), a.c[0] * std::conj(b.c[0]));
}

TEST(Dirac, DifferentiateIsSecondOrder) {
  const ScalarField u = [](double x, double y) { return cplx(std::sin(x) * std::exp(y)); };
  const auto j = differentiate(u, 1e-4)(0.3, -0.2);
  EXPECT_NEAR(j.dx.real(), std::cos(0.3) * std::exp(-0.2), 1e-8);
  EXPECT_NEAR(j.dy.real(), std::sin(0.3) * std::exp(-0.2), 1e-8);
}

TEST(Dirac, FieldRejectsPointsOutsideTheDisk) {
  const VectorField f = apply_operator(DiracKind::Gradient, differentiate([](double, double) {
                                         return cplx(1.0);
                                       }));
  EXPECT_NO_THROW(f(1.0, 0.0));
  EXPECT_THROW(f(1.0, 0.1), DomainError);
}

}  // namespace
}  // namespace epsreg

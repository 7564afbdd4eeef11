#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "epsreg/arc.hpp"
#include "epsreg/errors.hpp"
#include "epsreg/quadrature.hpp"

namespace epsreg {
namespace {

using std::numbers::pi;

TEST(GaussLegendre, ExactForPolynomialsUpToDegree2nMinus1) {
  for (int n : {1, 2, 5, 16, 64}) {
    const auto rule = gauss_legendre(n, -1.0, 2.0);
    for (int d = 0; d <= 2 * n - 1 && d <= 40; ++d) {
      double sum = 0.0;
      for (std::size_t k = 0; k < rule.nodes.size(); ++k) sum += rule.weights[k] * std::pow(rule.nodes[k], d);
      const double want = (std::pow(2.0, d + 1) - std::pow(-1.0, d + 1)) / (d + 1);
      EXPECT_NEAR(sum, want, 1e-12 * std::max(1.0, std::abs(want))) << n << " " << d;
    }
  }
  EXPECT_THROW(gauss_legendre(0), InputError);
}

TEST(GaussLegendre, NodesSortedAndInside) {
  const auto rule = gauss_legendre(33, 0.0, 1.0);
  EXPECT_TRUE(std::is_sorted(rule.nodes.begin(), rule.nodes.end()));
  EXPECT_GT(rule.nodes.front(), 0.0);
  EXPECT_LT(rule.nodes.back(), 1.0);
  for (double w : rule.weights) EXPECT_GT(w, 0.0);
}

TEST(DiskQuadrature, AreaAndMoments) {
  const DiskQuadrature q(32, 64);
  EXPECT_EQ(q.size(), 32u * 64u);
  EXPECT_NEAR(q.integrate([](double, double) { return 1.0; }), pi, 1e-13);
  EXPECT_NEAR(q.integrate([](double x, double) { return x * x; }), pi / 4, 1e-13);
  EXPECT_NEAR(q.integrate([](double x, double y) { return x * y; }), 0.0, 1e-14);
  // |z|^4 integrates to pi/3.
  EXPECT_NEAR(q.integrate([](double x, double y) { return std::pow(x * x + y * y, 2); }), pi / 3, 1e-13);
  EXPECT_NEAR(std::abs(q.integrate([](double x, double y) { return std::complex<double>(x, y); })), 0.0, 1e-14);
  EXPECT_THROW(DiskQuadrature(0, 4), InputError);
}

TEST(Arc, WrapAngle) {
  EXPECT_EQ(wrap_angle(0.0), 0.0);
  EXPECT_NEAR(wrap_angle(-pi / 2), 1.5 * pi, 1e-15);
  EXPECT_NEAR(wrap_angle(5 * pi), pi, 1e-14);
  EXPECT_EQ(wrap_angle(2 * pi), 0.0);
}

TEST(Arc, LengthsContainmentAndComplement) {
  const ArcSpec upper = ArcSpec::upper_half();
  EXPECT_NEAR(upper.length(), pi, 1e-15);
  EXPECT_TRUE(upper.contains(0.5 * pi));
  EXPECT_TRUE(upper.contains(0.0));
  EXPECT_FALSE(upper.contains(1.5 * pi));
  const ArcSpec lower = upper.complement();
  EXPECT_NEAR(lower.length(), pi, 1e-15);
  EXPECT_TRUE(lower.contains(1.5 * pi));

  // An arc crossing phi = 0.
  const ArcSpec wrap = ArcSpec::between(1.5 * pi, 0.5 * pi);
  EXPECT_NEAR(wrap.length(), pi, 1e-15);
  EXPECT_TRUE(wrap.contains(0.1));
  EXPECT_FALSE(wrap.contains(pi));
  EXPECT_NEAR(wrap.offset(0.0), 0.5 * pi, 1e-15);

  EXPECT_TRUE(ArcSpec::full_circle().complement().is_empty());
  EXPECT_TRUE(ArcSpec::empty().complement().is_full());
  EXPECT_EQ(ArcSpec::empty().length(), 0.0);
  EXPECT_THROW(ArcSpec::between(1.0, 1.0), InputError);
  EXPECT_THROW(ArcSpec::between(0.0, 2 * pi), InputError);
  EXPECT_THROW(ArcSpec::between(std::nan(""), 1.0), InputError);
}

TEST(Arc, RuleIntegratesAlongTheArc) {
  const ArcSpec arc = ArcSpec::between(0.25 * pi, 1.25 * pi);
  const auto rule = arc_rule(arc, 40);
  ASSERT_EQ(rule.phi.size(), 40u);
  EXPECT_NEAR(std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0), pi, 1e-13);
  double s = 0.0;
  for (std::size_t k = 0; k < rule.phi.size(); ++k) {
    EXPECT_TRUE(arc.contains(rule.phi[k]));
    s += rule.weights[k] * std::sin(rule.phi[k]);
  }
  EXPECT_NEAR(s, 2.0 * std::cos(0.25 * pi), 1e-13);
  EXPECT_TRUE(arc_rule(ArcSpec::empty(), 10).phi.empty());

  const auto bq = boundary_quadrature(ArcSpec::full_circle(), 16);
  EXPECT_EQ(bq.gamma.phi.size(), 16u);
  EXPECT_TRUE(bq.complement.phi.empty());
}

}  // namespace
}  // namespace epsreg

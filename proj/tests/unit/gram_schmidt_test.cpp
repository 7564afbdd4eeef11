#include <gtest/gtest.h>

#include <vector>

#include "epsreg/gram_schmidt.hpp"
#include "epsreg/linalg.hpp"
#include "oracles.hpp"

namespace epsreg {
namespace {

auto euclid = [](const VectorXc& a, const VectorXc& b) { return b.dot(a); };  // linear in a

TEST(GramSchmidt, TwoVectors) {
  VectorXc a(2), b(2);
  a << 1.0, 0.0;
  b << 1.0, 1.0;
  const auto gs = gram_schmidt(std::vector<VectorXc>{a, b}, euclid);
  ASSERT_EQ(gs.basis.size(), 2u);
  EXPECT_NEAR(std::abs(gs.basis[0](0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(gs.basis[1](1) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(gs.basis[1](0)), 0.0, 1e-15);
  // e_1 = b - a.
  EXPECT_NEAR(std::abs(gs.coefficients(1, 0) + 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(gs.coefficients(1, 1) - 1.0), 0.0, 1e-15);
}

TEST(GramSchmidt, DropsDependentVectors) {
  VectorXc a(3), b(3), c(3);
  a << 1.0, 2.0, 0.0;
  b << 2.0, 4.0, 0.0;
  c << 0.0, 0.0, 3.0;
  const auto gs = gram_schmidt(std::vector<VectorXc>{a, b, c}, euclid);
  EXPECT_EQ(gs.basis.size(), 2u);
  ASSERT_EQ(gs.dropped.size(), 1u);
  EXPECT_EQ(gs.dropped[0], 1u);
  EXPECT_EQ(gs.kept, (std::vector<std::size_t>{0, 2}));
  const auto zero = gram_schmidt(std::vector<VectorXc>{VectorXc::Zero(3)}, euclid);
  EXPECT_TRUE(zero.basis.empty());
}

TEST(GramSchmidt, OrthonormalAndSpanPreservingUnderWeightedProducts) {
  testing::Gen gen(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = gen.integer(2, 12), count = gen.integer(1, dim);
    VectorXd w(dim);
    for (int i = 0; i < dim; ++i) w(i) = gen.uniform(0.1, 3.0);
    auto inner = [&w](const VectorXc& a, const VectorXc& b) {
      return (b.conjugate().array() * w.array().cast<cplx>() * a.array()).sum();
    };
    std::vector<VectorXc> in;
    for (int k = 0; k < count; ++k) {
      VectorXc v(dim);
      for (int i = 0; i < dim; ++i) v(i) = cplx(gen.uniform(), gen.uniform());
      in.push_back(v);
    }
    const auto gs = gram_schmidt(in, inner);
    ASSERT_EQ(gs.basis.size(), in.size());
    for (std::size_t i = 0; i < gs.basis.size(); ++i) {
      for (std::size_t j = 0; j < gs.basis.size(); ++j) {
        EXPECT_NEAR(std::abs(inner(gs.basis[i], gs.basis[j]) - (i == j ? 1.0 : 0.0)), 0.0, 1e-10);
      }
      VectorXc rebuilt = VectorXc::Zero(dim);
      for (std::size_t k = 0; k < in.size(); ++k) rebuilt += gs.coefficients(i, k) * in[k];
      EXPECT_LE((rebuilt - gs.basis[i]).norm(), 1e-12);
      for (std::size_t k = i + 1; k < in.size(); ++k) EXPECT_EQ(gs.coefficients(i, k), cplx{});
    }
  }
}

TEST(GramSchmidt, SurvivesNearlyDependentInput) {
  // Hilbert-like columns: classical Gram-Schmidt loses orthogonality here.
  const int n = 8;
  std::vector<VectorXc> in;
  for (int k = 0; k < n; ++k) {
    VectorXc v(40);
    for (int i = 0; i < 40; ++i) v(i) = std::pow(i / 40.0, k);
    in.push_back(v);
  }
  const auto gs = gram_schmidt(in, euclid);
  ASSERT_EQ(gs.basis.size(), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) EXPECT_LT(std::abs(euclid(gs.basis[i], gs.basis[j])), 1e-10);
}

}  // namespace
}  // namespace epsreg

#pragma once

// Planar Dirac operators A = A_1 d/dx + A_2 d/dy with sigma(A)(xi)^* sigma(A)(xi)
// = |xi|^2 E_k:
//   Gradient       A = grad,        k = 1, l = 2, A^* = -div
//   CauchyRiemann  A = d1 + i d2,   k = l = 1,    A^* = -d1 + i d2
// Scalar fields are complex valued throughout; gradient fields simply carry a
// zero imaginary part.

#include <array>
#include <functional>
#include <string_view>

#include "epsreg/linalg.hpp"

namespace epsreg {

enum class DiracKind { Gradient, CauchyRiemann };

std::string_view to_string(DiracKind kind) noexcept;

/// Parses "gradient" / "cauchy_riemann"; throws InputError otherwise.
DiracKind parse_dirac_kind(std::string_view name);

/// Number l of components of Au.
constexpr int codomain_dim(DiracKind kind) noexcept {
  return kind == DiracKind::Gradient ? 2 : 1;
}

/// Value and first Cartesian partials of a scalar field at one point.
struct Jet {
  cplx value{};
  cplx dx{};
  cplx dy{};
};

/// Au at one point; only the first codomain_dim(kind) components are used.
struct OperatorValue {
  std::array<cplx, 2> c{};

  OperatorValue& operator+=(const OperatorValue& o) {
    c[0] += o.c[0];
    c[1] += o.c[1];
    return *this;
  }
  OperatorValue& operator-=(const OperatorValue& o) {
    c[0] -= o.c[0];
    c[1] -= o.c[1];
    return *this;
  }
};

using ScalarField = std::function<cplx(double x, double y)>;
using JetField = std::function<Jet(double x, double y)>;
using VectorField = std::function<OperatorValue(double x, double y)>;

/// Symbol sigma(A)(xi) as an l x k matrix.
MatrixXc symbol(DiracKind kind, double xi1, double xi2);

/// max |sigma^* sigma - |xi|^2 E_k| entrywise.
double symbol_identity_defect(DiracKind kind, double xi1, double xi2);

/// Au from the partial derivatives of u.
OperatorValue apply_operator(DiracKind kind, const Jet& u) noexcept;

/// n(Au) = sigma(A)(x)^* Au at a point x of the unit circle. For Gradient this
/// is r du/dr, for CauchyRiemann it is conj(z) (d1 + i d2) u.
cplx conormal(DiracKind kind, double x, double y, const OperatorValue& au) noexcept;

/// Jet of an arbitrary closure by centered differences with the given step.
JetField differentiate(ScalarField u, double step = 1e-5);

/// Au as an evaluable field. Throws DomainError for query points with r > 1.
VectorField apply_operator(DiracKind kind, JetField u);

/// Pointwise Hermitian product sum_c a_c conj(b_c) over the l components.
cplx operator_dot(DiracKind kind, const OperatorValue& a, const OperatorValue& b) noexcept;

}  // namespace epsreg

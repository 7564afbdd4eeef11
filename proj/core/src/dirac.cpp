#include "epsreg/dirac.hpp"

#include <cmath>
#include <string>

#include "epsreg/errors.hpp"

namespace epsreg {

namespace {
constexpr cplx kI{0.0, 1.0};
}

std::string_view to_string(DiracKind kind) noexcept {
  return kind == DiracKind::Gradient ? "gradient" : "cauchy_riemann";
}

DiracKind parse_dirac_kind(std::string_view name) {
  if (name == "gradient") return DiracKind::Gradient;
  if (name == "cauchy_riemann") return DiracKind::CauchyRiemann;
  throw InputError("unknown operator '" + std::string(name) +
                   "' (expected gradient or cauchy_riemann)");
}

MatrixXc symbol(DiracKind kind, double xi1, double xi2) {
  if (kind == DiracKind::Gradient) {
    MatrixXc s(2, 1);
    s << xi1, xi2;
    return s;
  }
  MatrixXc s(1, 1);
  s << cplx(xi1, xi2);
  return s;
}

double symbol_identity_defect(DiracKind kind, double xi1, double xi2) {
  const MatrixXc s = symbol(kind, xi1, xi2);
  MatrixXc d = s.adjoint() * s;
  d.diagonal().array() -= cplx(xi1 * xi1 + xi2 * xi2);
  return d.cwiseAbs().maxCoeff();
}

OperatorValue apply_operator(DiracKind kind, const Jet& u) noexcept {
  OperatorValue out;
  if (kind == DiracKind::Gradient) {
    out.c[0] = u.dx;
    out.c[1] = u.dy;
  } else {
    out.c[0] = u.dx + kI * u.dy;
  }
  return out;
}

cplx conormal(DiracKind kind, double x, double y, const OperatorValue& au) noexcept {
  if (kind == DiracKind::Gradient) return x * au.c[0] + y * au.c[1];
  return cplx(x, -y) * au.c[0];
}

cplx operator_dot(DiracKind kind, const OperatorValue& a, const OperatorValue& b) noexcept {
  cplx s = a.c[0] * std::conj(b.c[0]);
  if (kind == DiracKind::Gradient) s += a.c[1] * std::conj(b.c[1]);
  return s;
}

JetField differentiate(ScalarField u, double step) {
  return [u = std::move(u), step](double x, double y) {
    Jet j;
    j.value = u(x, y);
    j.dx = (u(x + step, y) - u(x - step, y)) / (2.0 * step);
    j.dy = (u(x, y + step) - u(x, y - step)) / (2.0 * step);
    return j;
  };
}

VectorField apply_operator(DiracKind kind, JetField u) {
  return [kind, u = std::move(u)](double x, double y) {
    if (std::hypot(x, y) > 1.0 + 1e-12) {
      throw DomainError("apply_operator: query point outside the unit disk");
    }
    return apply_operator(kind, u(x, y));
  };
}

}  // namespace epsreg

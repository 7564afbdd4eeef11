#include "epsreg/discretization.hpp"

#include <cmath>

#include "epsreg/errors.hpp"

namespace epsreg {

namespace {

// Empty vectors stand for "not sampled" and are left alone by the algebra.
void axpy(VectorXc& a, const VectorXc& b, cplx s) {
  if (a.size() == 0 && b.size() == 0) return;
  if (a.size() != b.size()) throw InputError("FieldSamples: mismatched sample layouts");
  a += s * b;
}

void scale(VectorXc& a, cplx s) {
  if (a.size() != 0) a *= s;
}

cplx weighted_dot(const VectorXc& a, const VectorXc& b, const VectorXd& w) {
  // sum_k w_k a_k conj(b_k)
  return (a.array() * b.conjugate().array() * w.array()).sum();
}

VectorXd to_eigen(const std::vector<double>& v) {
  return Eigen::Map<const VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

FieldSamples& FieldSamples::operator+=(const FieldSamples& o) {
  axpy(value, o.value, 1.0);
  axpy(op0, o.op0, 1.0);
  axpy(op1, o.op1, 1.0);
  axpy(trace, o.trace, 1.0);
  axpy(conormal, o.conormal, 1.0);
  return *this;
}

FieldSamples& FieldSamples::operator-=(const FieldSamples& o) {
  axpy(value, o.value, -1.0);
  axpy(op0, o.op0, -1.0);
  axpy(op1, o.op1, -1.0);
  axpy(trace, o.trace, -1.0);
  axpy(conormal, o.conormal, -1.0);
  return *this;
}

FieldSamples& FieldSamples::operator*=(cplx s) {
  scale(value, s);
  scale(op0, s);
  scale(op1, s);
  scale(trace, s);
  scale(conormal, s);
  return *this;
}

FieldSamples operator+(FieldSamples a, const FieldSamples& b) { return a += b; }
FieldSamples operator-(FieldSamples a, const FieldSamples& b) { return a -= b; }
FieldSamples operator*(cplx s, FieldSamples a) { return a *= s; }
FieldSamples operator*(FieldSamples a, double s) { return a *= s; }

Discretization::Discretization(DiracKind kind, ArcSpec arc, DiskQuadrature quad, int n_arc)
    : kind_(kind),
      arc_(arc),
      quad_(std::move(quad)),
      boundary_(boundary_quadrature(arc_, n_arc)),
      weights_(to_eigen(quad_.weights())),
      gamma_weights_(to_eigen(boundary_.gamma.weights)),
      complement_weights_(to_eigen(boundary_.complement.weights)) {}

FieldSamples Discretization::sample(const JetField& u, bool interior) const {
  FieldSamples s;
  const bool two = codomain_dim(kind_) == 2;
  if (interior) {
    const auto n = static_cast<Eigen::Index>(quad_.size());
    s.value.resize(n);
    s.op0.resize(n);
    if (two) s.op1.resize(n);
    const auto& xs = quad_.x();
    const auto& ys = quad_.y();
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto idx = static_cast<std::size_t>(k);
      const Jet j = u(xs[idx], ys[idx]);
      const OperatorValue a = apply_operator(kind_, j);
      s.value(k) = j.value;
      s.op0(k) = a.c[0];
      if (two) s.op1(k) = a.c[1];
    }
  }
  const auto& g = boundary_.gamma.phi;
  s.trace.resize(static_cast<Eigen::Index>(g.size()));
  for (std::size_t k = 0; k < g.size(); ++k) {
    s.trace(static_cast<Eigen::Index>(k)) = u(std::cos(g[k]), std::sin(g[k])).value;
  }
  const auto& c = boundary_.complement.phi;
  s.conormal.resize(static_cast<Eigen::Index>(c.size()));
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double x = std::cos(c[k]), y = std::sin(c[k]);
    s.conormal(static_cast<Eigen::Index>(k)) = conormal(kind_, x, y, apply_operator(kind_, u(x, y)));
  }
  for (Eigen::Index k = 0; k < s.value.size(); ++k) {
    if (!std::isfinite(s.value(k).real()) || !std::isfinite(s.value(k).imag())) {
      throw NumericError("sampled field has a non-finite value");
    }
  }
  return s;
}

OperatorSamples Discretization::sample_operator(const VectorField& f) const {
  OperatorSamples out;
  const auto n = static_cast<Eigen::Index>(quad_.size());
  out.c0.resize(n);
  if (codomain_dim(kind_) == 2) out.c1.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const OperatorValue v = f(quad_.x()[idx], quad_.y()[idx]);
    out.c0(k) = v.c[0];
    if (out.c1.size()) out.c1(k) = v.c[1];
  }
  return out;
}

VectorXc Discretization::sample_scalar(const ScalarField& h) const {
  const auto n = static_cast<Eigen::Index>(quad_.size());
  VectorXc out(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    out(k) = h(quad_.x()[idx], quad_.y()[idx]);
  }
  return out;
}

OperatorSamples Discretization::apply(const FieldSamples& u) const { return {u.op0, u.op1}; }

cplx Discretization::l2(const FieldSamples& u, const FieldSamples& v) const {
  return weighted_dot(u.value, v.value, weights_);
}

cplx Discretization::l2(const VectorXc& u, const VectorXc& v) const {
  return weighted_dot(u, v, weights_);
}

cplx Discretization::energy(const FieldSamples& u, const FieldSamples& v) const {
  return energy(apply(u), apply(v));
}

cplx Discretization::energy(const OperatorSamples& f, const OperatorSamples& g) const {
  cplx s = weighted_dot(f.c0, g.c0, weights_);
  if (codomain_dim(kind_) == 2) s += weighted_dot(f.c1, g.c1, weights_);
  return s;
}

cplx Discretization::inner_eps(const FieldSamples& u, const FieldSamples& v,
                               double epsilon) const {
  return energy(u, v) + epsilon * l2(u, v);
}

cplx Discretization::boundary_form(const FieldSamples& u, const FieldSamples& v) const {
  return weighted_dot(u.trace, v.trace, gamma_weights_) +
         weighted_dot(u.conormal, v.conormal, complement_weights_);
}

double Discretization::l2_norm(const VectorXc& u) const {
  return std::sqrt(std::abs(weighted_dot(u, u, weights_)));
}

double Discretization::l2_norm(const OperatorSamples& f) const {
  return std::sqrt(std::abs(energy(f, f)));
}

cplx inner_eps(const JetField& u, const JetField& v, DiracKind kind, double epsilon,
               const DiskQuadrature& quad) {
  cplx sum{};
  const auto& xs = quad.x();
  const auto& ys = quad.y();
  const auto& w = quad.weights();
  for (std::size_t k = 0; k < quad.size(); ++k) {
    const Jet ju = u(xs[k], ys[k]);
    const Jet jv = v(xs[k], ys[k]);
    const cplx term = operator_dot(kind, apply_operator(kind, ju), apply_operator(kind, jv)) +
                      epsilon * ju.value * std::conj(jv.value);
    if (!std::isfinite(term.real()) || !std::isfinite(term.imag())) {
      throw NumericError("inner_eps: non-finite field value");
    }
    sum += w[k] * term;
  }
  return sum;
}

cplx boundary_form_h(const JetField& u, const JetField& v, DiracKind kind, const ArcSpec& arc,
                     int n_arc) {
  if (arc.length() <= 0.0 && arc.complement().length() <= 0.0) {
    throw InputError("boundary_form_h: Gamma and its complement are both empty");
  }
  const auto bq = boundary_quadrature(arc, n_arc);
  cplx sum{};
  for (std::size_t k = 0; k < bq.gamma.phi.size(); ++k) {
    const double x = std::cos(bq.gamma.phi[k]), y = std::sin(bq.gamma.phi[k]);
    sum += bq.gamma.weights[k] * u(x, y).value * std::conj(v(x, y).value);
  }
  for (std::size_t k = 0; k < bq.complement.phi.size(); ++k) {
    const double x = std::cos(bq.complement.phi[k]), y = std::sin(bq.complement.phi[k]);
    const cplx nu = conormal(kind, x, y, apply_operator(kind, u(x, y)));
    const cplx nv = conormal(kind, x, y, apply_operator(kind, v(x, y)));
    sum += bq.complement.weights[k] * nu * std::conj(nv);
  }
  return sum;
}

}  // namespace epsreg

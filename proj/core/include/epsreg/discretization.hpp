#pragma once

// Fields on the unit disk sampled at the nodes of a fixed quadrature: values
// and Au at the interior nodes, the trace t(u) on Gamma and the conormal
// trace n(Au) on the complement arc. Sampled fields form a vector space, so
// Gram-Schmidt and Galerkin assembly operate on them directly.

#include <memory>

#include "epsreg/arc.hpp"
#include "epsreg/dirac.hpp"
#include "epsreg/quadrature.hpp"

namespace epsreg {

struct FieldSamples {
  VectorXc value;     // u at interior nodes
  VectorXc op0;       // first component of Au at interior nodes
  VectorXc op1;       // second component (Gradient only; empty otherwise)
  VectorXc trace;     // t(u) on Gamma nodes
  VectorXc conormal;  // n(Au) on complement nodes

  FieldSamples& operator+=(const FieldSamples& o);
  FieldSamples& operator-=(const FieldSamples& o);
  FieldSamples& operator*=(cplx s);
};

FieldSamples operator+(FieldSamples a, const FieldSamples& b);
FieldSamples operator-(FieldSamples a, const FieldSamples& b);
FieldSamples operator*(cplx s, FieldSamples a);
FieldSamples operator*(FieldSamples a, double s);

/// Au sampled at interior nodes.
struct OperatorSamples {
  VectorXc c0;
  VectorXc c1;
};

class Discretization {
 public:
  Discretization(DiracKind kind, ArcSpec arc, DiskQuadrature quad = DiskQuadrature(),
                 int n_arc = 128);

  DiracKind kind() const noexcept { return kind_; }
  const ArcSpec& arc() const noexcept { return arc_; }
  const DiskQuadrature& quadrature() const noexcept { return quad_; }
  const BoundaryQuadrature& boundary() const noexcept { return boundary_; }

  /// Samples everything; `interior = false` leaves the interior arrays empty
  /// (enough for the boundary form).
  FieldSamples sample(const JetField& u, bool interior = true) const;
  OperatorSamples sample_operator(const VectorField& f) const;
  VectorXc sample_scalar(const ScalarField& h) const;
  OperatorSamples apply(const FieldSamples& u) const;

  /// (u, v)_{L2(D)}.
  cplx l2(const FieldSamples& u, const FieldSamples& v) const;
  cplx l2(const VectorXc& u, const VectorXc& v) const;
  /// (Au, Av)_{L2(D)}.
  cplx energy(const FieldSamples& u, const FieldSamples& v) const;
  cplx energy(const OperatorSamples& f, const OperatorSamples& g) const;
  /// (Au, Av) + eps (u, v).
  cplx inner_eps(const FieldSamples& u, const FieldSamples& v, double epsilon) const;
  /// int_Gamma t(u) conj t(v) dphi + int_{complement} n(Au) conj n(Av) dphi.
  cplx boundary_form(const FieldSamples& u, const FieldSamples& v) const;

  double l2_norm(const VectorXc& u) const;
  double l2_norm(const OperatorSamples& f) const;

 private:
  DiracKind kind_;
  ArcSpec arc_;
  DiskQuadrature quad_;
  BoundaryQuadrature boundary_;
  VectorXd weights_;
  VectorXd gamma_weights_;
  VectorXd complement_weights_;
};

/// Quadrature value of (u, v)_eps for evaluable fields; Au is taken from the
/// jets (analytic for basis functions, differences for differentiate()).
cplx inner_eps(const JetField& u, const JetField& v, DiracKind kind, double epsilon,
               const DiskQuadrature& quad);

/// Boundary Hermitian form h(u, v) with arc-L2 inner products. Throws
/// InputError when both Gamma and its complement are empty.
cplx boundary_form_h(const JetField& u, const JetField& v, DiracKind kind, const ArcSpec& arc,
                     int n_arc = 128);

}  // namespace epsreg

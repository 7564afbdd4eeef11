#pragma once

// Mixed boundary problem for (-Delta + eps) u = 0 with t(u) = u0 on Gamma and
// n(Au) = u1 on the complement, solved by expansion in the separated basis
// orthonormalized under the boundary form h.

#include <vector>

#include "epsreg/boundary_lift.hpp"
#include "epsreg/disk_basis.hpp"

namespace epsreg {

class MixedSeriesSolution {
 public:
  MixedSeriesSolution(std::vector<BasisFunction> basis, VectorXd basis_norms,
                      MatrixXc coefficients, VectorXc k, std::vector<std::size_t> dropped);

  /// b_0, b_1^(1), b_1^(2), ... in disk_basis order.
  const std::vector<BasisFunction>& basis() const noexcept { return basis_; }
  /// sqrt(h(b_k, b_k)).
  const VectorXd& basis_norms() const noexcept { return basis_norms_; }
  /// B_i = sum_k coefficients(i, k) b_k.
  const MatrixXc& coefficients() const noexcept { return coefficients_; }
  /// k_i = h(u, B_i) from the boundary data.
  const VectorXc& k() const noexcept { return k_; }
  /// The solution sum_i k_i B_i expressed on the b_k.
  const VectorXc& basis_coefficients() const noexcept { return basis_coefficients_; }
  /// Basis indices dropped as numerically dependent under h.
  const std::vector<std::size_t>& dropped() const noexcept { return dropped_; }

  Jet jet(double x, double y) const;
  JetField field() const;

 private:
  std::vector<BasisFunction> basis_;
  VectorXd basis_norms_;
  MatrixXc coefficients_;
  VectorXc k_;
  VectorXc basis_coefficients_;
  std::vector<std::size_t> dropped_;
};

/// Empty u0 / u1 count as zero data. Throws InputError for eps <= 0 or
/// max_order < 0, and when Gamma and its complement are both empty.
MixedSeriesSolution solve_mixed_boundary_series(DiracKind kind, const ArcSpec& arc,
                                                const BoundaryData& u0, const BoundaryData& u1,
                                                double epsilon, int max_order = 16,
                                                int n_arc = 128);

}  // namespace epsreg

#pragma once

#include <cmath>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "epsreg/linalg.hpp"

namespace epsreg {

template <class V, class S>
struct GramSchmidtResult {
  std::vector<V> basis;
  /// basis[i] = sum_k coefficients(i, k) * input[k]; lower triangular in the
  /// kept columns.
  Matrix<S> coefficients;
  std::vector<std::size_t> kept;
  std::vector<std::size_t> dropped;
};

/// Modified Gram-Schmidt with one reorthogonalization pass under an arbitrary
/// Hermitian inner product `inner(a, b)`, linear in its first argument.
/// V needs `V - S * V` and `V * double`. An input whose residual norm falls
/// below drop_tol times its own norm is dropped and reported.
template <class V, class Inner>
auto gram_schmidt(const std::vector<V>& vectors, Inner&& inner, double drop_tol = 1e-10) {
  using S = std::decay_t<decltype(inner(vectors.front(), vectors.front()))>;
  const auto n = static_cast<Eigen::Index>(vectors.size());
  GramSchmidtResult<V, S> out;
  std::vector<Vector<S>> rows;

  for (Eigen::Index k = 0; k < n; ++k) {
    const V& v = vectors[static_cast<std::size_t>(k)];
    const double norm0 = std::sqrt(std::abs(inner(v, v)));
    V w = v;
    Vector<S> coef = Vector<S>::Zero(n);
    coef(k) = S(1);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < out.basis.size(); ++j) {
        const S c = inner(w, out.basis[j]);
        w = w - c * out.basis[j];
        coef -= c * rows[j];
      }
    }
    const double nrm = std::sqrt(std::abs(inner(w, w)));
    if (!(norm0 > 0.0) || !(nrm > drop_tol * norm0)) {
      out.dropped.push_back(static_cast<std::size_t>(k));
      continue;
    }
    out.basis.push_back(w * (1.0 / nrm));
    rows.push_back(coef / nrm);
    out.kept.push_back(static_cast<std::size_t>(k));
  }

  out.coefficients = Matrix<S>::Zero(static_cast<Eigen::Index>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.coefficients.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  return out;
}

}  // namespace epsreg

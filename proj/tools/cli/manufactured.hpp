#pragma once

// Named inputs selectable from config files, plus seeded generators.

#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include "epsreg/dirac.hpp"
#include "epsreg/linalg.hpp"

namespace epsreg::cli {

/// Uniform doubles from a fixed engine and a fixed bit-to-double mapping, so
/// a seed yields the same stream with any standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo = -1.0, double hi = 1.0) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 engine_;
};

/// zero, one, x, cos, sin, exp. Throws InputError for other names.
std::function<double(double)> named_function(const std::string& name);

/// zero, one, re_z (x), re_z3 (Re z^3), im_z2 (Im z^2), abs_z2 (|z|^2) with
/// exact partials.
JetField manufactured_solution(const std::string& name);

struct LinearInstance {
  MatrixXd matrix;
  VectorXd rhs;
  VectorXd prior;
};

/// random: uniform T (rows x cols) and f = T u for uniform u.
/// diagonal_consistent: T = diag(2^{-k/2}), f = T u with u_k = 1/(k+1).
/// slow_decay: T = diag(2^{-k/2}), f_k = 2^{-k/20}; f is far outside the
/// range of any well-conditioned restriction of T.
LinearInstance generate_instance(const std::string& generator, int rows, int cols,
                                 std::uint64_t seed);

}  // namespace epsreg::cli

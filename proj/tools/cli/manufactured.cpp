#include "manufactured.hpp"

#include <algorithm>
#include <cmath>

#include "epsreg/errors.hpp"

namespace epsreg::cli {

std::function<double(double)> named_function(const std::string& name) {
  if (name == "zero") return [](double) { return 0.0; };
  if (name == "one") return [](double) { return 1.0; };
  if (name == "x") return [](double x) { return x; };
  if (name == "cos") return [](double x) { return std::cos(x); };
  if (name == "sin") return [](double x) { return std::sin(x); };
  if (name == "exp") return [](double x) { return std::exp(x); };
  throw InputError("unknown function '" + name + "'");
}

JetField manufactured_solution(const std::string& name) {
  if (name == "zero") return [](double, double) { return Jet{}; };
  if (name == "one") return [](double, double) { return Jet{1.0, 0.0, 0.0}; };
  if (name == "re_z") return [](double x, double) { return Jet{x, 1.0, 0.0}; };
  if (name == "re_z3") {
    return [](double x, double y) {
      return Jet{x * x * x - 3.0 * x * y * y, 3.0 * (x * x - y * y), -6.0 * x * y};
    };
  }
  if (name == "im_z2") return [](double x, double y) { return Jet{2.0 * x * y, 2.0 * y, 2.0 * x}; };
  if (name == "abs_z2") {
    return [](double x, double y) { return Jet{x * x + y * y, 2.0 * x, 2.0 * y}; };
  }
  throw InputError("unknown manufactured solution '" + name + "'");
}

LinearInstance generate_instance(const std::string& generator, int rows, int cols,
                                 std::uint64_t seed) {
  LinearInstance out;
  if (generator == "random") {
    Rng rng(seed);
    out.matrix.resize(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) out.matrix(i, j) = rng.uniform();
    }
    VectorXd u(cols);
    for (int j = 0; j < cols; ++j) u(j) = rng.uniform();
    out.rhs = out.matrix * u;
  } else if (generator == "diagonal_consistent" || generator == "slow_decay") {
    const int n = std::min(rows, cols);
    out.matrix = MatrixXd::Zero(n, n);
    out.rhs.resize(n);
    for (int k = 0; k < n; ++k) {
      out.matrix(k, k) = std::pow(2.0, -0.5 * k);
      out.rhs(k) = generator == "slow_decay" ? std::pow(2.0, -k / 20.0)
                                             : out.matrix(k, k) / (k + 1.0);
    }
  } else {
    throw InputError("unknown generator '" + generator + "'");
  }
  out.prior = VectorXd::Zero(out.matrix.cols());
  return out;
}

}  // namespace epsreg::cli

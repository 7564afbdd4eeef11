#pragma once

// Experiment configuration files. INI syntax: global keys first, then exactly
// one section named after the experiment.
//
//   output = cauchy.csv
//   threads = 4
//   seed = 7
//
//   [disk_cauchy]
//   operator = gradient
//   gamma_start = 0
//   gamma_end = pi
//   schedule = logspace(-1, -5, 9)

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "epsreg/arc.hpp"
#include "epsreg/dirac.hpp"
#include "epsreg/errors.hpp"
#include "epsreg/regularization.hpp"

namespace epsreg::cli {

enum class Experiment { Ode1d, DiskCauchy, DiskMixed, MatrixPath, VerifyBasis };

std::string_view to_string(Experiment e) noexcept;

struct Ode1dParams {
  double a = 0.0;
  double b = 1.0;
  double u0 = 0.0;
  std::string f = "cos";
  int grid = 1001;
};

struct DiskCauchyParams {
  DiracKind kind = DiracKind::Gradient;
  ArcSpec arc = ArcSpec::upper_half();
  std::string solution = "re_z3";
  double noise_amplitude = 0.0;
  int noise_frequency = 20;
  int trial_size = 24;
  int n_r = 64;
  int n_phi = 256;
  int n_arc = 128;
  int boundary_power = 1;
  VerdictRule rule;
};

struct DiskMixedParams {
  DiracKind kind = DiracKind::Gradient;
  ArcSpec arc = ArcSpec::upper_half();
  int source_order = 2;
  int source_branch = 1;
  int max_order = 16;
  int n_arc = 128;
};

struct MatrixPathParams {
  std::string matrix;  // file paths; empty when a generator is used
  std::string rhs;
  std::string prior;
  std::string generator;  // random, diagonal_consistent, slow_decay
  int rows = 20;
  int cols = 30;
  VerdictRule rule;
};

struct VerifyBasisParams {
  std::vector<DiracKind> kinds{DiracKind::Gradient, DiracKind::CauchyRiemann};
  int max_order = 8;
  double gram_tolerance = 1e-8;
  double helmholtz_tolerance = 1e-5;
};

using ExperimentParams =
    std::variant<Ode1dParams, DiskCauchyParams, DiskMixedParams, MatrixPathParams, VerifyBasisParams>;

struct ExperimentConfig {
  Experiment experiment = Experiment::Ode1d;
  std::string output;
  std::uint64_t seed = 0;
  std::optional<unsigned> threads;
  std::vector<double> schedule;
  ExperimentParams params;
};

/// Syntax or validation problem in a config file; the message carries the
/// source name and, where known, the line.
class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

ExperimentConfig parse_config(std::istream& in, const std::string& source = "<config>");
/// Throws IoError when the file cannot be read.
ExperimentConfig parse_config_file(const std::string& path);

/// "1.5", "pi", "-pi/2", "3pi/2", "0.25*pi".
std::optional<double> parse_angle(std::string_view text);
/// "1, 0.1, 1e-2" or "logspace(-1, -5, 9)" (powers of ten, endpoints
/// included).
std::optional<std::vector<double>> parse_schedule(std::string_view text);

}  // namespace epsreg::cli

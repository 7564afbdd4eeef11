#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "config.hpp"
#include "experiments.hpp"
#include "verify.hpp"

namespace {

enum Exit { kOk = 0, kViolation = 1, kValidation = 2, kNumeric = 3, kIo = 4 };

unsigned default_threads() {
  if (const char* env = std::getenv("EPSREG_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid EPSREG_THREADS='" << env << "'\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace epsreg;

  CLI::App app{"Regularized Cauchy problems for Dirac operators: experiment runner"};
  app.require_subcommand(0, 1);
  std::string output;
  std::optional<unsigned> threads;
  bool verify = false;
  std::uint64_t seed = 1;
  app.add_option("--output", output, "CSV path (overrides the config)");
  app.add_option("--threads", threads, "worker threads (default: config, then EPSREG_THREADS, then 1)")
      ->check(CLI::Range(1u, 1024u));
  app.add_flag("--verify", verify, "run the property suite; nonzero exit on any violation");
  app.add_option("--seed", seed, "seed for the property suite");

  auto* run = app.add_subcommand("run", "run the experiment described by a config file");
  std::string config_path;
  run->add_option("config", config_path, "experiment config (INI)")->required();
  run->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kValidation;
  }
  if (!verify && !*run) {
    std::cerr << app.help();
    return kValidation;
  }

  int status = kOk;
  try {
    if (*run) {
      const auto cfg = cli::parse_config_file(config_path);
      const unsigned n = threads ? *threads : cfg.threads ? *cfg.threads : default_threads();
      const auto result = cli::run_experiment(cfg, n);
      const std::string path =
          !output.empty() ? output
                          : !cfg.output.empty() ? cfg.output : std::string(cli::to_string(cfg.experiment)) + ".csv";
      result.table.write_file(path);
      std::cout << cli::to_string(cfg.experiment) << ": " << result.table.rows() << " rows -> " << path
                << "\n"
                << result.summary << "\n";
      if (!result.passed) status = kViolation;
    }
    if (verify) {
      const unsigned n = threads ? *threads : default_threads();
      if (cli::run_property_suite(std::cout, seed, n) > 0) status = kViolation;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    // DomainError, RangeError, NumericError and anything unexpected from the
    // numerics.
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  }
  return status;
}

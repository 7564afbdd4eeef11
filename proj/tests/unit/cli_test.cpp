#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "config.hpp"
#include "csv.hpp"
#include "epsreg/errors.hpp"
#include "experiments.hpp"

namespace epsreg::cli {
namespace {

namespace fs = std::filesystem;

ExperimentConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in, "test.ini");
}

std::string parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

TEST(Config, ParsesAnOde1dExperiment) {
  const auto cfg = parse("output = a.csv\nseed = 9\nthreads = 3\n[ode1d]\nf = exp\nb = 2\nschedule = 1, 0.1\n");
  EXPECT_EQ(cfg.experiment, Experiment::Ode1d);
  EXPECT_EQ(cfg.output, "a.csv");
  EXPECT_EQ(cfg.seed, 9u);
  EXPECT_EQ(cfg.threads, 3u);
  EXPECT_EQ(cfg.schedule, (std::vector<double>{1.0, 0.1}));
  const auto& p = std::get<Ode1dParams>(cfg.params);
  EXPECT_EQ(p.f, "exp");
  EXPECT_EQ(p.b, 2.0);
  EXPECT_EQ(p.grid, 1001);
}

TEST(Config, ParsesArcsAndOperators) {
  const auto cfg = parse(
      "[disk_cauchy]\noperator = cauchy_riemann\ngamma_start = pi/2\ngamma_end = 3pi/2\n"
      "schedule = logspace(-1, -3, 3)\nnoise_amplitude = 0.1\n");
  const auto& p = std::get<DiskCauchyParams>(cfg.params);
  EXPECT_EQ(p.kind, DiracKind::CauchyRiemann);
  EXPECT_NEAR(p.arc.start(), std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(p.arc.length(), std::numbers::pi, 1e-15);
  EXPECT_EQ(p.noise_amplitude, 0.1);
  ASSERT_EQ(cfg.schedule.size(), 3u);
  EXPECT_NEAR(cfg.schedule[2], 1e-3, 1e-18);

  EXPECT_TRUE(std::get<DiskMixedParams>(parse("[disk_mixed]\ngamma = full\nschedule = 1\n").params).arc.is_full());
  EXPECT_TRUE(std::get<DiskMixedParams>(parse("[disk_mixed]\ngamma = empty\nschedule = 1\n").params).arc.is_empty());
}

TEST(Config, AnglesAndSchedules) {
  EXPECT_NEAR(*parse_angle("pi"), std::numbers::pi, 1e-15);
  EXPECT_NEAR(*parse_angle("-pi/2"), -std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(*parse_angle("3pi/2"), 1.5 * std::numbers::pi, 1e-15);
  EXPECT_NEAR(*parse_angle("0.25*pi"), 0.25 * std::numbers::pi, 1e-15);
  EXPECT_EQ(*parse_angle("1.5"), 1.5);
  EXPECT_FALSE(parse_angle("tau").has_value());
  EXPECT_EQ(*parse_schedule("1, 1e-2"), (std::vector<double>{1.0, 1e-2}));
  EXPECT_EQ(parse_schedule("logspace(0, -4, 5)")->size(), 5u);
  EXPECT_FALSE(parse_schedule("1, x").has_value());
  EXPECT_FALSE(parse_schedule("logspace(0, -4)").has_value());
}

TEST(Config, ErrorsNameFileLineAndField) {
  EXPECT_NE(parse_error("[ode1d]\nschedule = 0.1, 1\n").find("test.ini:2: ode1d.schedule"), std::string::npos);
  EXPECT_NE(parse_error("[ode1d]\nschedule = 1\ncolour = red\n").find("ode1d.colour: unknown key"),
            std::string::npos);
  EXPECT_NE(parse_error("[disk_cauchy]\nschedule = 1\ngamma_start = 1\ngamma_end = 1\n").find("gamma_end"),
            std::string::npos);
  EXPECT_NE(parse_error("[disk_cauchy]\nschedule = 1\ngamma_start = 7\n").find("[0, 2 pi)"), std::string::npos);
  EXPECT_NE(parse_error("[bogus]\nschedule = 1\n").find("unknown experiment"), std::string::npos);
  EXPECT_NE(parse_error("seed = 1\n").find("exactly one"), std::string::npos);
  EXPECT_NE(parse_error("[ode1d]\n[matrix_path]\n").find("exactly one"), std::string::npos);
  EXPECT_NE(parse_error("[ode1d]\nf = cos\n").find("schedule"), std::string::npos);
  EXPECT_NE(parse_error("[ode1d]\nschedule = 1\nb = -1\n").find("ode1d.b"), std::string::npos);
  EXPECT_NE(parse_error("[matrix_path]\nschedule = 1\n").find("generator"), std::string::npos);
  EXPECT_NE(parse_error("[disk_cauchy]\nschedule = 1\ntrial_size = abc\n").find("integer"), std::string::npos);
  EXPECT_THROW(parse_config_file("/nonexistent/x.ini"), IoError);
}

TEST(Csv, FormatAndSchema) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1.0), "1");
  CsvTable t({"a", "b"});
  t.add_row({1.0, 0.5});
  EXPECT_THROW(t.add_row({1.0}), InputError);
  std::ostringstream out;
  t.write(out);
  EXPECT_EQ(out.str(), "a,b\n1,0.5\n");
  EXPECT_THROW(t.write_file("/nonexistent/dir/out.csv"), IoError);
}

TEST(Experiments, SchemasAndRowCounts) {
  struct Case {
    std::string config;
    std::vector<std::string> header;
  };
  const Case cases[] = {
      {"[ode1d]\ngrid = 101\nschedule = 1, 1e-2, 1e-4\n", {"epsilon", "c0_error", "c1_error"}},
      {"[matrix_path]\ngenerator = random\nschedule = 1, 1e-2, 1e-4\n", {"epsilon", "norm", "eps_norm", "residual"}},
      {"[disk_mixed]\nmax_order = 6\nschedule = 4, 1, 0.25\n",
       {"epsilon", "trace_error", "conormal_error", "helmholtz_residual", "coefficient_error"}},
      {"[disk_cauchy]\ntrial_size = 6\nn_r = 16\nn_phi = 64\nschedule = 1, 1e-2, 1e-4\n",
       {"epsilon", "l2_norm", "residual", "rel_error"}},
      {"[verify_basis]\nmax_order = 3\nschedule = 4, 1, 0.25\n",
       {"epsilon", "l2_offdiag", "energy_offdiag", "helmholtz_residual", "min_nonvanishing", "symbol_defect"}},
  };
  for (const auto& c : cases) {
    const auto r = run_experiment(parse(c.config), 2);
    EXPECT_EQ(r.table.header(), c.header) << c.config;
    EXPECT_EQ(r.table.rows(), 3u) << c.config;
    EXPECT_TRUE(r.passed) << c.config;
    EXPECT_FALSE(r.summary.empty());
  }
}

TEST(Experiments, MatrixPathVerdicts) {
  const auto bounded = run_experiment(
      parse("[matrix_path]\ngenerator = diagonal_consistent\nrows = 40\ncols = 40\nschedule = logspace(0, -8, 17)\n"),
      1);
  EXPECT_NE(bounded.summary.find("verdict=Bounded"), std::string::npos) << bounded.summary;
  const auto unbounded = run_experiment(
      parse("[matrix_path]\ngenerator = slow_decay\nrows = 40\ncols = 40\nschedule = logspace(0, -8, 17)\n"), 1);
  EXPECT_NE(unbounded.summary.find("verdict=Unbounded"), std::string::npos) << unbounded.summary;
}

// End-to-end runs of the executable. Its path comes from the build.
class CliBinary : public ::testing::Test {
 protected:
  void SetUp() override {
    const char* exe = std::getenv("EPSREG_CLI");
    if (!exe) GTEST_SKIP() << "EPSREG_CLI not set";
    exe_ = exe;
    dir_ = fs::temp_directory_path() /
           ("epsreg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override {
    if (!dir_.empty()) fs::remove_all(dir_);
  }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  int run(const std::string& args) {
    const std::string cmd = "'" + exe_ + "' " + args + " >" + (dir_ / "stdout").string() + " 2>" +
                            (dir_ / "stderr").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string slurp(const std::string& name) {
    std::ifstream in(dir_ / name);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  std::string exe_;
  fs::path dir_;
};

TEST_F(CliBinary, OutputIsIdenticalAcrossThreadCounts) {
  const auto cfg = write("mp.ini", "seed = 5\n[matrix_path]\ngenerator = random\nschedule = logspace(1, -6, 15)\n");
  ASSERT_EQ(run("run " + cfg + " --threads 1 --output " + (dir_ / "a.csv").string()), 0);
  ASSERT_EQ(run("run " + cfg + " --threads 4 --output " + (dir_ / "b.csv").string()), 0);
  const std::string a = slurp("a.csv");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, slurp("b.csv"));
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 16);
}

TEST_F(CliBinary, ExitCodes) {
  const auto good = write("ode.ini", "[ode1d]\ngrid = 51\nschedule = 1, 0.1\n");
  EXPECT_EQ(run("run " + good + " --output " + (dir_ / "o.csv").string()), 0);
  EXPECT_NE(slurp("stdout").find("ode1d: 2 rows"), std::string::npos);

  const auto bad = write("bad.ini", "[ode1d]\nschedule = 0.1, 1\n");
  EXPECT_EQ(run("run " + bad), 2);
  EXPECT_NE(slurp("stderr").find("bad.ini:2"), std::string::npos);

  EXPECT_EQ(run("run " + (dir_ / "missing.ini").string()), 4);
  EXPECT_EQ(run("run " + good + " --output /nonexistent/dir/o.csv"), 4);
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("--threads 0 run " + good), 2);
}

}  // namespace
}  // namespace epsreg::cli

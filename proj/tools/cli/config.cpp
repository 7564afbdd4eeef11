#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <regex>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace epsreg::cli {

namespace pt = boost::property_tree;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<double> parse_double(std::string_view text) {
  const std::string t = trim(text);
  double v = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) return std::nullopt;
  return v;
}

template <class Int>
std::optional<Int> parse_int(std::string_view text) {
  const std::string t = trim(text);
  Int v{};
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) return std::nullopt;
  return v;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) out.push_back(trim(item));
  return out;
}

// Line numbers of sections and keys, recovered by a light scan of the text
// the INI parser has already accepted.
class LineIndex {
 public:
  explicit LineIndex(const std::string& text) {
    std::istringstream in(text);
    std::string line, section;
    for (int n = 1; std::getline(in, line); ++n) {
      const std::string t = trim(line);
      if (t.empty() || t[0] == ';' || t[0] == '#') continue;
      if (t.front() == '[' && t.back() == ']') {
        section = trim(std::string_view(t).substr(1, t.size() - 2));
        sections_.emplace_back(section, n);
        continue;
      }
      const auto eq = t.find('=');
      if (eq != std::string::npos) keys_[{section, trim(std::string_view(t).substr(0, eq))}] = n;
    }
  }

  int key(const std::string& section, const std::string& key) const {
    const auto it = keys_.find({section, key});
    return it == keys_.end() ? 0 : it->second;
  }
  const std::vector<std::pair<std::string, int>>& sections() const { return sections_; }

 private:
  std::map<std::pair<std::string, std::string>, int> keys_;
  std::vector<std::pair<std::string, int>> sections_;
};

class Reader {
 public:
  Reader(const pt::ptree& tree, std::string section, const LineIndex& lines, std::string source)
      : tree_(tree), section_(std::move(section)), lines_(lines), source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& key, const std::string& message) const {
    std::string where = source_;
    if (const int line = lines_.key(section_, key)) where += ":" + std::to_string(line);
    const std::string field = section_.empty() ? key : section_ + "." + key;
    throw ConfigError(where + ": " + field + ": " + message);
  }

  std::optional<std::string> raw(const std::string& key) {
    used_.insert(key);
    const auto child = tree_.get_child_optional(pt::ptree::path_type(key, '\0'));
    if (!child) return std::nullopt;
    return trim(child->data());
  }

  std::string text(const std::string& key, std::string fallback) {
    auto v = raw(key);
    return v ? *v : fallback;
  }

  double number(const std::string& key, double fallback) {
    const auto v = raw(key);
    if (!v) return fallback;
    const auto d = parse_double(*v);
    if (!d) fail(key, "expected a finite number, got '" + *v + "'");
    return *d;
  }

  int integer(const std::string& key, int fallback, int lo, int hi) {
    const auto v = raw(key);
    if (!v) return fallback;
    const auto i = parse_int<int>(*v);
    if (!i) fail(key, "expected an integer, got '" + *v + "'");
    if (*i < lo || *i > hi) {
      fail(key, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return *i;
  }

  double angle(const std::string& key, double fallback) {
    const auto v = raw(key);
    if (!v) return fallback;
    const auto a = parse_angle(*v);
    if (!a) fail(key, "expected an angle such as 1.2, pi or 3pi/2, got '" + *v + "'");
    if (!(*a >= 0.0 && *a < 2.0 * std::numbers::pi)) fail(key, "angle must lie in [0, 2 pi)");
    return *a;
  }

  DiracKind kind(const std::string& key, DiracKind fallback) {
    const auto v = raw(key);
    if (!v) return fallback;
    try {
      return parse_dirac_kind(*v);
    } catch (const InputError& e) {
      fail(key, e.what());
    }
  }

  /// Rejects keys that were never asked for.
  void finish() const {
    for (const auto& [key, child] : tree_) {
      if (!used_.count(key)) fail(key, "unknown key");
      if (!child.empty()) fail(key, "unexpected nested value");
    }
  }

 private:
  const pt::ptree& tree_;
  std::string section_;
  const LineIndex& lines_;
  std::string source_;
  std::set<std::string> used_;
};

ArcSpec read_arc(Reader& r) {
  const std::string shape = r.text("gamma", "arc");
  if (shape == "full") return ArcSpec::full_circle();
  if (shape == "empty") return ArcSpec::empty();
  if (shape == "upper_half") return ArcSpec::upper_half();
  if (shape != "arc") r.fail("gamma", "expected arc, full, empty or upper_half");
  const double start = r.angle("gamma_start", 0.0);
  const double end = r.angle("gamma_end", std::numbers::pi);
  if (start == end) r.fail("gamma_end", "equals gamma_start; use gamma = full or gamma = empty");
  return ArcSpec::between(start, end);
}

VerdictRule read_rule(Reader& r) {
  VerdictRule rule;
  rule.bounded_below = r.number("bounded_below", rule.bounded_below);
  rule.unbounded_above = r.number("unbounded_above", rule.unbounded_above);
  if (!(rule.bounded_below < rule.unbounded_above)) {
    r.fail("unbounded_above", "must exceed bounded_below");
  }
  return rule;
}

std::vector<double> read_schedule(Reader& r, std::optional<std::vector<double>> fallback) {
  const auto v = r.raw("schedule");
  if (!v) {
    if (fallback) return *fallback;
    r.fail("schedule", "missing (required)");
  }
  const auto s = parse_schedule(*v);
  if (!s) r.fail("schedule", "expected a comma-separated list or logspace(a, b, n)");
  try {
    validate_schedule(*s);
  } catch (const InputError& e) {
    r.fail("schedule", e.what());
  }
  return *s;
}

const std::set<std::string>& known_functions() {
  static const std::set<std::string> names{"zero", "one", "x", "cos", "sin", "exp"};
  return names;
}

const std::set<std::string>& known_solutions() {
  static const std::set<std::string> names{"zero", "one", "re_z", "re_z3", "im_z2", "abs_z2"};
  return names;
}

}  // namespace

std::string_view to_string(Experiment e) noexcept {
  switch (e) {
    case Experiment::Ode1d: return "ode1d";
    case Experiment::DiskCauchy: return "disk_cauchy";
    case Experiment::DiskMixed: return "disk_mixed";
    case Experiment::MatrixPath: return "matrix_path";
    case Experiment::VerifyBasis: return "verify_basis";
  }
  return "unknown";
}

std::optional<double> parse_angle(std::string_view text) {
  const std::string t = trim(text);
  if (auto d = parse_double(t)) return d;
  static const std::regex re(R"(^([+-]?)\s*([0-9]*\.?[0-9]*(?:[eE][+-]?[0-9]+)?)\s*\*?\s*pi\s*(?:/\s*([0-9]*\.?[0-9]+))?$)");
  std::smatch m;
  if (!std::regex_match(t, m, re)) return std::nullopt;
  double value = std::numbers::pi;
  if (m[2].length() > 0) {
    const auto c = parse_double(m[2].str());
    if (!c) return std::nullopt;
    value *= *c;
  }
  if (m[3].matched) {
    const auto d = parse_double(m[3].str());
    if (!d || *d == 0.0) return std::nullopt;
    value /= *d;
  }
  return m[1] == "-" ? -value : value;
}

std::optional<std::vector<double>> parse_schedule(std::string_view text) {
  const std::string t = trim(text);
  static const std::regex logspace(R"(^logspace\s*\(([^,]+),([^,]+),([^,]+)\)$)");
  std::smatch m;
  if (std::regex_match(t, m, logspace)) {
    const auto a = parse_double(m[1].str());
    const auto b = parse_double(m[2].str());
    const auto n = parse_int<int>(m[3].str());
    if (!a || !b || !n || *n < 1 || *n > 10000) return std::nullopt;
    std::vector<double> out;
    for (int k = 0; k < *n; ++k) {
      const double e = *n == 1 ? *a : *a + (*b - *a) * k / (*n - 1);
      out.push_back(std::pow(10.0, e));
    }
    return out;
  }
  std::vector<double> out;
  for (const auto& item : split_list(t)) {
    const auto v = parse_double(item);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  if (out.empty()) return std::nullopt;
  return out;
}

ExperimentConfig parse_config(std::istream& in, const std::string& source) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  pt::ptree tree;
  try {
    std::istringstream parse_in(text);
    pt::ini_parser::read_ini(parse_in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(source + ":" + std::to_string(e.line()) + ": " + e.message());
  }
  const LineIndex lines(text);

  // Global keys have no children; sections do (or are listed as sections).
  std::set<std::string> section_names;
  for (const auto& [name, line] : lines.sections()) section_names.insert(name);
  pt::ptree globals;
  for (const auto& [key, child] : tree) {
    if (!section_names.count(key)) globals.put_child(pt::ptree::path_type(key, '\0'), child);
  }

  ExperimentConfig cfg;
  Reader g(globals, "", lines, source);
  cfg.output = g.text("output", "");
  if (const auto seed = g.raw("seed")) {
    const auto v = parse_int<std::uint64_t>(*seed);
    if (!v) g.fail("seed", "expected a nonnegative integer");
    cfg.seed = *v;
  }
  if (g.raw("threads")) cfg.threads = static_cast<unsigned>(g.integer("threads", 1, 1, 1024));
  g.finish();

  if (lines.sections().size() != 1) {
    throw ConfigError(source + ": expected exactly one experiment section, found " +
                      std::to_string(lines.sections().size()));
  }
  const auto& [name, section_line] = lines.sections().front();
  const pt::ptree& sec = tree.get_child(pt::ptree::path_type(name, '\0'));
  Reader r(sec, name, lines, source);

  if (name == "ode1d") {
    cfg.experiment = Experiment::Ode1d;
    Ode1dParams p;
    p.a = r.number("a", p.a);
    p.b = r.number("b", p.b);
    if (!(p.a < p.b)) r.fail("b", "must exceed a");
    p.u0 = r.number("u0", p.u0);
    p.f = r.text("f", p.f);
    if (!known_functions().count(p.f)) r.fail("f", "unknown function '" + p.f + "'");
    p.grid = r.integer("grid", p.grid, 2, 1000000);
    cfg.schedule = read_schedule(r, std::nullopt);
    cfg.params = p;
  } else if (name == "disk_cauchy") {
    cfg.experiment = Experiment::DiskCauchy;
    DiskCauchyParams p;
    p.kind = r.kind("operator", p.kind);
    p.arc = read_arc(r);
    p.solution = r.text("solution", p.solution);
    if (!known_solutions().count(p.solution)) r.fail("solution", "unknown solution '" + p.solution + "'");
    p.noise_amplitude = r.number("noise_amplitude", p.noise_amplitude);
    if (p.noise_amplitude < 0.0) r.fail("noise_amplitude", "must be nonnegative");
    p.noise_frequency = r.integer("noise_frequency", p.noise_frequency, 0, 10000);
    p.trial_size = r.integer("trial_size", p.trial_size, 1, 500);
    p.n_r = r.integer("n_r", p.n_r, 2, 4096);
    p.n_phi = r.integer("n_phi", p.n_phi, 8, 65536);
    p.n_arc = r.integer("n_arc", p.n_arc, 2, 65536);
    p.boundary_power = r.integer("boundary_power", p.boundary_power, 1, 16);
    p.rule = read_rule(r);
    cfg.schedule = read_schedule(r, std::nullopt);
    cfg.params = p;
  } else if (name == "disk_mixed") {
    cfg.experiment = Experiment::DiskMixed;
    DiskMixedParams p;
    p.kind = r.kind("operator", p.kind);
    p.arc = read_arc(r);
    p.source_order = r.integer("source_order", p.source_order, 0, 40);
    p.source_branch = r.integer("source_branch", p.source_branch, 1, 2);
    if (p.source_order == 0 && p.source_branch != 1) r.fail("source_branch", "order 0 has one branch");
    p.max_order = r.integer("max_order", p.max_order, 0, 40);
    p.n_arc = r.integer("n_arc", p.n_arc, 2, 65536);
    cfg.schedule = read_schedule(r, std::nullopt);
    cfg.params = p;
  } else if (name == "matrix_path") {
    cfg.experiment = Experiment::MatrixPath;
    MatrixPathParams p;
    p.matrix = r.text("matrix", "");
    p.rhs = r.text("rhs", "");
    p.prior = r.text("prior", "");
    p.generator = r.text("generator", "");
    p.rows = r.integer("rows", p.rows, 1, 2000);
    p.cols = r.integer("cols", p.cols, 1, 2000);
    p.rule = read_rule(r);
    if (p.generator.empty() == p.matrix.empty()) {
      r.fail(p.matrix.empty() ? "generator" : "matrix", "set exactly one of matrix or generator");
    }
    if (!p.matrix.empty() && p.rhs.empty()) r.fail("rhs", "required with matrix");
    if (!p.generator.empty() && p.generator != "random" && p.generator != "diagonal_consistent" &&
        p.generator != "slow_decay") {
      r.fail("generator", "expected random, diagonal_consistent or slow_decay");
    }
    cfg.schedule = read_schedule(r, std::nullopt);
    cfg.params = p;
  } else if (name == "verify_basis") {
    cfg.experiment = Experiment::VerifyBasis;
    VerifyBasisParams p;
    if (const auto ops = r.raw("operators")) {
      p.kinds.clear();
      for (const auto& item : split_list(*ops)) {
        try {
          p.kinds.push_back(parse_dirac_kind(item));
        } catch (const InputError& e) {
          r.fail("operators", e.what());
        }
      }
    }
    p.max_order = r.integer("max_order", p.max_order, 0, 30);
    p.gram_tolerance = r.number("gram_tolerance", p.gram_tolerance);
    p.helmholtz_tolerance = r.number("helmholtz_tolerance", p.helmholtz_tolerance);
    cfg.schedule = read_schedule(r, std::vector<double>{4.0, 1.0, 0.25});
    cfg.params = p;
  } else {
    throw ConfigError(source + ":" + std::to_string(section_line) + ": unknown experiment '" + name +
                      "' (expected ode1d, disk_cauchy, disk_mixed, matrix_path or verify_basis)");
  }
  r.finish();
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  return parse_config(in, path);
}

}  // namespace epsreg::cli

#include "epsreg/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <vector>

#include "epsreg/errors.hpp"

namespace epsreg {

namespace {

double parse_double(const std::string& token, std::size_t index) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw InputError("matrix entry " + std::to_string(index) + ": cannot parse '" + token + "'");
  }
  return value;
}

}  // namespace

AnyMatrix read_matrix(std::istream& in) {
  long rows = 0, cols = 0;
  if (!(in >> rows >> cols) || rows <= 0 || cols <= 0) {
    throw InputError("matrix header: expected positive 'rows cols'");
  }
  const std::size_t count = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  std::vector<std::string> tokens;
  tokens.reserve(count);
  std::string token;
  while (tokens.size() < count && in >> token) tokens.push_back(token);
  if (tokens.size() != count) {
    throw InputError("matrix body: expected " + std::to_string(count) + " entries, got " +
                     std::to_string(tokens.size()));
  }
  if (in >> token) throw InputError("matrix body: trailing data after last entry");

  bool is_complex = false;
  for (const auto& t : tokens) is_complex = is_complex || t.find(',') != std::string::npos;

  if (!is_complex) {
    MatrixXd m(rows, cols);
    for (std::size_t k = 0; k < count; ++k) {
      m(static_cast<long>(k) / cols, static_cast<long>(k) % cols) = parse_double(tokens[k], k);
    }
    return m;
  }
  MatrixXc m(rows, cols);
  for (std::size_t k = 0; k < count; ++k) {
    const auto& t = tokens[k];
    const auto comma = t.find(',');
    cplx v;
    if (comma == std::string::npos) {
      v = parse_double(t, k);
    } else {
      v = cplx(parse_double(t.substr(0, comma), k), parse_double(t.substr(comma + 1), k));
    }
    m(static_cast<long>(k) / cols, static_cast<long>(k) % cols) = v;
  }
  return m;
}

AnyMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open matrix file '" + path + "'");
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const MatrixXd& m) {
  out << m.rows() << ' ' << m.cols() << '\n' << std::setprecision(17);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

void write_matrix(std::ostream& out, const MatrixXc& m) {
  out << m.rows() << ' ' << m.cols() << '\n' << std::setprecision(17);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out << (j ? " " : "") << m(i, j).real() << ',' << m(i, j).imag();
    }
    out << '\n';
  }
}

}  // namespace epsreg

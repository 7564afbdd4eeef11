#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace epsreg::cli {

/// Header plus rows of doubles, '.' decimal point, 17 significant digits.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<double> row);
  std::size_t rows() const noexcept { return rows_.size(); }
  const std::vector<std::string>& header() const noexcept { return header_; }

  void write(std::ostream& out) const;
  /// Throws IoError when the file cannot be written.
  void write_file(const std::string& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<double>> rows_;
};

std::string format_double(double v);

}  // namespace epsreg::cli

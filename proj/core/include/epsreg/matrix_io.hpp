#pragma once

// Plain-text matrix format: first line "rows cols", then row-major
// whitespace-separated entries. Complex entries are written "re,im".

#include <iosfwd>
#include <string>
#include <variant>

#include "epsreg/linalg.hpp"

namespace epsreg {

using AnyMatrix = std::variant<MatrixXd, MatrixXc>;

/// Parses a matrix; the result is complex iff any entry contains a comma.
/// Throws InputError with the offending entry index on malformed input.
AnyMatrix read_matrix(std::istream& in);
/// Throws IoError when the file cannot be opened.
AnyMatrix read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const MatrixXd& m);
void write_matrix(std::ostream& out, const MatrixXc& m);

}  // namespace epsreg

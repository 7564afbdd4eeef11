#pragma once

#include <stdexcept>
#include <string>

namespace epsreg {

// Bad shapes, bad parameters, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Evaluation point outside the domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Result would overflow double precision.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// Factorization failure, non-finite intermediate values.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace epsreg

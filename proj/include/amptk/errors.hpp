#pragma once

#include <stdexcept>
#include <string>

namespace amptk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (FASTA/CSV/table files, checkpoints).
struct ParseError : Error {
  using Error::Error;
};

// Well-formed input violating a domain rule (alphabet, label domain, counts).
struct ValidationError : Error {
  ValidationError(const std::string& msg, long index = -1)
      : Error(msg), index(index) {}
  long index;  // offending position when applicable, -1 otherwise
};

// Bad configuration or contract misuse (dimensions, ranges, empty sets).
struct ConfigError : Error {
  using Error::Error;
};

// Filesystem-level failures.
struct IoError : Error {
  using Error::Error;
};

}  // namespace amptk

// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kadapt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed FCIDUMP input. Carries the 1-based line number where parsing failed.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& detail, const std::string& source = {})
      : Error((source.empty() ? "" : source + ": ") + "line " + std::to_string(line) + ": " +
              detail),
        line_(line),
        detail_(detail) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

/// A file could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Operands disagree on qubit count or an index falls outside the register.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input violates a structural precondition (non-Hermitian operator, odd
/// electron count, generator that does not factor into commuting rotations).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure during a computation (non-finite objective, solver breakdown).
class ComputationError : public Error {
 public:
  using Error::Error;
};

}  // namespace kadapt

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace csmd {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid instance, mismatched vector lengths, or an unsupported mode/algorithm pairing.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed instance or trace file. Carries 1-based line and column (0 when unknown).
class ParseError : public ConfigError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0,
             const std::string& source = {});

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

  /// Same error, attributed to a file.
  ParseError in_file(const std::string& source) const {
    return ParseError(detail_, line_, column_, source);
  }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

/// Trace replay without resampling ran past its last row.
class TraceExhausted : public Error {
 public:
  explicit TraceExhausted(std::size_t rows);
  std::size_t rows() const noexcept { return rows_; }

 private:
  std::size_t rows_;
};

/// A policy was handed feedback that does not cover the arms it is entitled to see.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

/// Subset enumeration would exceed the configured K cap.
class CapacityError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

}  // namespace csmd

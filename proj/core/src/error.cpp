#include "csmd/error.hpp"

namespace csmd {

namespace {

std::string locate(const std::string& what, std::size_t line, std::size_t column,
                   const std::string& source) {
  std::string where = source;
  if (line != 0) {
    if (!where.empty()) where += ":";
    where += "line " + std::to_string(line);
    if (column != 0) where += ", column " + std::to_string(column);
  }
  return where.empty() ? what : where + ": " + what;
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column,
                       const std::string& source)
    : ConfigError(locate(what, line, column, source)),
      detail_(what),
      line_(line),
      column_(column) {}

TraceExhausted::TraceExhausted(std::size_t rows)
    : Error("trace exhausted after " + std::to_string(rows) +
            " rows (enable resampling or shorten the horizon)"),
      rows_(rows) {}

}  // namespace csmd

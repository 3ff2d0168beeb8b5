#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gausseer {

enum class ErrorKind {
  EmptyInput,
  NoRouteSection,
  MalformedRoute,
  ConfigError,
  UnknownKind,
  InvalidField,
  EmptyElements,
  UnknownElement,
  BadMode,
  BadConnective,
  BadPage,
  DuplicateId,
  NotFound,
  IoError,
  FormatError,
};

/// Stable machine-readable name, used in HTTP error bodies and ingest reports.
std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Taxonomy config failure; `line()` is 1-based, 0 when not tied to a line.
class ConfigError : public Error {
 public:
  ConfigError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gausseer

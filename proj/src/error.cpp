#include "gausseer/error.hpp"

namespace gausseer {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NoRouteSection: return "NoRouteSection";
    case ErrorKind::MalformedRoute: return "MalformedRoute";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::UnknownKind: return "UnknownKind";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::EmptyElements: return "EmptyElements";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::BadMode: return "BadMode";
    case ErrorKind::BadConnective: return "BadConnective";
    case ErrorKind::BadPage: return "BadPage";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::FormatError: return "FormatError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

ConfigError::ConfigError(std::size_t line, const std::string& message)
    : Error(ErrorKind::ConfigError,
            line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

}  // namespace gausseer

#pragma once

#include <stdexcept>
#include <string>

namespace hamloop {

/// Error categories surfaced by the library and mapped to CLI / Python errors.
enum class ErrorCode {
  Unbounded,
  NotFullDimensional,
  RedundantHalfSpace,
  EmptyPolytope,
  NotSimple,
  NotUnimodular,
  PointOutsidePolytope,
  NotInterior,
  NotQuantizable,
  NotDelzant,
  NonGenericVector,
  NotDiagonal,
  InvalidParams,
  UsageError,
  ParseError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::RedundantHalfSpace: return "RedundantHalfSpace";
    case ErrorCode::EmptyPolytope: return "EmptyPolytope";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::PointOutsidePolytope: return "PointOutsidePolytope";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::NotQuantizable: return "NotQuantizable";
    case ErrorCode::NotDelzant: return "NotDelzant";
    case ErrorCode::NonGenericVector: return "NonGenericVector";
    case ErrorCode::NotDiagonal: return "NotDiagonal";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace hamloop

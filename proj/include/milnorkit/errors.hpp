#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace milnorkit {

enum class ErrorKind {
  DivisionByZero,
  PoleAtAssignment,
  SyntaxError,
  NegativeExponent,
  UnknownSymbol,
  ArityMismatch,
  ZeroPolynomial,
  ArityUnsupported,
  NotConvenient,
  SegmentMismatch,
  CapExceeded,
  NotStabilized,
  NonIsolated,
  OracleDisagreement,
  BaseMismatch,
  NonzeroAtOrigin,
  GenericNonIsolated,
  SampleInconsistent,
  EmptyGrid,
  GridTooLarge,
  InvalidGrid,
  CorruptRecord,
  IoError,
};

std::string_view error_kind_name(ErrorKind kind);

/// True for the kinds produced while reading user input (polynomials, grids).
bool is_input_error(ErrorKind kind);

/// The single exception type thrown by the library. `kind()` identifies the
/// failure; `what()` carries a human-readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view kind_name() const { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace milnorkit

#include "milnorkit/errors.hpp"

namespace milnorkit {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PoleAtAssignment: return "PoleAtAssignment";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ArityUnsupported: return "ArityUnsupported";
    case ErrorKind::NotConvenient: return "NotConvenient";
    case ErrorKind::SegmentMismatch: return "SegmentMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::NonIsolated: return "NonIsolated";
    case ErrorKind::OracleDisagreement: return "OracleDisagreement";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::NonzeroAtOrigin: return "NonzeroAtOrigin";
    case ErrorKind::GenericNonIsolated: return "GenericNonIsolated";
    case ErrorKind::SampleInconsistent: return "SampleInconsistent";
    case ErrorKind::EmptyGrid: return "EmptyGrid";
    case ErrorKind::GridTooLarge: return "GridTooLarge";
    case ErrorKind::InvalidGrid: return "InvalidGrid";
    case ErrorKind::CorruptRecord: return "CorruptRecord";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  return kind == ErrorKind::SyntaxError || kind == ErrorKind::NegativeExponent ||
         kind == ErrorKind::UnknownSymbol || kind == ErrorKind::InvalidGrid;
}

}  // namespace milnorkit

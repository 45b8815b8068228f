#include "bgpc/error.hpp"

namespace bgpc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::GroundTooLarge: return "GroundTooLarge";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::EmptyBasisSet: return "EmptyBasisSet";
    case ErrorKind::BadInterface: return "BadInterface";
    case ErrorKind::BadTriangle: return "BadTriangle";
    case ErrorKind::NotACocircuit: return "NotACocircuit";
    case ErrorKind::NotBinary: return "NotBinary";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::MatrixTooLarge: return "MatrixTooLarge";
    case ErrorKind::ZeroRow: return "ZeroRow";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PoleAtZero: return "PoleAtZero";
    case ErrorKind::ZeroOutput: return "ZeroOutput";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::RankZero: return "RankZero";
    case ErrorKind::VariableClash: return "VariableClash";
    case ErrorKind::NotThreeConnected: return "NotThreeConnected";
    case ErrorKind::MissingTriangle: return "MissingTriangle";
    case ErrorKind::NotDecomposable: return "NotDecomposable";
    case ErrorKind::InvalidMatroid: return "InvalidMatroid";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Usage: return "UsageError";
  }
  return "Error";
}

}  // namespace bgpc

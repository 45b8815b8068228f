#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bgpc {

enum class ErrorKind {
  GroundTooLarge,
  UnknownElement,
  EmptyBasisSet,
  BadInterface,
  BadTriangle,
  NotACocircuit,
  NotBinary,
  NotRegular,
  MatrixTooLarge,
  ZeroRow,
  DivisionByZero,
  PoleAtZero,
  ZeroOutput,
  TooLarge,
  BudgetExceeded,
  DisconnectedGraph,
  RankZero,
  VariableClash,
  NotThreeConnected,
  MissingTriangle,
  NotDecomposable,
  InvalidMatroid,
  Parse,
  Usage,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bgpc

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bgpc/circuit.hpp"

namespace bgpc {

enum class TropOp : std::uint8_t { Input, Max, Add, Sub };

struct TropGate {
  TropOp op = TropOp::Input;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  std::string var;

  bool operator==(const TropGate&) const = default;
};

/// (max, +, -) circuit with the same shape rules as Circuit.
class TropicalCircuit {
 public:
  TropicalCircuit() = default;
  TropicalCircuit(std::vector<TropGate> gates, std::size_t output);

  const std::vector<TropGate>& gates() const { return gates_; }
  std::size_t output() const { return output_; }
  std::size_t size() const { return size_; }
  std::vector<std::string> variables() const;

  bool operator==(const TropicalCircuit&) const = default;

 private:
  std::vector<TropGate> gates_;
  std::size_t output_ = 0;
  std::size_t size_ = 0;
};

/// + becomes max, * becomes +, / becomes -.
TropicalCircuit tropicalize(const Circuit& c);
Rational eval_tropical(const TropicalCircuit& t, const Assignment& point);

std::string format_tropical(const TropicalCircuit& t);
TropicalCircuit parse_tropical(std::string_view text);

}  // namespace bgpc

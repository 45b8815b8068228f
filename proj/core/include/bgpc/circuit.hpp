#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bgpc/rational.hpp"

namespace bgpc {

enum class Op : std::uint8_t { Input, Add, Mul, Div };

struct Gate {
  Op op = Op::Input;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  std::string var;

  bool operator==(const Gate&) const = default;
};

/// Constant-free (+, *, /) circuit. Gates only reference earlier gates.
class Circuit {
 public:
  Circuit() = default;
  Circuit(std::vector<Gate> gates, std::size_t output);

  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t output() const { return output_; }
  /// Number of non-input gates.
  std::size_t size() const { return size_; }
  /// Input variable names in gate order.
  std::vector<std::string> variables() const;

  bool operator==(const Circuit&) const = default;

 private:
  std::vector<Gate> gates_;
  std::size_t output_ = 0;
  std::size_t size_ = 0;
};

/// Appends gates; inputs are shared by variable name.
class CircuitBuilder {
 public:
  std::size_t input(const std::string& var);
  std::size_t add(std::size_t a, std::size_t b) { return push(Op::Add, a, b); }
  std::size_t mul(std::size_t a, std::size_t b) { return push(Op::Mul, a, b); }
  std::size_t div(std::size_t a, std::size_t b) { return push(Op::Div, a, b); }

  /// Copies every gate of `c`; its inputs named in `bound` are replaced by the
  /// given builder gates, the rest become (shared) builder inputs. Returns the
  /// builder id of c's output.
  std::size_t splice(const Circuit& c, const std::map<std::string, std::size_t>& bound = {});

  std::size_t size() const { return size_; }
  std::size_t gate_count() const { return gates_.size(); }
  Circuit build(std::size_t output) const;

 private:
  std::size_t push(Op op, std::size_t a, std::size_t b);
  std::vector<Gate> gates_;
  std::unordered_map<std::string, std::size_t> inputs_;
  std::size_t size_ = 0;
};

using Assignment = std::map<std::string, Rational>;

/// Value of every gate; throws DivisionByZero naming the gate, Parse when a
/// variable has no value.
std::vector<Rational> eval_gates(const Circuit& c, const Assignment& point);
Rational eval_rational(const Circuit& c, const Assignment& point);

/// Simultaneous substitution; each binding is instantiated once.
Circuit substitute(const Circuit& c, const std::map<std::string, Circuit>& bindings);

/// Rewrites with the given variables formally zero (0+a=a, 0*a=0, 0/a=0,
/// a/0 is PoleAtZero) and drops gates that no longer reach the output.
Circuit eliminate_zero(const Circuit& c, const std::set<std::string>& zeroed);

/// Removes gates the output does not depend on.
Circuit prune(const Circuit& c);

/// Sum over bases of the product of their variables, one chain per basis.
Circuit naive_from_bases(const std::vector<std::vector<std::string>>& bases);

std::string format_circuit(const Circuit& c);
Circuit parse_circuit(std::string_view text);

}  // namespace bgpc

#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bgpc/tropical.hpp"

namespace bgpc {

/// Either network input k or the output of neuron k.
struct NodeRef {
  bool neuron = false;
  std::size_t index = 0;

  auto operator<=>(const NodeRef&) const = default;
};

struct Term {
  Rational weight;
  NodeRef ref;

  bool operator==(const Term&) const = default;
};

struct Neuron {
  std::vector<Term> terms;  // output is max{0, sum of weight * ref}

  bool operator==(const Neuron&) const = default;
};

/// Feed-forward rectifier network with a linear readout; size = neuron count.
class ReluNetwork {
 public:
  ReluNetwork() = default;
  ReluNetwork(std::vector<std::string> inputs, std::vector<Neuron> neurons, std::vector<Term> readout);

  const std::vector<std::string>& inputs() const { return inputs_; }
  const std::vector<Neuron>& neurons() const { return neurons_; }
  const std::vector<Term>& readout() const { return readout_; }
  std::size_t size() const { return neurons_.size(); }

  Rational forward(const Assignment& point) const;
  /// True iff every weight (neurons and readout) is -1, 0 or 1.
  bool unit_weights() const;

  bool operator==(const ReluNetwork&) const = default;

 private:
  std::vector<std::string> inputs_;
  std::vector<Neuron> neurons_;
  std::vector<Term> readout_;
};

/// Add/Sub gates fold into linear combinations; each Max(a, b) adds the units
/// (a-b)+, b+, (-b)+ (the last two shared across uses of b). Whenever a
/// combination would need a weight outside {-1,0,1}, the offending operand is
/// first re-expressed through a fresh pair v+, (-v)+.
ReluNetwork lower_to_relu(const TropicalCircuit& t);

/// `inputs <var>...`, then `n<id> = relu <w>*<ref> ...` lines, then
/// `readout <w>*<ref> ...`; refs are `i<k>` (input) or `n<k>` (neuron), weights p/q.
std::string format_relu(const ReluNetwork& net);
ReluNetwork parse_relu(std::string_view text);

}  // namespace bgpc

#pragma once

#include <random>
#include <string>
#include <vector>

#include "bgpc/circuit.hpp"
#include "bgpc/graph.hpp"
#include "bgpc/matroid.hpp"
#include "bgpc/oracles.hpp"

namespace bgpc::testing {

inline Matroid triangle() {
  return Matroid::from_graph("k3", Graph(3, {{"a", 0, 1}, {"b", 0, 2}, {"c", 1, 2}}));
}

inline Matroid graphic(const Graph& g, const std::string& name = "g") { return Matroid::from_graph(name, g); }

inline Rational at_ones(const Circuit& c) { return eval_rational(c, constant_point(c.variables(), 1)); }

inline std::vector<std::vector<std::string>> label_bases(const Matroid& m) {
  std::vector<std::vector<std::string>> out;
  for (auto b : m.bases()) out.push_back(m.labels_of(b));
  return out;
}

}  // namespace bgpc::testing

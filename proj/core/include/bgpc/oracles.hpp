#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bgpc/circuit.hpp"
#include "bgpc/graph.hpp"
#include "bgpc/matroid.hpp"

namespace bgpc {

/// Sum over enumerated bases of the product of the assigned values.
Rational brute_bgp_eval(const Matroid& m, const Assignment& point, std::size_t guard = kEnumerateGuard);

struct WeightedBasis {
  ElementSet basis;
  Rational weight;
};
/// Elements in decreasing weight order (ties by position), kept when independent.
WeightedBasis greedy_max_basis(const Matroid& m, const Assignment& weights);
/// Maximum over the enumerated basis list.
WeightedBasis exhaustive_max_basis(const Matroid& m, const Assignment& weights);

/// Determinant of the reduced Laplacian; loops ignored, parallel edges counted.
Integer kirchhoff_count(const Graph& g);

/// Strictly positive rationals with numerator and denominator in [1, 10^4].
Assignment random_positive_point(const std::vector<std::string>& vars, std::mt19937_64& rng);
/// Integers in [lo, hi].
Assignment random_int_point(const std::vector<std::string>& vars, std::mt19937_64& rng, int lo, int hi);
Assignment constant_point(const std::vector<std::string>& vars, const Rational& value);

struct Verdict {
  std::string name;
  bool pass = true;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  Assignment point;  // first counterexample
  Rational expected;
  Rational got;
  std::string note;  // set when evaluation itself failed
};

/// Compares eval_rational against brute_bgp_eval at `trials` random points.
Verdict identity_test(const std::string& name, const Circuit& c, const Matroid& m, std::size_t trials,
                      std::uint64_t seed);

/// `PASS <name> trials=<t> seed=<s>` or `FAIL <name> point=<...> expected=<p/q> got=<p/q>`.
std::string format_verdict(const Verdict& v);
std::string format_point(const Assignment& p);

}  // namespace bgpc

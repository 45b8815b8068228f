#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "bgpc/circuit.hpp"

namespace bgpc {

inline constexpr std::size_t kSymbolicMaxSize = 60;
inline constexpr unsigned kSymbolicMaxDegree = 12;

using Monomial = std::vector<unsigned>;  // exponents, one per variable

/// Polynomial with positive integer coefficients.
struct SparsePolynomial {
  std::map<Monomial, Integer> terms;

  unsigned degree() const;
  Rational eval(const std::vector<Rational>& point) const;
  /// max over monomials of <exponents, w>; the polynomial must be non-empty.
  Rational tropical(const std::vector<Rational>& w) const;
};

/// Numerator/denominator expansion of a circuit without cancellation.
struct Expansion {
  std::vector<std::string> variables;
  SparsePolynomial numerator;
  SparsePolynomial denominator;

  std::vector<Rational> point(const Assignment& a) const;
};

/// Throws TooLarge beyond the size or degree guard.
Expansion expand_symbolic(const Circuit& c);

}  // namespace bgpc

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bgpc/int_matrix.hpp"

namespace bgpc {

inline constexpr std::size_t kTuGuard = 8;

/// Fraction-free (Bareiss) elimination; exact for any rational input.
Rational det_exact(const RationalMatrix& m);
Integer det_integer(const IntMatrix& m);

/// Every square subdeterminant in {-1,0,1}. Throws MatrixTooLarge when
/// min(rows, cols) exceeds the guard.
bool is_tu(const IntMatrix& a, std::size_t guard = kTuGuard);

/// Signs the support of `b` so that every chordless cycle of its bipartite
/// support graph sums to 0 mod 4, then checks total unimodularity (exhaustively
/// up to the guard, by sampled minors beyond it). Throws NotRegular on failure.
SignedMatrix camion_sign(const BinaryMatrix& b);

struct WeightedGram {
  RationalMatrix l;
  IntMatrix a;
  std::vector<Rational> z;
};
WeightedGram weighted_gram(const IntMatrix& a, const std::vector<Rational>& z);

/// Row r eliminated: columns N0 (zero in row r) first, then pairs (j,k), j<k,
/// of N1 in lexicographic order.
struct StarMesh {
  IntMatrix reduced;
  std::size_t row = 0;
  std::vector<std::size_t> n0;
  std::vector<std::size_t> n1;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};
StarMesh star_mesh(const IntMatrix& a, std::size_t r);

/// y = sum of z over N1, and the new column weights (z for N0, z_j z_k / y per pair).
struct StarMeshWeights {
  Rational y;
  std::vector<Rational> z;
};
StarMeshWeights star_mesh_weights(const StarMesh& s, const std::vector<Rational>& z);

}  // namespace bgpc

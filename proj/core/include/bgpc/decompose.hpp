#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bgpc/graph.hpp"
#include "bgpc/matroid.hpp"
#include "bgpc/tree.hpp"

namespace bgpc {

/// Graph G with M(G) = m, edges labelled by m's ground set; nullopt if m is
/// not graphic. The graph is connected.
std::optional<Graph> find_graph(const Matroid& m);

/// Bijection phi (a-index -> b-index) with phi(B) a basis of b for every basis
/// B of a.
std::optional<std::vector<std::size_t>> find_isomorphism(const Matroid& a, const Matroid& b);

/// Decomposition tree found by exhaustive search: 1-separations, then
/// 2-separations, then graphic, cographic, R10 and F7 leaves, then delta-sums. Interface markers are labelled
/// "_p<k>" (2-sums) and "_t<k>a", "_t<k>b", "_t<k>c" (triangles). Throws GroundTooLarge above
/// `guard` elements and NotDecomposable when the search fails.
Tree auto_decompose(const Matroid& m, std::size_t guard = kAutoGuard);

}  // namespace bgpc

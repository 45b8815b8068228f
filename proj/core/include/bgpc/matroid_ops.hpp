#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bgpc/binary_matrix.hpp"
#include "bgpc/matroid.hpp"

namespace bgpc {

using Triangle = std::array<std::string, 3>;

std::vector<ElementSet> enumerate_bases(const Matroid& m, std::size_t guard = kEnumerateGuard);

/// Greedy rank via the independence test of the backing.
std::size_t rank_of(const Matroid& m, ElementSet x);
std::size_t rank_of(const Matroid& m, const std::vector<std::string>& labels);

bool is_loop(const Matroid& m, std::size_t e);
bool is_coloop(const Matroid& m, std::size_t e);

/// Binary-backed matroids dualize to a binary representation; everything else
/// to a basis list of complements.
Matroid dual(const Matroid& m);

Matroid delete_element(const Matroid& m, const std::string& e);
Matroid contract_element(const Matroid& m, const std::string& e);
/// Restriction to `keep` (may drop coloops; never errors on rank loss).
Matroid restrict_to(const Matroid& m, ElementSet keep, std::string name);

bool is_circuit(const Matroid& m, ElementSet c);
bool is_cocircuit(const Matroid& m, ElementSet c);
/// True iff some non-empty subset of `d` is a cocircuit.
bool contains_cocircuit(const Matroid& m, ElementSet d);
bool contains_circuit(const Matroid& m, ElementSet d);

/// Result ground: left's elements (minus the interface) followed by right's.
Matroid one_sum(const Matroid& m1, const Matroid& m2);
Matroid two_sum(const Matroid& m1, const Matroid& m2, const std::string& glue);
Matroid delta_sum(const Matroid& m1, const Matroid& m2, const Triangle& d);
/// Like delta_sum with parallel copies of the triangle kept in the result,
/// carrying the triangle's labels and listed right after m1's other elements.
Matroid delta_sum_plus(const Matroid& m1, const Matroid& m2, const Triangle& d);

/// Adds a parallel copy of element `e` labelled `copy` at the end of the ground set.
Matroid parallel_extension(const Matroid& m, const std::string& e, const std::string& copy);

Matroid delta_y_exchange(const Matroid& m, const Triangle& d);
Matroid y_delta_exchange(const Matroid& m, const Triangle& d);

/// Binary representation of `m` built from fundamental circuits of its first
/// basis; nullopt when that matrix does not reproduce the basis set.
std::optional<BinaryMatrix> find_binary_rep(const Matroid& m);

/// GF(2) representation whose last row has support exactly `d`.
BinaryMatrix rep_with_cocircuit_row(const Matroid& m, ElementSet d);

/// Smallest X (by bitmask) with r(X)+r(E-X)-r(M) <= k-1 and min(|X|,|E-X|) >= k.
std::optional<ElementSet> find_separation(const Matroid& m, int k, std::size_t guard = kSeparationGuard);
bool is_connected_matroid(const Matroid& m);
bool is_three_connected(const Matroid& m);

/// Exhaustive basis-exchange check.
bool satisfies_basis_exchange(const Matroid& m, std::size_t guard = kAxiomGuard);

}  // namespace bgpc

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bgpc/binary_matrix.hpp"
#include "bgpc/matroid.hpp"
#include "bgpc/tree.hpp"

namespace bgpc {

/// The non-identity blocks A of the standard representations (I | A).
BinaryMatrix matrix_a10();
BinaryMatrix matrix_a12();
BinaryMatrix matrix_a7();
/// (I_r | A) for the given block.
BinaryMatrix standard_form(const BinaryMatrix& a);

std::vector<std::string> numbered_labels(const std::string& prefix, std::size_t n);

Matroid r10_matroid(std::vector<std::string> labels = {});
Matroid f7_matroid(std::vector<std::string> labels = {});
Matroid r12_matroid(std::vector<std::string> labels = {});

/// R12 over the (I | A12) labelling as a delta-sum of a cographic part and a
/// graphic part on five vertices.
Tree r12_tree(std::vector<std::string> labels = {});

struct Fixture {
  std::string name;
  Tree tree;
  Matroid matroid;  // independent construction, used as the oracle
};

/// Names: k3..k7, k3-co..k7-co, r10, f7, r12, c4-2sum, k4-dsum-k4,
/// random-composite-<seed>.
Fixture make_fixture(const std::string& name);
Tree random_composite(std::uint64_t seed);

/// Fixtures exercised by the identity, size, tropical and ReLU suites.
std::vector<std::string> suite_fixture_names();

}  // namespace bgpc

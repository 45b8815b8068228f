#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bgpc/circuit.hpp"
#include "bgpc/graph.hpp"
#include "bgpc/tree.hpp"

namespace bgpc {

/// One line of the size accounting. `added` is the gate count the rule
/// contributed on top of its children (negative when zero elimination
/// removed gates); `limit` is the rule's own allowance where one exists.
struct LedgerEntry {
  std::string rule;
  std::string node;
  long long added = 0;
  std::size_t elements = 0;  // ground size of the node the rule belongs to
  std::optional<long long> limit;
  std::size_t vertices = 0;  // star-mesh steps: vertex count before the step
};

struct SynthesisReport {
  Circuit circuit;
  std::size_t size = 0;
  std::size_t elements = 0;
  std::size_t bound = 0;  // elements^3
  std::vector<LedgerEntry> ledger;
  std::map<std::string, std::string> variables;  // element -> input variable
};

/// Partial result: a circuit, or the empty product 1 (rank 0) which a
/// constant-free circuit cannot express on its own.
struct Poly {
  std::optional<Circuit> circuit;
  std::size_t size() const { return circuit ? circuit->size() : 0; }
};

SynthesisReport synth(const Tree& tree);

/// Vertex elimination, highest vertex first. Throws DisconnectedGraph.
Circuit synth_graphic(const Graph& g, std::vector<LedgerEntry>* ledger = nullptr);
/// x^E * f_G(1/x) with a prefix-product chain; exactly 2n gates on top of
/// the graphic circuit.
Circuit synth_cographic(const Graph& g, std::vector<LedgerEntry>* ledger = nullptr);

Circuit compose_one_sum(const Circuit& c1, const Circuit& c2);
Circuit compose_two_sum(const Circuit& c_m1, const Circuit& c_del, const Circuit& c_con, const std::string& d);

/// Circuit for M1 (+)_Delta M(G2) (or the Delta-plus sum), given a circuit for
/// M1 whose inputs include the triangle labels. G2 must contain the triangle
/// as edges on three distinct vertices.
Circuit eliminate_delta_graphic(const Circuit& c_m1, const Graph& g2, const Triangle& triangle, bool plus,
                                bool check_three_connected = true, std::vector<LedgerEntry>* ledger = nullptr);

/// Tree for M\e or M/e (e not a coloop resp. loop of M).
Tree minor_tree(const Tree& t, const std::string& e, bool contract);

/// Star-mesh step allowance for a vertex count l: (l-2) + 3*C(l-1,2) + 1.
long long star_mesh_step_limit(std::size_t l);

std::string format_ledger(const SynthesisReport& r);

}  // namespace bgpc

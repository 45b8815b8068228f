#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bgpc/binary_matrix.hpp"
#include "bgpc/element_set.hpp"
#include "bgpc/graph.hpp"

namespace bgpc {

/// Exhaustive-search limits on the ground-set size. Callers may pass larger
/// values explicitly; these are the defaults.
inline constexpr std::size_t kEnumerateGuard = 24;
inline constexpr std::size_t kSeparationGuard = 20;
inline constexpr std::size_t kAxiomGuard = 14;
inline constexpr std::size_t kAutoGuard = 12;

enum class Backing { BasisList, Oracle, Binary, Graph };

using IndependenceOracle = std::function<bool(ElementSet)>;

/// Immutable matroid over a labelled ground set. Copies share state, including
/// the lazily enumerated basis list.
class Matroid {
 public:
  Matroid() = default;

  static Matroid from_bases(std::string name, std::vector<std::string> ground, std::vector<ElementSet> bases);
  static Matroid from_basis_labels(std::string name, std::vector<std::string> ground,
                                   const std::vector<std::vector<std::string>>& bases);
  static Matroid from_oracle(std::string name, std::vector<std::string> ground, std::size_t rank,
                             IndependenceOracle oracle);
  /// Column matroid of `rep`; zero rows and dependent rows are reduced away.
  static Matroid from_binary(std::string name, std::vector<std::string> ground, const BinaryMatrix& rep);
  /// Cycle matroid of a connected graph; ground = edge labels in edge order.
  static Matroid from_graph(std::string name, Graph graph);

  const std::string& name() const;
  const std::vector<std::string>& ground() const;
  std::size_t size() const { return ground().size(); }
  std::size_t rank() const;
  Backing backing() const;

  /// Present only for the corresponding backing.
  const BinaryMatrix* binary() const;
  const Graph* graph() const;

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws UnknownElement.
  std::size_t index(std::string_view label) const;
  ElementSet set_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(ElementSet s) const;
  ElementSet everything() const { return ElementSet::full(size()); }

  bool is_independent(ElementSet s) const;
  /// Sorted list of all bases; enumerated once and cached.
  const std::vector<ElementSet>& bases(std::size_t guard = kEnumerateGuard) const;

  Matroid renamed(std::string name) const;
  /// Same matroid with labels passed through `fn`; must stay pairwise distinct.
  Matroid relabeled(const std::function<std::string(const std::string&)>& fn) const;

  struct State;

 private:
  explicit Matroid(std::shared_ptr<State> state) : state_(std::move(state)) {}
  std::shared_ptr<State> state_;
};

/// Basis list with ground positions remapped so that both matroids use `a`'s
/// label order; nullopt if ground label sets differ.
std::optional<std::vector<ElementSet>> aligned_bases(const Matroid& a, const Matroid& b);
bool same_bases(const Matroid& a, const Matroid& b);

}  // namespace bgpc

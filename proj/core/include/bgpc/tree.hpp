#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bgpc/graph.hpp"
#include "bgpc/matroid.hpp"
#include "bgpc/matroid_ops.hpp"

namespace bgpc {

enum class NodeKind { Graphic, Cographic, R10, F7, Explicit, OneSum, TwoSum, DeltaSum, DeltaSumPlus };

struct TreeNode;
using Tree = std::shared_ptr<const TreeNode>;

/// Declared decomposition. Leaves carry their matroid (graphs for the graphic
/// kinds); inner nodes name the shared glue element or triangle.
struct TreeNode {
  NodeKind kind = NodeKind::Explicit;
  Graph graph;
  Matroid leaf;
  Tree left;
  Tree right;
  std::string glue;
  Triangle triangle;

  bool is_leaf() const { return !left; }
};

Tree graphic_leaf(Graph g);
Tree cographic_leaf(Graph g);
Tree r10_leaf(std::vector<std::string> labels = {});
Tree f7_leaf(std::vector<std::string> labels = {});
Tree explicit_leaf(Matroid m);
Tree one_sum_node(Tree left, Tree right);
Tree two_sum_node(Tree left, Tree right, std::string glue);
Tree delta_sum_node(Tree left, Tree right, Triangle triangle, bool plus = false);

/// Ground labels of the composed matroid, in sum order.
std::vector<std::string> tree_ground(const Tree& t);
/// Composes the tree with the matroid-level sum operations.
Matroid recompose(const Tree& t);
std::size_t tree_depth(const Tree& t);

/// s-expression syntax, e.g. `(2sum (graphic K3 a b d) (graphic K3 d c e) glue=d)`.
/// Relative file names resolve against `base_dir`.
Tree parse_tree(std::string_view text, const std::string& base_dir = ".");
std::string format_tree(const Tree& t);

}  // namespace bgpc

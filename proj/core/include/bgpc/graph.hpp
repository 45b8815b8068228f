#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bgpc {

/// Undirected edge between vertices u and v (0-based). u == v is a loop.
struct Edge {
  std::string label;
  int u = 0;
  int v = 0;

  bool operator==(const Edge&) const = default;
};

/// Undirected multigraph with labelled edges; vertices are 0..vertex_count-1.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<std::size_t> edge_index(std::string_view label) const;
  std::vector<std::string> labels() const;

  int degree(int v) const;
  int min_degree() const;
  bool is_connected() const;
  bool is_simple() const;

  /// Copy without the named edge.
  Graph without_edge(std::string_view label) const;
  /// Copy with the named edge contracted; the higher endpoint merges into the
  /// lower one and vertex ids above it shift down by one.
  Graph contracted(std::string_view label) const;
  /// Copy with every edge label passed through the map (labels absent from it stay).
  template <typename Fn>
  Graph relabeled(Fn&& fn) const {
    Graph g = *this;
    for (auto& e : g.edges_) e.label = fn(e.label);
    return g;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Label of the edge v_i v_j of a complete graph (1-based, i < j): "e12", or
/// "e10_11" once vertex numbers need two digits.
std::string complete_edge_label(int i, int j);

/// K_l with edges in canonical order (12, 13, ..., 1l, 23, ...). Labels default
/// to complete_edge_label; otherwise exactly C(l,2) labels in that order.
Graph complete_graph(int l, std::vector<std::string> labels = {});

/// Cycle v1 v2 ... vl v1; edge k joins v_k and v_{k+1}.
Graph cycle_graph(int l, std::vector<std::string> labels = {});

/// Wheel with a rim of `spokes` vertices (0..spokes-1) and hub `spokes`.
/// Rim edges "r<k>", spokes "s<k>" unless labels are given (rim first).
Graph wheel_graph(int spokes, std::vector<std::string> labels = {});

/// Disjoint-set forest over vertex ids, used for acyclicity tests.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  std::size_t find(std::size_t x);
  /// Returns false if x and y were already joined.
  bool unite(std::size_t x, std::size_t y);

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace bgpc

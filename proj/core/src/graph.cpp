#include "bgpc/graph.hpp"

#include <algorithm>
#include <numeric>

#include "bgpc/error.hpp"

namespace bgpc {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw Error(ErrorKind::InvalidMatroid, "negative vertex count");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw Error(ErrorKind::InvalidMatroid, "edge '" + e.label + "' has an endpoint out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (edges_[j].label == e.label) throw Error(ErrorKind::InvalidMatroid, "duplicate edge label '" + e.label + "'");
    }
  }
}

std::optional<std::size_t> Graph::edge_index(std::string_view label) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].label == label) return i;
  }
  return std::nullopt;
}

std::vector<std::string> Graph::labels() const {
  std::vector<std::string> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.label);
  return out;
}

int Graph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges_) {
    if (e.u == v) ++d;
    if (e.v == v) ++d;
  }
  return d;
}

int Graph::min_degree() const {
  if (vertex_count_ == 0) return 0;
  int best = degree(0);
  for (int v = 1; v < vertex_count_; ++v) best = std::min(best, degree(v));
  return best;
}

bool Graph::is_connected() const {
  if (vertex_count_ <= 1) return true;
  UnionFind uf(static_cast<std::size_t>(vertex_count_));
  int components = vertex_count_;
  for (const auto& e : edges_) {
    if (uf.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) --components;
  }
  return components == 1;
}

bool Graph::is_simple() const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& a = edges_[i];
    if (a.u == a.v) return false;
    for (std::size_t j = 0; j < i; ++j) {
      const auto& b = edges_[j];
      if (std::minmax(a.u, a.v) == std::minmax(b.u, b.v)) return false;
    }
  }
  return true;
}

Graph Graph::without_edge(std::string_view label) const {
  auto idx = edge_index(label);
  if (!idx) throw Error(ErrorKind::UnknownElement, "graph has no edge '" + std::string(label) + "'");
  Graph g = *this;
  g.edges_.erase(g.edges_.begin() + static_cast<std::ptrdiff_t>(*idx));
  return g;
}

Graph Graph::contracted(std::string_view label) const {
  auto idx = edge_index(label);
  if (!idx) throw Error(ErrorKind::UnknownElement, "graph has no edge '" + std::string(label) + "'");
  const auto [keep, gone] = std::minmax(edges_[*idx].u, edges_[*idx].v);
  Graph g;
  if (keep == gone) {
    // contracting a loop is the same as deleting it
    g = *this;
    g.edges_.erase(g.edges_.begin() + static_cast<std::ptrdiff_t>(*idx));
    return g;
  }
  g.vertex_count_ = vertex_count_ - 1;
  auto remap = [&](int v) {
    if (v == gone) return keep;
    return v > gone ? v - 1 : v;
  };
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i == *idx) continue;
    g.edges_.push_back(Edge{edges_[i].label, remap(edges_[i].u), remap(edges_[i].v)});
  }
  return g;
}

std::string complete_edge_label(int i, int j) {
  if (i < 10 && j < 10) return "e" + std::to_string(i) + std::to_string(j);
  return "e" + std::to_string(i) + "_" + std::to_string(j);
}

namespace {

void require_label_count(const std::vector<std::string>& labels, std::size_t want, const char* what) {
  if (!labels.empty() && labels.size() != want) {
    throw Error(ErrorKind::InvalidMatroid, std::string(what) + " needs " + std::to_string(want) + " labels, got " +
                                               std::to_string(labels.size()));
  }
}

}  // namespace

Graph complete_graph(int l, std::vector<std::string> labels) {
  if (l < 1) throw Error(ErrorKind::InvalidMatroid, "complete graph needs at least one vertex");
  const auto m = static_cast<std::size_t>(l * (l - 1) / 2);
  require_label_count(labels, m, "complete graph");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j, ++k) {
      edges.push_back(Edge{labels.empty() ? complete_edge_label(i + 1, j + 1) : labels[k], i, j});
    }
  }
  return Graph(l, std::move(edges));
}

Graph cycle_graph(int l, std::vector<std::string> labels) {
  if (l < 2) throw Error(ErrorKind::InvalidMatroid, "cycle needs at least two vertices");
  require_label_count(labels, static_cast<std::size_t>(l), "cycle");
  std::vector<Edge> edges;
  for (int k = 0; k < l; ++k) {
    std::string label = labels.empty() ? "c" + std::to_string(k + 1) : labels[static_cast<std::size_t>(k)];
    edges.push_back(Edge{std::move(label), k, (k + 1) % l});
  }
  return Graph(l, std::move(edges));
}

Graph wheel_graph(int spokes, std::vector<std::string> labels) {
  if (spokes < 3) throw Error(ErrorKind::InvalidMatroid, "wheel needs at least three spokes");
  require_label_count(labels, static_cast<std::size_t>(2 * spokes), "wheel");
  std::vector<Edge> edges;
  for (int k = 0; k < spokes; ++k) {
    std::string label = labels.empty() ? "r" + std::to_string(k + 1) : labels[static_cast<std::size_t>(k)];
    edges.push_back(Edge{std::move(label), k, (k + 1) % spokes});
  }
  for (int k = 0; k < spokes; ++k) {
    std::string label =
        labels.empty() ? "s" + std::to_string(k + 1) : labels[static_cast<std::size_t>(spokes + k)];
    edges.push_back(Edge{std::move(label), k, spokes});
  }
  return Graph(spokes + 1, std::move(edges));
}

UnionFind::UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  parent_[std::max(x, y)] = std::min(x, y);
  return true;
}

}  // namespace bgpc

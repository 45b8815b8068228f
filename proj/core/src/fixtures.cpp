#include "bgpc/fixtures.hpp"

#include <random>

#include "bgpc/error.hpp"
#include "bgpc/matroid_ops.hpp"

namespace bgpc {

BinaryMatrix matrix_a10() {
  return BinaryMatrix::from_strings({"10011", "11001", "01101", "00111", "11111"});
}

BinaryMatrix matrix_a12() {
  return BinaryMatrix::from_strings({"101100", "011100", "101011", "010111", "101010", "010101"});
}

BinaryMatrix matrix_a7() { return BinaryMatrix::from_strings({"1011", "1101", "0111"}); }

BinaryMatrix standard_form(const BinaryMatrix& a) {
  BinaryMatrix m(a.rows(), a.rows() + a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    m.set(i, i, true);
    for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, a.rows() + j, a.get(i, j));
  }
  return m;
}

std::vector<std::string> numbered_labels(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

namespace {

Matroid standard_matroid(const std::string& name, const BinaryMatrix& a, std::vector<std::string> labels,
                         const std::string& prefix) {
  const std::size_t n = a.rows() + a.cols();
  if (labels.empty()) labels = numbered_labels(prefix, n);
  if (labels.size() != n) {
    throw Error(ErrorKind::BadInterface, name + " needs " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
  }
  return Matroid::from_binary(name, std::move(labels), standard_form(a));
}

Graph with_labels(Graph g, const std::string& prefix) {
  std::size_t k = 0;
  return g.relabeled([&](const std::string&) { return prefix + std::to_string(++k); });
}

}  // namespace

Matroid r10_matroid(std::vector<std::string> labels) { return standard_matroid("R10", matrix_a10(), std::move(labels), "r"); }
Matroid f7_matroid(std::vector<std::string> labels) { return standard_matroid("F7", matrix_a7(), std::move(labels), "f"); }
Matroid r12_matroid(std::vector<std::string> labels) { return standard_matroid("R12", matrix_a12(), std::move(labels), "s"); }

Tree r12_tree(std::vector<std::string> labels) {
  if (labels.empty()) labels = numbered_labels("s", 12);
  if (labels.size() != 12) throw Error(ErrorKind::BadInterface, "r12 needs 12 labels");
  auto s = [&](int i) { return labels[static_cast<std::size_t>(i - 1)]; };
  const Triangle d{"_t1", "_t2", "_t3"};
  Graph left(6, {{s(1), 0, 1}, {s(2), 2, 3}, {s(7), 0, 2}, {s(8), 1, 3}, {s(9), 2, 4}, {s(10), 1, 4},
                 {d[0], 0, 5}, {d[1], 3, 5}, {d[2], 4, 5}});
  Graph right(5, {{s(3), 0, 1}, {s(4), 0, 2}, {s(5), 1, 3}, {s(6), 2, 4}, {s(11), 2, 3}, {s(12), 1, 4},
                  {d[0], 0, 3}, {d[1], 0, 4}, {d[2], 3, 4}});
  return delta_sum_node(cographic_leaf(left), graphic_leaf(right), d);
}

Tree random_composite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  auto piece = [&](std::size_t i) -> Tree {
    const std::string prefix(1, static_cast<char>('a' + i));
    switch (pick(5)) {
      case 0:
        return graphic_leaf(with_labels(complete_graph(3), prefix));
      case 1:
        return graphic_leaf(with_labels(complete_graph(4), prefix));
      case 2:
        return graphic_leaf(with_labels(cycle_graph(4), prefix));
      case 3:
        return cographic_leaf(with_labels(complete_graph(4), prefix));
      default:
        return cographic_leaf(with_labels(cycle_graph(4), prefix));
    }
  };
  Tree t = piece(0);
  for (std::size_t i = 1; i < 3; ++i) {
    const Matroid m = recompose(t);
    const std::size_t op = pick(3);
    if (op == 2) {
      std::vector<ElementSet> triangles;
      const auto n = m.size();
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          for (std::size_t c = b + 1; c < n; ++c) {
            const ElementSet d = ElementSet::single(a) | ElementSet::single(b) | ElementSet::single(c);
            if (is_circuit(m, d) && !contains_cocircuit(m, d)) triangles.push_back(d);
          }
        }
      }
      if (!triangles.empty()) {
        const auto d = m.labels_of(triangles[pick(triangles.size())]);
        const std::string prefix(1, static_cast<char>('a' + i));
        std::size_t k = 0;
        // Edges 12, 13, 23 of K4 carry the triangle.
        Graph g = complete_graph(4).relabeled([&](const std::string& l) {
          ++k;
          if (l == complete_edge_label(1, 2)) return d[0];
          if (l == complete_edge_label(1, 3)) return d[1];
          if (l == complete_edge_label(2, 3)) return d[2];
          return prefix + std::to_string(k);
        });
        t = delta_sum_node(t, graphic_leaf(g), {d[0], d[1], d[2]});
        continue;
      }
    }
    Tree p = piece(i);
    if (op == 0) {
      t = one_sum_node(t, p);
      continue;
    }
    std::vector<std::string> glue;
    for (std::size_t e = 0; e < m.size(); ++e) {
      if (!is_loop(m, e) && !is_coloop(m, e)) glue.push_back(m.ground()[e]);
    }
    if (glue.empty()) {
      t = one_sum_node(t, p);
      continue;
    }
    const std::string g = glue[pick(glue.size())];
    const auto labels = p->graph.labels();
    const std::string target = labels[pick(labels.size())];
    Graph pg = p->graph.relabeled([&](const std::string& l) { return l == target ? g : l; });
    p = p->kind == NodeKind::Graphic ? graphic_leaf(pg) : cographic_leaf(pg);
    t = two_sum_node(t, p, g);
  }
  return t;
}

Fixture make_fixture(const std::string& name) {
  auto complete = [&](const std::string& digits) -> int {
    if (digits.size() != 1 || digits[0] < '3' || digits[0] > '7') throw Error(ErrorKind::Usage, "unknown fixture '" + name + "'");
    return digits[0] - '0';
  };
  if (name.size() >= 2 && name[0] == 'k' && name.find("-dsum-") == std::string::npos) {
    const bool co = name.size() > 3 && name.substr(name.size() - 3) == "-co";
    const int l = complete(co ? name.substr(1, name.size() - 4) : name.substr(1));
    const Graph g = complete_graph(l);
    if (co) return {name, cographic_leaf(g), dual(Matroid::from_graph(name, g))};
    return {name, graphic_leaf(g), Matroid::from_graph(name, g)};
  }
  if (name == "r10") return {name, r10_leaf(), r10_matroid()};
  if (name == "f7") return {name, f7_leaf(), f7_matroid()};
  if (name == "r12") return {name, r12_tree(), r12_matroid()};
  if (name == "c4-2sum") {
    Tree t = two_sum_node(graphic_leaf(complete_graph(3, {"a", "b", "d"})), graphic_leaf(complete_graph(3, {"d", "c", "e"})), "d");
    return {name, t, Matroid::from_graph(name, cycle_graph(4, {"a", "b", "c", "e"}))};
  }
  if (name == "k4-dsum-k4") {
    const Graph left = complete_graph(4, {"t1", "t2", "u1", "t3", "u2", "u3"});
    const Graph right = complete_graph(4, {"t1", "t2", "v1", "t3", "v2", "v3"});
    const Triangle d{"t1", "t2", "t3"};
    Tree t = delta_sum_node(graphic_leaf(left), graphic_leaf(right), d);
    return {name, t, delta_sum(Matroid::from_graph("left", left), Matroid::from_graph("right", right), d)};
  }
  const std::string rc = "random-composite-";
  if (name.rfind(rc, 0) == 0 && name.size() > rc.size()) {
    std::uint64_t seed = 0;
    for (char c : name.substr(rc.size())) {
      if (c < '0' || c > '9') throw Error(ErrorKind::Usage, "unknown fixture '" + name + "'");
      seed = seed * 10 + static_cast<std::uint64_t>(c - '0');
    }
    Tree t = random_composite(seed);
    return {name, t, recompose(t)};
  }
  throw Error(ErrorKind::Usage, "unknown fixture '" + name + "'");
}

std::vector<std::string> suite_fixture_names() {
  return {"k3",     "k4",     "k5",      "k6",         "k3-co",              "k4-co",              "k5-co",
          "k6-co",  "r10",    "f7",      "c4-2sum",    "k4-dsum-k4",         "r12",                "random-composite-1",
          "random-composite-2", "random-composite-3"};
}

}  // namespace bgpc

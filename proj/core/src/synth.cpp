#include "bgpc/synth.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bgpc/error.hpp"
#include "bgpc/matroid_ops.hpp"

namespace bgpc {

long long star_mesh_step_limit(std::size_t l) {
  const auto v = static_cast<long long>(l);
  return (v - 2) + 3 * ((v - 1) * (v - 2) / 2) + 1;
}

namespace {

using Key = std::pair<int, int>;

Key key(int u, int v) { return u < v ? Key{u, v} : Key{v, u}; }

// Edge weights of a graph under elimination, as gates of a shared builder.
// Absent keys are formal zeros.
class Eliminator {
 public:
  Eliminator(CircuitBuilder& b, std::vector<LedgerEntry>* ledger, std::string node, std::size_t elements)
      : b_(b), ledger_(ledger), node_(std::move(node)), elements_(elements) {}

  void put(int u, int v, std::size_t gate) {
    auto [it, fresh] = w_.emplace(key(u, v), gate);
    if (fresh) return;
    it->second = b_.add(it->second, gate);
    note("parallel-merge", 1, std::nullopt, 0);
  }

  std::optional<std::size_t> weight(int u, int v) const {
    auto it = w_.find(key(u, v));
    if (it == w_.end()) return std::nullopt;
    return it->second;
  }

  // One star-mesh step at v; `active` is the vertex count before the step.
  void eliminate(int v, std::size_t active) {
    const std::size_t before = b_.size();
    std::vector<std::pair<int, std::size_t>> star;
    for (auto it = w_.begin(); it != w_.end();) {
      if (it->first.first == v || it->first.second == v) {
        star.emplace_back(it->first.first == v ? it->first.second : it->first.first, it->second);
        it = w_.erase(it);
      } else {
        ++it;
      }
    }
    if (star.empty()) throw Error(ErrorKind::DisconnectedGraph, "vertex " + std::to_string(v + 1) + " is isolated");
    std::sort(star.begin(), star.end());
    std::size_t y = star[0].second;
    for (std::size_t k = 1; k < star.size(); ++k) y = b_.add(y, star[k].second);
    for (std::size_t p = 0; p < star.size(); ++p) {
      for (std::size_t q = p + 1; q < star.size(); ++q) {
        const std::size_t t = b_.div(b_.mul(star[p].second, star[q].second), y);
        auto it = w_.find(key(star[p].first, star[q].first));
        if (it == w_.end()) {
          w_.emplace(key(star[p].first, star[q].first), t);
        } else {
          it->second = b_.add(it->second, t);
        }
      }
    }
    ys_.push_back(y);
    // The closing multiplication by y is emitted in finish() but belongs to this step.
    note("star-mesh", static_cast<long long>(b_.size() - before) + 1, star_mesh_step_limit(active), active);
  }

  std::size_t finish(std::size_t result) {
    for (auto y : ys_) result = b_.mul(result, y);
    return result;
  }

 private:
  void note(const char* rule, long long added, std::optional<long long> limit, std::size_t vertices) {
    if (ledger_) ledger_->push_back({rule, node_, added, elements_, limit, vertices});
  }

  CircuitBuilder& b_;
  std::vector<LedgerEntry>* ledger_;
  std::string node_;
  std::size_t elements_;
  std::map<Key, std::size_t> w_;
  std::vector<std::size_t> ys_;
};

Circuit graphic_impl(const Graph& g, std::vector<LedgerEntry>* ledger, const std::string& node) {
  if (!g.is_connected()) throw Error(ErrorKind::DisconnectedGraph, "graph is not connected");
  if (g.vertex_count() < 2) throw Error(ErrorKind::RankZero, "single-vertex graph has the constant polynomial 1");
  CircuitBuilder b;
  Eliminator el(b, ledger, node, g.edge_count());
  for (const auto& e : g.edges()) {
    if (e.u != e.v) el.put(e.u, e.v, b.input(e.label));
  }
  for (int v = g.vertex_count() - 1; v >= 2; --v) el.eliminate(v, static_cast<std::size_t>(v + 1));
  const std::size_t out = el.finish(*el.weight(0, 1));
  return b.build(out);
}

// Wraps a circuit for f_M into one for f_{M*} = x^E f_M(1/x) over `ground`.
Circuit dual_wrap(const Circuit& c, const std::vector<std::string>& ground) {
  const std::size_t n = ground.size();
  if (n < 2) throw Error(ErrorKind::RankZero, "dual wrap needs at least two elements");
  CircuitBuilder b;
  std::vector<std::size_t> x(n), prefix(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = b.input(ground[k]);
  prefix[0] = x[0];
  for (std::size_t k = 1; k < n; ++k) prefix[k] = b.mul(prefix[k - 1], x[k]);
  std::map<std::string, std::size_t> recip;
  recip[ground[0]] = b.div(x[1], prefix[1]);
  for (std::size_t k = 1; k < n; ++k) recip[ground[k]] = b.div(prefix[k - 1], prefix[k]);
  const std::size_t inner = b.splice(c, recip);
  return b.build(b.mul(inner, prefix[n - 1]));
}

std::set<std::string> variable_set(const Circuit& c) {
  auto v = c.variables();
  return {v.begin(), v.end()};
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

Circuit cographic_impl(const Graph& g, std::vector<LedgerEntry>* ledger, const std::string& node) {
  Circuit inner = graphic_impl(g, ledger, node);
  Circuit out = dual_wrap(inner, g.labels());
  if (ledger) {
    const auto two_n = static_cast<long long>(2 * g.edge_count());
    ledger->push_back({"dual-wrap", node, static_cast<long long>(out.size() - inner.size()), g.edge_count(), two_n, 0});
  }
  return out;
}

Circuit delta_impl(const Circuit& c_m1, const Graph& g2, const Triangle& d, bool plus, bool check,
                   std::vector<LedgerEntry>* ledger, const std::string& node, std::size_t elements) {
  std::array<int, 3> idx{};
  std::set<int> corners;
  for (std::size_t k = 0; k < 3; ++k) {
    auto i = g2.edge_index(d[k]);
    if (!i) throw Error(ErrorKind::MissingTriangle, "'" + d[k] + "' is not an edge of the graphic part");
    idx[k] = static_cast<int>(*i);
    const Edge& e = g2.edges()[*i];
    if (e.u == e.v) throw Error(ErrorKind::MissingTriangle, "'" + d[k] + "' is a loop");
    corners.insert(e.u);
    corners.insert(e.v);
  }
  if (corners.size() != 3 || idx[0] == idx[1] || idx[0] == idx[2] || idx[1] == idx[2]) {
    throw Error(ErrorKind::MissingTriangle, "edges " + d[0] + "," + d[1] + "," + d[2] + " do not form a triangle");
  }
  if (check) {
    if (g2.min_degree() < 3) throw Error(ErrorKind::NotThreeConnected, "graphic part has a vertex of degree below 3");
    if (g2.edge_count() <= kSeparationGuard && !is_three_connected(Matroid::from_graph("graphic", g2))) {
      throw Error(ErrorKind::NotThreeConnected, "graphic part has a 2-separation");
    }
  }
  const auto m1_vars = variable_set(c_m1);
  for (const auto& e : g2.edges()) {
    if (!contains({d.begin(), d.end()}, e.label) && m1_vars.count(e.label)) {
      throw Error(ErrorKind::VariableClash, "'" + e.label + "' appears on both sides of the delta-sum");
    }
  }
  for (const auto& di : d) {
    if (!m1_vars.count(di)) throw Error(ErrorKind::BadInterface, "triangle element '" + di + "' missing from the other side");
  }

  CircuitBuilder b;
  Eliminator el(b, ledger, node, elements);
  for (std::size_t k = 0; k < g2.edge_count(); ++k) {
    const Edge& e = g2.edges()[k];
    if (e.u == e.v) continue;
    const bool on_triangle = std::find(idx.begin(), idx.end(), static_cast<int>(k)) != idx.end();
    if (on_triangle && !plus) continue;
    el.put(e.u, e.v, b.input(e.label));
  }
  std::size_t active = static_cast<std::size_t>(g2.vertex_count());
  for (int v = g2.vertex_count() - 1; v >= 0; --v) {
    if (corners.count(v)) continue;
    el.eliminate(v, active--);
  }
  std::set<std::string> zero;
  std::map<std::string, std::size_t> bound;
  for (std::size_t k = 0; k < 3; ++k) {
    const Edge& e = g2.edges()[static_cast<std::size_t>(idx[k])];
    if (auto w = el.weight(e.u, e.v)) {
      bound[d[k]] = *w;
    } else {
      zero.insert(d[k]);
    }
  }
  Circuit outer = c_m1;
  if (!zero.empty()) {
    outer = eliminate_zero(c_m1, zero);
    if (ledger) {
      ledger->push_back({"zero-elimination", node, static_cast<long long>(outer.size()) - static_cast<long long>(c_m1.size()),
                         elements, std::nullopt, 0});
    }
  }
  const std::size_t spliced = b.splice(outer, bound);
  return b.build(el.finish(spliced));
}

Poly unit() { return Poly{std::nullopt}; }

bool in_ground(const Tree& t, const std::string& e) { return contains(tree_ground(t), e); }

class Synthesizer {
 public:
  std::vector<LedgerEntry> ledger;

  Poly run(const Tree& t, const std::string& node, bool declared) {
    const std::size_t n = tree_ground(t).size();
    switch (t->kind) {
      case NodeKind::Graphic:
        if (t->graph.vertex_count() < 2) return unit();
        return Poly{graphic_impl(t->graph, &ledger, node)};
      case NodeKind::Cographic: {
        const Graph& g = t->graph;
        if (!g.is_connected()) throw Error(ErrorKind::DisconnectedGraph, "graph is not connected");
        const std::size_t corank = g.edge_count() + 1 - static_cast<std::size_t>(g.vertex_count());
        if (corank == 0) return unit();
        if (g.vertex_count() < 2) return Poly{product_of(g.labels(), node, n)};
        return Poly{cographic_impl(g, &ledger, node)};
      }
      case NodeKind::R10:
      case NodeKind::F7:
      case NodeKind::Explicit: {
        const Matroid& m = t->leaf;
        if (m.rank() == 0) return unit();
        std::vector<std::vector<std::string>> bases;
        for (auto b : m.bases()) bases.push_back(m.labels_of(b));
        Circuit c = naive_from_bases(bases);
        const auto closed = static_cast<long long>(bases.size() * (m.rank() - 1) + bases.size() - 1);
        ledger.push_back({"naive", node, static_cast<long long>(c.size()), n, closed, 0});
        return Poly{c};
      }
      case NodeKind::OneSum: {
        Poly a = run(t->left, node + ".L", declared);
        Poly b = run(t->right, node + ".R", declared);
        if (!a.circuit) return b;
        if (!b.circuit) return a;
        Circuit c = compose_one_sum(*a.circuit, *b.circuit);
        ledger.push_back({"1-sum", node, 1, n, 1, 0});
        return Poly{c};
      }
      case NodeKind::TwoSum:
        return two_sum(t, node, declared, n);
      case NodeKind::DeltaSum:
      case NodeKind::DeltaSumPlus:
        return delta_sum(t, node, declared, n);
    }
    throw Error(ErrorKind::InvalidMatroid, "unknown tree node");
  }

 private:
  Circuit product_of(const std::vector<std::string>& labels, const std::string& node, std::size_t n) {
    CircuitBuilder b;
    std::size_t p = b.input(labels.at(0));
    for (std::size_t k = 1; k < labels.size(); ++k) p = b.mul(p, b.input(labels[k]));
    ledger.push_back({"coloop-product", node, static_cast<long long>(labels.size() - 1), n, std::nullopt, 0});
    return b.build(p);
  }

  Poly two_sum(const Tree& t, const std::string& node, bool declared, std::size_t n) {
    const std::string& g = t->glue;
    if (declared) {
      for (const Tree& side : {t->left, t->right}) {
        const Matroid m = recompose(side);
        const auto i = m.find(g);
        if (!i) throw Error(ErrorKind::BadInterface, "glue '" + g + "' missing from a 2-sum operand");
        if (is_loop(m, *i) || is_coloop(m, *i)) {
          throw Error(ErrorKind::BadInterface, "glue '" + g + "' is a loop or coloop of a 2-sum operand");
        }
      }
    }
    const bool right_small = tree_ground(t->right).size() <= tree_ground(t->left).size();
    const Tree& m1 = right_small ? t->left : t->right;
    const Tree& m2 = right_small ? t->right : t->left;
    const std::string side1 = node + (right_small ? ".L" : ".R");
    const std::string side2 = node + (right_small ? ".R" : ".L");
    Poly c1 = run(m1, side1, declared);
    Poly del = run(minor_tree(m2, g, false), side2 + "\\" + g, false);
    Poly con = run(minor_tree(m2, g, true), side2 + "/" + g, false);
    if (!c1.circuit || !del.circuit) throw Error(ErrorKind::BadInterface, "2-sum operand without the glue element");
    if (!con.circuit) {
      Circuit c = substitute(*c1.circuit, {{g, *del.circuit}});
      ledger.push_back({"2-sum-parallel", node, 0, n, 0, 0});
      return Poly{c};
    }
    Circuit c = compose_two_sum(*c1.circuit, *del.circuit, *con.circuit, g);
    ledger.push_back({"2-sum", node, 2, n, 2, 0});
    return Poly{c};
  }

  Poly delta_sum(const Tree& t, const std::string& node, bool declared, std::size_t n) {
    const bool plus = t->kind == NodeKind::DeltaSumPlus;
    const bool right_graphic = t->right->kind == NodeKind::Graphic;
    if (!right_graphic && t->left->kind != NodeKind::Graphic) {
      throw Error(ErrorKind::BadInterface, "delta-sum needs a graphic operand");
    }
    const Tree& m1 = right_graphic ? t->left : t->right;
    const Tree& g2 = right_graphic ? t->right : t->left;
    if (declared) {
      const Matroid a = recompose(m1);
      const Matroid b = recompose(g2);
      const std::vector<std::string> d(t->triangle.begin(), t->triangle.end());
      for (const Matroid* m : {&a, &b}) {
        for (const auto& di : d) {
          if (!m->find(di)) throw Error(ErrorKind::BadInterface, "triangle element '" + di + "' missing from an operand");
        }
        const ElementSet ds = m->set_of(d);
        if (!is_circuit(*m, ds) || contains_cocircuit(*m, ds)) {
          throw Error(ErrorKind::BadInterface, "triangle is not a cocircuit-free circuit of every operand");
        }
      }
    }
    Poly c1 = run(m1, node + (right_graphic ? ".L" : ".R"), declared);
    if (!c1.circuit) throw Error(ErrorKind::BadInterface, "delta-sum operand of rank 0");
    return Poly{delta_impl(*c1.circuit, g2->graph, t->triangle, plus, declared, &ledger, node, n)};
  }
};

Tree explicit_minor(const Tree& t, const std::string& e, bool contract) {
  const Matroid m = recompose(t);
  return explicit_leaf(contract ? contract_element(m, e) : delete_element(m, e));
}

}  // namespace

Circuit synth_graphic(const Graph& g, std::vector<LedgerEntry>* ledger) { return graphic_impl(g, ledger, "graphic"); }

Circuit synth_cographic(const Graph& g, std::vector<LedgerEntry>* ledger) {
  return cographic_impl(g, ledger, "cographic");
}

Circuit compose_one_sum(const Circuit& c1, const Circuit& c2) {
  const auto v1 = variable_set(c1);
  for (const auto& v : c2.variables()) {
    if (v1.count(v)) throw Error(ErrorKind::VariableClash, "'" + v + "' appears in both 1-sum operands");
  }
  CircuitBuilder b;
  const std::size_t a = b.splice(c1);
  const std::size_t c = b.splice(c2);
  return b.build(b.mul(a, c));
}

Circuit compose_two_sum(const Circuit& c_m1, const Circuit& c_del, const Circuit& c_con, const std::string& d) {
  auto v1 = variable_set(c_m1);
  if (!v1.erase(d)) throw Error(ErrorKind::BadInterface, "glue '" + d + "' is not an input of the first operand");
  for (const Circuit* c : {&c_del, &c_con}) {
    for (const auto& v : c->variables()) {
      if (v1.count(v) || v == d) throw Error(ErrorKind::VariableClash, "'" + v + "' appears on both sides of the 2-sum");
    }
  }
  CircuitBuilder b;
  const std::size_t del = b.splice(c_del);
  const std::size_t con = b.splice(c_con);
  const std::size_t ratio = b.div(del, con);
  const std::size_t m1 = b.splice(c_m1, {{d, ratio}});
  return b.build(b.mul(m1, con));
}

Circuit eliminate_delta_graphic(const Circuit& c_m1, const Graph& g2, const Triangle& triangle, bool plus,
                                bool check_three_connected, std::vector<LedgerEntry>* ledger) {
  return delta_impl(c_m1, g2, triangle, plus, check_three_connected, ledger, "delta", g2.edge_count());
}

Tree minor_tree(const Tree& t, const std::string& e, bool contract) {
  switch (t->kind) {
    case NodeKind::Graphic: {
      const Matroid m = Matroid::from_graph("graphic", t->graph);
      const std::size_t i = m.index(e);
      if (contract && is_loop(m, i)) throw Error(ErrorKind::EmptyBasisSet, "contracting loop '" + e + "'");
      if (!contract && is_coloop(m, i)) throw Error(ErrorKind::EmptyBasisSet, "deleting coloop '" + e + "'");
      return graphic_leaf(contract ? t->graph.contracted(e) : t->graph.without_edge(e));
    }
    case NodeKind::Cographic: {
      // Deletion in the dual is contraction in the graph and vice versa.
      const Matroid m = Matroid::from_graph("graphic", t->graph);
      const std::size_t i = m.index(e);
      if (!contract && is_loop(m, i)) throw Error(ErrorKind::EmptyBasisSet, "deleting coloop '" + e + "'");
      if (contract && is_coloop(m, i)) throw Error(ErrorKind::EmptyBasisSet, "contracting loop '" + e + "'");
      return cographic_leaf(contract ? t->graph.without_edge(e) : t->graph.contracted(e));
    }
    case NodeKind::R10:
    case NodeKind::F7:
    case NodeKind::Explicit:
      return explicit_leaf(contract ? contract_element(t->leaf, e) : delete_element(t->leaf, e));
    case NodeKind::OneSum: {
      const bool left = in_ground(t->left, e);
      const Tree& side = left ? t->left : t->right;
      const Tree& other = left ? t->right : t->left;
      Tree reduced = minor_tree(side, e, contract);
      if (tree_ground(reduced).empty()) return other;
      return left ? one_sum_node(reduced, other) : one_sum_node(other, reduced);
    }
    case NodeKind::TwoSum: {
      const bool left = in_ground(t->left, e);
      const Tree& side = left ? t->left : t->right;
      const Tree& other = left ? t->right : t->left;
      const std::string& g = t->glue;
      Tree reduced = minor_tree(side, e, contract);
      const Matroid rm = recompose(reduced);
      const std::size_t gi = rm.index(g);
      if (!contract && is_coloop(rm, gi)) {
        return one_sum_node(minor_tree(reduced, g, true), minor_tree(other, g, false));
      }
      if (contract && is_loop(rm, gi)) {
        return one_sum_node(minor_tree(reduced, g, false), minor_tree(other, g, true));
      }
      return left ? two_sum_node(reduced, other, g) : two_sum_node(other, reduced, g);
    }
    case NodeKind::DeltaSum:
    case NodeKind::DeltaSumPlus: {
      const bool plus = t->kind == NodeKind::DeltaSumPlus;
      if (contains({t->triangle.begin(), t->triangle.end()}, e)) return explicit_minor(t, e, contract);
      const bool left = in_ground(t->left, e);
      const Tree& side = left ? t->left : t->right;
      const Tree& other = left ? t->right : t->left;
      Tree reduced = minor_tree(side, e, contract);
      const Matroid rm = recompose(reduced);
      const ElementSet ds = rm.set_of({t->triangle.begin(), t->triangle.end()});
      if (!is_circuit(rm, ds) || contains_cocircuit(rm, ds)) return explicit_minor(t, e, contract);
      if (reduced->kind != NodeKind::Graphic && other->kind != NodeKind::Graphic) return explicit_minor(t, e, contract);
      return left ? delta_sum_node(reduced, other, t->triangle, plus) : delta_sum_node(other, reduced, t->triangle, plus);
    }
  }
  throw Error(ErrorKind::InvalidMatroid, "unknown tree node");
}

SynthesisReport synth(const Tree& tree) {
  Synthesizer s;
  Poly p = s.run(tree, "T", true);
  if (!p.circuit) throw Error(ErrorKind::RankZero, "matroid of rank 0 has the constant polynomial 1");
  SynthesisReport r;
  r.circuit = *p.circuit;
  r.size = r.circuit.size();
  r.elements = tree_ground(tree).size();
  r.bound = r.elements * r.elements * r.elements;
  r.ledger = std::move(s.ledger);
  for (const auto& e : tree_ground(tree)) r.variables[e] = e;
  if (r.size > r.bound) {
    throw Error(ErrorKind::BudgetExceeded, "circuit size " + std::to_string(r.size) + " exceeds n^3 = " + std::to_string(r.bound));
  }
  return r;
}

std::string format_ledger(const SynthesisReport& r) {
  std::ostringstream out;
  for (const auto& e : r.ledger) {
    out << "ledger " << e.rule << " node=" << e.node << " n=" << e.elements << " added=" << e.added;
    if (e.vertices) out << " vertices=" << e.vertices;
    if (e.limit) out << " limit=" << *e.limit;
    out << '\n';
  }
  return out.str();
}

}  // namespace bgpc

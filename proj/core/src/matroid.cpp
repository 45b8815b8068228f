#include "bgpc/matroid.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_map>

#include "bgpc/error.hpp"

namespace bgpc {

struct Matroid::State {
  std::string name;
  std::vector<std::string> ground;
  std::unordered_map<std::string, std::size_t> positions;
  std::size_t rank = 0;
  Backing backing = Backing::BasisList;

  std::vector<ElementSet> given_bases;
  IndependenceOracle oracle;
  BinaryMatrix binary;
  Graph graph;

  mutable std::once_flag enumerated;
  mutable std::vector<ElementSet> cache;
};

namespace {

void index_ground(Matroid::State& s) {
  if (s.ground.size() > kMaxGround) {
    throw Error(ErrorKind::GroundTooLarge, s.name + " has " + std::to_string(s.ground.size()) + " elements");
  }
  for (std::size_t i = 0; i < s.ground.size(); ++i) {
    if (!s.positions.emplace(s.ground[i], i).second) {
      throw Error(ErrorKind::InvalidMatroid, "duplicate element label '" + s.ground[i] + "'");
    }
  }
}

std::shared_ptr<Matroid::State> make_state(std::string name, std::vector<std::string> ground) {
  auto s = std::make_shared<Matroid::State>();
  s->name = std::move(name);
  s->ground = std::move(ground);
  index_ground(*s);
  return s;
}

// Backtracking over ground positions in increasing order; emits sets in
// lexicographic order of their index sequences, sorted afterwards.
void enumerate(const Matroid& m, std::size_t r, std::size_t next, ElementSet current,
               std::vector<ElementSet>& out) {
  if (current.size() == r) {
    out.push_back(current);
    return;
  }
  const std::size_t n = m.size();
  for (std::size_t i = next; i < n && n - i >= r - current.size(); ++i) {
    const ElementSet grown = current.with(i);
    if (m.is_independent(grown)) enumerate(m, r, i + 1, grown, out);
  }
}

}  // namespace

Matroid Matroid::from_bases(std::string name, std::vector<std::string> ground, std::vector<ElementSet> bases) {
  auto s = make_state(std::move(name), std::move(ground));
  if (bases.empty()) throw Error(ErrorKind::EmptyBasisSet, s->name + " has no bases");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const ElementSet all = ElementSet::full(s->ground.size());
  s->rank = bases.front().size();
  for (auto b : bases) {
    if (!b.subset_of(all)) throw Error(ErrorKind::UnknownElement, "basis outside ground set of " + s->name);
    if (b.size() != s->rank) throw Error(ErrorKind::InvalidMatroid, "bases of " + s->name + " differ in size");
  }
  s->backing = Backing::BasisList;
  s->given_bases = std::move(bases);
  return Matroid(std::move(s));
}

Matroid Matroid::from_basis_labels(std::string name, std::vector<std::string> ground,
                                   const std::vector<std::vector<std::string>>& bases) {
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < ground.size(); ++i) pos.emplace(ground[i], i);
  std::vector<ElementSet> sets;
  for (const auto& b : bases) {
    ElementSet s;
    for (const auto& label : b) {
      auto it = pos.find(label);
      if (it == pos.end()) throw Error(ErrorKind::UnknownElement, "'" + label + "' is not in the ground set");
      s = s.with(it->second);
    }
    sets.push_back(s);
  }
  return from_bases(std::move(name), std::move(ground), std::move(sets));
}

Matroid Matroid::from_oracle(std::string name, std::vector<std::string> ground, std::size_t rank,
                             IndependenceOracle oracle) {
  auto s = make_state(std::move(name), std::move(ground));
  s->rank = rank;
  s->backing = Backing::Oracle;
  s->oracle = std::move(oracle);
  return Matroid(std::move(s));
}

Matroid Matroid::from_binary(std::string name, std::vector<std::string> ground, const BinaryMatrix& rep) {
  if (rep.cols() != ground.size()) {
    throw Error(ErrorKind::InvalidMatroid, "binary matrix has " + std::to_string(rep.cols()) + " columns for " +
                                               std::to_string(ground.size()) + " elements");
  }
  auto s = make_state(std::move(name), std::move(ground));
  s->binary = rep.row_reduced();
  s->rank = s->binary.rows();
  s->backing = Backing::Binary;
  return Matroid(std::move(s));
}

Matroid Matroid::from_graph(std::string name, Graph graph) {
  if (!graph.is_connected()) throw Error(ErrorKind::DisconnectedGraph, name + " is not connected");
  auto s = make_state(std::move(name), graph.labels());
  s->rank = graph.vertex_count() > 0 ? static_cast<std::size_t>(graph.vertex_count() - 1) : 0;
  s->backing = Backing::Graph;
  s->graph = std::move(graph);
  return Matroid(std::move(s));
}

const std::string& Matroid::name() const { return state_->name; }
const std::vector<std::string>& Matroid::ground() const {
  static const std::vector<std::string> empty;
  return state_ ? state_->ground : empty;
}
std::size_t Matroid::rank() const { return state_->rank; }
Backing Matroid::backing() const { return state_->backing; }

const BinaryMatrix* Matroid::binary() const {
  return state_->backing == Backing::Binary ? &state_->binary : nullptr;
}
const Graph* Matroid::graph() const { return state_->backing == Backing::Graph ? &state_->graph : nullptr; }

std::optional<std::size_t> Matroid::find(std::string_view label) const {
  auto it = state_->positions.find(std::string(label));
  if (it == state_->positions.end()) return std::nullopt;
  return it->second;
}

std::size_t Matroid::index(std::string_view label) const {
  auto i = find(label);
  if (!i) throw Error(ErrorKind::UnknownElement, "'" + std::string(label) + "' is not an element of " + name());
  return *i;
}

ElementSet Matroid::set_of(const std::vector<std::string>& labels) const {
  ElementSet s;
  for (const auto& l : labels) s = s.with(index(l));
  return s;
}

std::vector<std::string> Matroid::labels_of(ElementSet s) const {
  std::vector<std::string> out;
  for (auto i : s.indices()) out.push_back(state_->ground.at(i));
  return out;
}

bool Matroid::is_independent(ElementSet s) const {
  const State& st = *state_;
  switch (st.backing) {
    case Backing::BasisList:
      return std::any_of(st.given_bases.begin(), st.given_bases.end(), [&](ElementSet b) { return s.subset_of(b); });
    case Backing::Oracle:
      return s.size() <= st.rank && st.oracle(s);
    case Backing::Binary:
      return st.binary.column_rank(s) == s.size();
    case Backing::Graph: {
      UnionFind uf(static_cast<std::size_t>(st.graph.vertex_count()));
      for (auto i : s.indices()) {
        const Edge& e = st.graph.edges()[i];
        if (!uf.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) return false;
      }
      return true;
    }
  }
  return false;
}

const std::vector<ElementSet>& Matroid::bases(std::size_t guard) const {
  const State& st = *state_;
  if (st.backing == Backing::BasisList) return st.given_bases;
  std::call_once(st.enumerated, [&] {
    if (size() > guard) {
      throw Error(ErrorKind::GroundTooLarge, name() + " has " + std::to_string(size()) +
                                                 " elements; enumeration guard is " + std::to_string(guard));
    }
    std::vector<ElementSet> out;
    enumerate(*this, st.rank, 0, ElementSet{}, out);
    std::sort(out.begin(), out.end());
    if (out.empty()) throw Error(ErrorKind::EmptyBasisSet, name() + " has no bases");
    st.cache = std::move(out);
  });
  return st.cache;
}

Matroid Matroid::renamed(std::string name) const {
  Matroid m = relabeled([](const std::string& l) { return l; });
  m.state_->name = std::move(name);
  return m;
}

Matroid Matroid::relabeled(const std::function<std::string(const std::string&)>& fn) const {
  const State& st = *state_;
  std::vector<std::string> ground;
  for (const auto& l : st.ground) ground.push_back(fn(l));
  auto s = make_state(st.name, std::move(ground));
  s->rank = st.rank;
  s->backing = st.backing;
  s->given_bases = st.given_bases;
  s->oracle = st.oracle;
  s->binary = st.binary;
  s->graph = st.graph.relabeled(fn);
  return Matroid(std::move(s));
}

std::optional<std::vector<ElementSet>> aligned_bases(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<std::size_t> to_a(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto j = a.find(b.ground()[i]);
    if (!j) return std::nullopt;
    to_a[i] = *j;
  }
  std::vector<ElementSet> out;
  out.reserve(b.bases().size());
  for (auto basis : b.bases()) {
    ElementSet s;
    for (auto i : basis.indices()) s = s.with(to_a[i]);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool same_bases(const Matroid& a, const Matroid& b) {
  auto aligned = aligned_bases(a, b);
  return aligned && *aligned == a.bases();
}

}  // namespace bgpc

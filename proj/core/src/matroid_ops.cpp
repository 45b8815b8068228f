#include "bgpc/matroid_ops.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "bgpc/error.hpp"

namespace bgpc {

namespace {

using Labels = std::vector<std::string>;

// Positions of `from`'s elements inside `to_ground` (or npos when absent).
constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

struct BasisSet {
  std::unordered_set<std::uint64_t> members;
  explicit BasisSet(const std::vector<ElementSet>& bases) {
    for (auto b : bases) members.insert(b.bits());
  }
  bool contains(ElementSet s) const { return members.count(s.bits()) != 0; }
};

ElementSet remap(ElementSet s, const std::vector<std::size_t>& pos) {
  ElementSet out;
  for (auto i : s.indices()) {
    if (pos[i] != kAbsent) out = out.with(pos[i]);
  }
  return out;
}

// Ground of the result of a sum: m1's labels not in `shared`, then m2's.
// Fills the position maps (kAbsent for shared elements).
Labels sum_ground(const Matroid& m1, const Matroid& m2, ElementSet shared1, std::vector<std::size_t>& pos1,
                  std::vector<std::size_t>& pos2) {
  Labels ground;
  pos1.assign(m1.size(), kAbsent);
  pos2.assign(m2.size(), kAbsent);
  for (std::size_t i = 0; i < m1.size(); ++i) {
    if (shared1.contains(i)) continue;
    pos1[i] = ground.size();
    ground.push_back(m1.ground()[i]);
  }
  for (std::size_t i = 0; i < m2.size(); ++i) {
    if (m1.find(m2.ground()[i])) continue;
    pos2[i] = ground.size();
    ground.push_back(m2.ground()[i]);
  }
  return ground;
}

// Labels shared by both ground sets, as a subset of m1's ground.
ElementSet shared_in_first(const Matroid& m1, const Matroid& m2) {
  ElementSet s;
  for (std::size_t i = 0; i < m1.size(); ++i) {
    if (m2.find(m1.ground()[i])) s = s.with(i);
  }
  return s;
}

void require_interface(const Matroid& m1, const Matroid& m2, const Labels& expected, const char* op) {
  ElementSet shared = shared_in_first(m1, m2);
  ElementSet want;
  for (const auto& l : expected) {
    auto i = m1.find(l);
    if (!i || !m2.find(l)) throw Error(ErrorKind::BadInterface, std::string(op) + ": '" + l + "' not in both operands");
    want = want.with(*i);
  }
  if (shared != want) {
    throw Error(ErrorKind::BadInterface, std::string(op) + ": operands " + m1.name() + " and " + m2.name() +
                                             " share elements outside the declared interface");
  }
}

std::string sum_name(const char* op, const Matroid& a, const Matroid& b) {
  return std::string(op) + "(" + a.name() + "," + b.name() + ")";
}

BinaryMatrix drop_column(const BinaryMatrix& a, std::size_t col) {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (j != col) keep.push_back(j);
  }
  return a.select_columns(keep);
}

BinaryMatrix contract_column(const BinaryMatrix& a, std::size_t col) {
  BinaryMatrix m = a;
  std::size_t pivot = m.rows();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.get(i, col)) {
      pivot = i;
      break;
    }
  }
  if (pivot == m.rows()) return drop_column(m, col);
  BinaryMatrix reduced(m.rows() - 1, m.cols());
  std::size_t out = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i == pivot) continue;
    std::uint64_t row = m.row_bits(i);
    if (m.get(i, col)) row ^= m.row_bits(pivot);
    for (std::size_t j = 0; j < m.cols(); ++j) reduced.set(out, j, (row >> j) & 1u);
    ++out;
  }
  return drop_column(reduced, col);
}

// Standard representation [I | A] relative to `basis`: row k belongs to the
// k-th element of the basis; column e has a 1 in row b iff B - b + e is a basis.
BinaryMatrix fundamental_rep(const Matroid& m, ElementSet basis) {
  auto rows = basis.indices();
  BinaryMatrix a(rows.size(), m.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (std::size_t e = 0; e < m.size(); ++e) {
      const bool entry = basis.contains(e) ? e == rows[k] : m.is_independent(basis.without(rows[k]).with(e));
      a.set(k, e, entry);
    }
  }
  return a;
}

Labels triangle_labels(const Triangle& d) { return Labels(d.begin(), d.end()); }

}  // namespace

std::vector<ElementSet> enumerate_bases(const Matroid& m, std::size_t guard) { return m.bases(guard); }

std::size_t rank_of(const Matroid& m, ElementSet x) {
  if (!x.subset_of(m.everything())) throw Error(ErrorKind::UnknownElement, "subset outside ground set of " + m.name());
  if (m.backing() == Backing::BasisList) {
    std::size_t best = 0;
    for (auto b : m.bases()) best = std::max(best, (b & x).size());
    return best;
  }
  if (const BinaryMatrix* a = m.binary()) return a->column_rank(x);
  ElementSet current;
  for (auto i : x.indices()) {
    if (m.is_independent(current.with(i))) current = current.with(i);
  }
  return current.size();
}

std::size_t rank_of(const Matroid& m, const std::vector<std::string>& labels) { return rank_of(m, m.set_of(labels)); }

bool is_loop(const Matroid& m, std::size_t e) { return !m.is_independent(ElementSet::single(e)); }

bool is_coloop(const Matroid& m, std::size_t e) { return rank_of(m, m.everything().without(e)) < m.rank(); }

Matroid dual(const Matroid& m) {
  const std::string name = m.name() + "*";
  if (const BinaryMatrix* a = m.binary()) {
    // Bring the representation to [I | C] on its pivot columns; the dual is
    // then represented by [C^T | I] on the same column positions.
    std::vector<std::size_t> pivots;
    BinaryMatrix r = *a;
    for (std::size_t j = 0, row = 0; j < r.cols() && row < r.rows(); ++j) {
      std::size_t p = row;
      while (p < r.rows() && !r.get(p, j)) ++p;
      if (p == r.rows()) continue;
      r.swap_rows(row, p);
      for (std::size_t i = 0; i < r.rows(); ++i) {
        if (i != row && r.get(i, j)) {
          for (std::size_t c = 0; c < r.cols(); ++c) r.set(i, c, r.get(i, c) != r.get(row, c));
        }
      }
      pivots.push_back(j);
      ++row;
    }
    ElementSet pivot_set;
    for (auto p : pivots) pivot_set = pivot_set.with(p);
    auto free_cols = (m.everything() - pivot_set).indices();
    BinaryMatrix d(free_cols.size(), m.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
      d.set(k, free_cols[k], true);
      for (std::size_t i = 0; i < pivots.size(); ++i) d.set(k, pivots[i], r.get(i, free_cols[k]));
    }
    return Matroid::from_binary(name, m.ground(), d);
  }
  std::vector<ElementSet> bases;
  for (auto b : m.bases()) bases.push_back(m.everything() - b);
  return Matroid::from_bases(name, m.ground(), std::move(bases));
}

Matroid delete_element(const Matroid& m, const std::string& e) {
  const std::size_t i = m.index(e);
  if (is_coloop(m, i)) throw Error(ErrorKind::EmptyBasisSet, "deleting coloop '" + e + "' of " + m.name());
  Labels ground = m.ground();
  ground.erase(ground.begin() + static_cast<std::ptrdiff_t>(i));
  const std::string name = m.name() + "\\" + e;
  if (const BinaryMatrix* a = m.binary()) return Matroid::from_binary(name, ground, drop_column(*a, i));
  if (const Graph* g = m.graph()) return Matroid::from_graph(name, g->without_edge(e));
  std::vector<std::size_t> pos(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) pos[k] = k < i ? k : (k == i ? kAbsent : k - 1);
  std::vector<ElementSet> bases;
  for (auto b : m.bases()) {
    if (!b.contains(i)) bases.push_back(remap(b, pos));
  }
  return Matroid::from_bases(name, ground, std::move(bases));
}

Matroid contract_element(const Matroid& m, const std::string& e) {
  const std::size_t i = m.index(e);
  if (is_loop(m, i)) throw Error(ErrorKind::EmptyBasisSet, "contracting loop '" + e + "' of " + m.name());
  Labels ground = m.ground();
  ground.erase(ground.begin() + static_cast<std::ptrdiff_t>(i));
  const std::string name = m.name() + "/" + e;
  if (const BinaryMatrix* a = m.binary()) return Matroid::from_binary(name, ground, contract_column(*a, i));
  if (const Graph* g = m.graph()) return Matroid::from_graph(name, g->contracted(e));
  std::vector<std::size_t> pos(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) pos[k] = k < i ? k : (k == i ? kAbsent : k - 1);
  std::vector<ElementSet> bases;
  for (auto b : m.bases()) {
    if (b.contains(i)) bases.push_back(remap(b, pos));
  }
  return Matroid::from_bases(name, ground, std::move(bases));
}

Matroid restrict_to(const Matroid& m, ElementSet keep, std::string name) {
  std::vector<std::size_t> pos(m.size(), kAbsent);
  Labels ground;
  for (auto i : keep.indices()) {
    pos[i] = ground.size();
    ground.push_back(m.ground()[i]);
  }
  if (const BinaryMatrix* a = m.binary()) return Matroid::from_binary(std::move(name), ground, a->select_columns(keep.indices()));
  const std::size_t r = rank_of(m, keep);
  std::vector<ElementSet> bases;
  for (auto b : m.bases()) {
    if ((b & keep).size() == r) bases.push_back(remap(b & keep, pos));
  }
  return Matroid::from_bases(std::move(name), ground, std::move(bases));
}

bool is_circuit(const Matroid& m, ElementSet c) {
  if (c.empty() || m.is_independent(c)) return false;
  for (auto e : c.indices()) {
    if (!m.is_independent(c.without(e))) return false;
  }
  return true;
}

bool is_cocircuit(const Matroid& m, ElementSet c) {
  if (c.empty()) return false;
  const ElementSet rest = m.everything() - c;
  if (rank_of(m, rest) == m.rank()) return false;
  for (auto e : c.indices()) {
    if (rank_of(m, rest.with(e)) != m.rank()) return false;
  }
  return true;
}

bool contains_cocircuit(const Matroid& m, ElementSet d) { return rank_of(m, m.everything() - d) < m.rank(); }

bool contains_circuit(const Matroid& m, ElementSet d) { return !m.is_independent(d); }

Matroid one_sum(const Matroid& m1, const Matroid& m2) {
  require_interface(m1, m2, {}, "1-sum");
  std::vector<std::size_t> pos1, pos2;
  Labels ground = sum_ground(m1, m2, ElementSet{}, pos1, pos2);
  std::vector<ElementSet> bases;
  for (auto b1 : m1.bases()) {
    const ElementSet left = remap(b1, pos1);
    for (auto b2 : m2.bases()) bases.push_back(left | remap(b2, pos2));
  }
  return Matroid::from_bases(sum_name("1sum", m1, m2), std::move(ground), std::move(bases));
}

Matroid two_sum(const Matroid& m1, const Matroid& m2, const std::string& glue) {
  require_interface(m1, m2, {glue}, "2-sum");
  const std::size_t g1 = m1.index(glue);
  const std::size_t g2 = m2.index(glue);
  if (is_loop(m1, g1) || is_coloop(m1, g1) || is_loop(m2, g2) || is_coloop(m2, g2)) {
    throw Error(ErrorKind::BadInterface, "2-sum glue '" + glue + "' is a loop or coloop of an operand");
  }
  std::vector<std::size_t> pos1, pos2;
  Labels ground = sum_ground(m1, m2, ElementSet::single(g1), pos1, pos2);
  std::vector<ElementSet> bases;
  for (auto b1 : m1.bases()) {
    const ElementSet left = remap(b1, pos1);
    for (auto b2 : m2.bases()) {
      if (b1.contains(g1) != b2.contains(g2)) bases.push_back(left | remap(b2, pos2));
    }
  }
  return Matroid::from_bases(sum_name("2sum", m1, m2), std::move(ground), std::move(bases));
}

Matroid delta_sum(const Matroid& m1, const Matroid& m2, const Triangle& d) {
  const Labels dl = triangle_labels(d);
  require_interface(m1, m2, dl, "delta-sum");
  const ElementSet d1 = m1.set_of(dl);
  const ElementSet d2 = m2.set_of(dl);
  if (d1.size() != 3) throw Error(ErrorKind::BadInterface, "delta-sum triangle needs three distinct elements");
  if (!is_circuit(m1, d1) || !is_circuit(m2, d2)) {
    throw Error(ErrorKind::BadInterface, "delta-sum triangle is not a circuit of both operands");
  }
  if (contains_cocircuit(m1, d1) || contains_cocircuit(m2, d2)) {
    throw Error(ErrorKind::BadInterface, "delta-sum triangle contains a cocircuit of an operand");
  }
  // Triangle membership as a 3-bit mask in the order of `d`.
  std::array<std::size_t, 3> i1{}, i2{};
  for (std::size_t k = 0; k < 3; ++k) {
    i1[k] = m1.index(d[k]);
    i2[k] = m2.index(d[k]);
  }
  auto mask_of = [](ElementSet b, const std::array<std::size_t, 3>& idx) {
    unsigned mask = 0;
    for (unsigned k = 0; k < 3; ++k) {
      if (b.contains(idx[k])) mask |= 1u << k;
    }
    return mask;
  };
  auto d_minus = [](const std::array<std::size_t, 3>& idx, unsigned skip) {
    ElementSet s;
    for (unsigned k = 0; k < 3; ++k) {
      if (k != skip) s = s.with(idx[k]);
    }
    return s;
  };
  const BasisSet set1(m1.bases());
  const BasisSet set2(m2.bases());
  std::vector<std::size_t> pos1, pos2;
  Labels ground = sum_ground(m1, m2, d1, pos1, pos2);

  std::array<std::vector<ElementSet>, 8> by_mask1, by_mask2;
  for (auto b : m1.bases()) by_mask1[mask_of(b, i1)].push_back(b);
  for (auto b : m2.bases()) by_mask2[mask_of(b, i2)].push_back(b);

  std::vector<ElementSet> bases;
  for (unsigned mk1 = 0; mk1 < 8; ++mk1) {
    for (unsigned mk2 = 0; mk2 < 8; ++mk2) {
      if (mk1 & mk2) continue;
      const int c1 = std::popcount(mk1);
      const int c2 = std::popcount(mk2);
      const bool plain = (c1 == 0 && c2 == 2) || (c1 == 2 && c2 == 0);
      const bool crossed = c1 == 1 && c2 == 1;
      if (!plain && !crossed) continue;
      const unsigned i = static_cast<unsigned>(std::countr_zero(mk1));
      const unsigned j = static_cast<unsigned>(std::countr_zero(mk2));
      for (auto b1 : by_mask1[mk1]) {
        if (crossed && !set1.contains(b1 ^ d_minus(i1, j))) continue;
        const ElementSet left = remap(b1, pos1);
        for (auto b2 : by_mask2[mk2]) {
          if (crossed && !set2.contains(b2 ^ d_minus(i2, i))) continue;
          bases.push_back(left | remap(b2, pos2));
        }
      }
    }
  }
  if (bases.empty()) throw Error(ErrorKind::EmptyBasisSet, "delta-sum produced no bases");
  return Matroid::from_bases(sum_name("dsum", m1, m2), std::move(ground), std::move(bases));
}

Matroid parallel_extension(const Matroid& m, const std::string& e, const std::string& copy) {
  const std::size_t i = m.index(e);
  if (m.find(copy)) throw Error(ErrorKind::InvalidMatroid, "label '" + copy + "' already present");
  Labels ground = m.ground();
  ground.push_back(copy);
  const std::string name = m.name();
  if (const BinaryMatrix* a = m.binary()) return Matroid::from_binary(name, ground, a->with_column(a->column_bits(i)));
  if (const Graph* g = m.graph()) {
    auto edges = g->edges();
    Edge extra = edges[i];
    extra.label = copy;
    edges.push_back(extra);
    return Matroid::from_graph(name, Graph(g->vertex_count(), std::move(edges)));
  }
  const std::size_t c = m.size();
  std::vector<ElementSet> bases;
  for (auto b : m.bases()) {
    bases.push_back(b);
    if (b.contains(i)) bases.push_back(b.without(i).with(c));
  }
  return Matroid::from_bases(name, std::move(ground), std::move(bases));
}

Matroid delta_sum_plus(const Matroid& m1, const Matroid& m2, const Triangle& d) {
  const std::string tag = "\x1f";
  Matroid plus = m1;
  for (const auto& di : d) plus = parallel_extension(plus, di, tag + di);
  Matroid sum = delta_sum(plus, m2, d);
  Matroid out = sum.relabeled([&](const std::string& l) { return l.rfind(tag, 0) == 0 ? l.substr(tag.size()) : l; });
  return out.renamed(sum_name("dsum+", m1, m2));
}

Matroid delta_y_exchange(const Matroid& m, const Triangle& d) {
  const ElementSet ds = m.set_of(triangle_labels(d));
  if (ds.size() != 3 || !is_circuit(m, ds) || contains_cocircuit(m, ds)) {
    throw Error(ErrorKind::BadTriangle, "{" + d[0] + "," + d[1] + "," + d[2] + "} is not a circuit free of cocircuits in " +
                                            m.name());
  }
  std::vector<ElementSet> bases;
  for (auto b : m.bases()) {
    const ElementSet in = b & ds;
    switch (in.size()) {
      case 0:
        for (auto k : ds.indices()) bases.push_back(b.with(k));
        break;
      case 1:
        bases.push_back(b ^ ds);
        break;
      default:
        bases.push_back(b | ds);
        break;
    }
  }
  return Matroid::from_bases("Y(" + m.name() + ")", m.ground(), std::move(bases));
}

Matroid y_delta_exchange(const Matroid& m, const Triangle& d) {
  Matroid out = dual(delta_y_exchange(dual(m), d));
  return out.renamed("D(" + m.name() + ")");
}

std::optional<BinaryMatrix> find_binary_rep(const Matroid& m) {
  if (const BinaryMatrix* a = m.binary()) return *a;
  const BinaryMatrix rep = fundamental_rep(m, m.bases().front());
  if (!same_bases(m, Matroid::from_binary(m.name(), m.ground(), rep))) return std::nullopt;
  return rep;
}

BinaryMatrix rep_with_cocircuit_row(const Matroid& m, ElementSet d) {
  if (!is_cocircuit(m, d)) throw Error(ErrorKind::NotACocircuit, "given set is not a cocircuit of " + m.name());
  const std::size_t first = d.indices().front();
  const ElementSet rest = d.without(first);
  // A basis avoiding D - d contains d, and the fundamental cocircuit of d
  // with respect to it is D.
  const auto& bases = m.bases();
  auto it = std::find_if(bases.begin(), bases.end(), [&](ElementSet b) { return (b & rest).empty(); });
  BinaryMatrix rep = fundamental_rep(m, *it);
  const auto rows = it->indices();
  const std::size_t row_d = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), first) - rows.begin());
  for (std::size_t k = row_d; k + 1 < rep.rows(); ++k) rep.swap_rows(k, k + 1);
  if (!same_bases(m, Matroid::from_binary(m.name(), m.ground(), rep))) {
    throw Error(ErrorKind::NotBinary, m.name() + " has no binary representation");
  }
  return rep;
}

std::optional<ElementSet> find_separation(const Matroid& m, int k, std::size_t guard) {
  const std::size_t n = m.size();
  if (n > guard) {
    throw Error(ErrorKind::GroundTooLarge, m.name() + " has " + std::to_string(n) + " elements; separation guard is " +
                                               std::to_string(guard));
  }
  if (n < 2 * static_cast<std::size_t>(k)) return std::nullopt;
  const ElementSet all = m.everything();
  const std::size_t r = m.rank();
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t bits = 1; bits + 1 < limit; ++bits) {
    const ElementSet x(bits);
    if (x.size() < static_cast<std::size_t>(k) || n - x.size() < static_cast<std::size_t>(k)) continue;
    const std::size_t lambda = rank_of(m, x) + rank_of(m, all - x) - r;
    if (lambda + 1 <= static_cast<std::size_t>(k)) return x;
  }
  return std::nullopt;
}

bool is_connected_matroid(const Matroid& m) { return !find_separation(m, 1); }

bool is_three_connected(const Matroid& m) { return !find_separation(m, 1) && !find_separation(m, 2); }

bool satisfies_basis_exchange(const Matroid& m, std::size_t guard) {
  if (m.size() > guard) {
    throw Error(ErrorKind::GroundTooLarge, m.name() + " exceeds the basis-exchange guard of " + std::to_string(guard));
  }
  const auto& bases = m.bases();
  const BasisSet set(bases);
  for (auto b1 : bases) {
    for (auto b2 : bases) {
      if (b1 == b2) continue;
      for (auto b : (b1 - b2).indices()) {
        bool found = false;
        for (auto c : (b2 - b1).indices()) {
          if (set.contains(b1.without(b).with(c))) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

}  // namespace bgpc

#include "bgpc/decompose.hpp"

#include <algorithm>
#include <functional>

#include "bgpc/error.hpp"
#include "bgpc/fixtures.hpp"
#include "bgpc/matroid_ops.hpp"

namespace bgpc {

namespace {

// r(S) for every subset S of a small ground set.
class RankTable {
 public:
  explicit RankTable(const Matroid& m) : n_(m.size()), rank_(std::size_t{1} << m.size(), 0) {
    for (auto b : m.bases()) {
      for (std::uint64_t s = 0; s < rank_.size(); ++s) {
        const auto k = static_cast<unsigned char>(std::popcount(s & b.bits()));
        if (k > rank_[s]) rank_[s] = k;
      }
    }
  }
  std::size_t operator()(std::uint64_t s) const { return rank_[s]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<unsigned char> rank_;
};

ElementSet complement(const Matroid& m, ElementSet x) { return m.everything() - x; }

}  // namespace

std::optional<Graph> find_graph(const Matroid& m) {
  const std::size_t n = m.size();
  const std::size_t r = m.rank();
  const auto bases = m.bases();
  const ElementSet basis = bases.front();
  const auto tree = basis.indices();
  // Fundamental sets, as positions into `tree`.
  std::vector<std::vector<std::size_t>> fund(n);
  for (std::size_t e = 0; e < n; ++e) {
    if (basis.contains(e)) continue;
    for (std::size_t k = 0; k < r; ++k) {
      const ElementSet swapped = basis.without(tree[k]).with(e);
      if (std::binary_search(bases.begin(), bases.end(), swapped)) fund[e].push_back(k);
    }
  }
  std::vector<std::pair<int, int>> ends(r);
  int used = 0;
  std::vector<int> degree;

  auto consistent = [&](std::size_t placed) {
    for (std::size_t e = 0; e < n; ++e) {
      if (basis.contains(e)) continue;
      degree.assign(static_cast<std::size_t>(used), 0);
      std::size_t count = 0;
      for (auto k : fund[e]) {
        if (k >= placed) continue;
        ++count;
        if (++degree[static_cast<std::size_t>(ends[k].first)] > 2) return false;
        if (++degree[static_cast<std::size_t>(ends[k].second)] > 2) return false;
      }
      if (count == fund[e].size() && count > 0) {
        std::size_t touched = 0;
        for (int d : degree) touched += d > 0;
        if (touched != count + 1) return false;
      }
    }
    return true;
  };

  auto build = [&]() -> std::optional<Graph> {
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < n; ++e) {
      const std::string& label = m.ground()[e];
      if (basis.contains(e)) {
        const auto k = static_cast<std::size_t>(std::find(tree.begin(), tree.end(), e) - tree.begin());
        edges.push_back({label, ends[k].first, ends[k].second});
        continue;
      }
      if (fund[e].empty()) {
        edges.push_back({label, 0, 0});
        continue;
      }
      degree.assign(static_cast<std::size_t>(used), 0);
      for (auto k : fund[e]) {
        ++degree[static_cast<std::size_t>(ends[k].first)];
        ++degree[static_cast<std::size_t>(ends[k].second)];
      }
      std::vector<int> tips;
      for (int v = 0; v < used; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) tips.push_back(v);
      }
      edges.push_back({label, tips[0], tips[1]});
    }
    Graph g(used, std::move(edges));
    if (!same_bases(Matroid::from_graph(m.name(), g), m)) return std::nullopt;
    return g;
  };

  std::function<std::optional<Graph>(std::size_t)> place = [&](std::size_t k) -> std::optional<Graph> {
    if (k == r) {
      if (used != static_cast<int>(r) + 1) return std::nullopt;
      return build();
    }
    UnionFind uf(static_cast<std::size_t>(used) + 2);
    for (std::size_t j = 0; j < k; ++j) uf.unite(static_cast<std::size_t>(ends[j].first), static_cast<std::size_t>(ends[j].second));
    std::vector<std::pair<int, int>> options;
    for (int u = 0; u < used; ++u) {
      for (int v = u + 1; v < used; ++v) {
        if (uf.find(static_cast<std::size_t>(u)) != uf.find(static_cast<std::size_t>(v))) options.emplace_back(u, v);
      }
      options.emplace_back(u, used);
    }
    options.emplace_back(used, used + 1);
    for (auto [u, v] : options) {
      const int before = used;
      used = std::max(used, v + 1);
      if (used <= static_cast<int>(r) + 1) {
        ends[k] = {u, v};
        if (consistent(k + 1)) {
          if (auto g = place(k + 1)) return g;
        }
      }
      used = before;
    }
    return std::nullopt;
  };

  if (r == 0) {
    std::vector<Edge> loops;
    for (const auto& l : m.ground()) loops.push_back({l, 0, 0});
    return Graph(1, std::move(loops));
  }
  return place(0);
}

std::optional<std::vector<std::size_t>> find_isomorphism(const Matroid& a, const Matroid& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.rank() != b.rank() || a.bases().size() != b.bases().size()) return std::nullopt;
  if (n > kAutoGuard + 4) throw Error(ErrorKind::TooLarge, "isomorphism search needs at most 16 elements");
  const RankTable ra(a), rb(b);
  auto count_in = [](const Matroid& m, std::size_t e) {
    std::size_t c = 0;
    for (auto s : m.bases()) c += s.contains(e);
    return c;
  };
  std::vector<std::size_t> sig_a(n), sig_b(n);
  for (std::size_t e = 0; e < n; ++e) {
    sig_a[e] = count_in(a, e);
    sig_b[e] = count_in(b, e);
  }
  std::vector<std::size_t> phi(n);
  std::uint64_t taken = 0;
  auto maps_bases = [&]() {
    std::vector<ElementSet> img;
    for (auto s : a.bases()) {
      std::uint64_t bits = 0;
      for (auto e : s.indices()) bits |= 1ull << phi[e];
      img.emplace_back(bits);
    }
    std::sort(img.begin(), img.end());
    return img == b.bases();
  };
  std::function<bool(std::size_t)> extend = [&](std::size_t k) {
    if (k == n) return maps_bases();
    for (std::size_t t = 0; t < n; ++t) {
      if (taken >> t & 1 || sig_a[k] != sig_b[t]) continue;
      phi[k] = t;
      bool ok = true;
      // Ranks of all subsets of size <= 3 through the new element.
      for (std::size_t i = 0; i <= k && ok; ++i) {
        for (std::size_t j = i; j <= k && ok; ++j) {
          const std::uint64_t sa = (1ull << k) | (1ull << i) | (1ull << j);
          const std::uint64_t sb = (1ull << t) | (1ull << phi[i]) | (1ull << phi[j]);
          ok = ra(sa) == rb(sb);
        }
      }
      if (!ok) continue;
      taken |= 1ull << t;
      if (extend(k + 1)) return true;
      taken &= ~(1ull << t);
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return phi;
}

namespace {

class Decomposer {
 public:
  Tree run(const Matroid& m) {
    if (auto x = find_separation(m, 1)) {
      return one_sum_node(run(restrict_to(m, *x, m.name())), run(restrict_to(m, complement(m, *x), m.name())));
    }
    const RankTable rank(m);
    if (auto x = find_separation(m, 2)) return two_sum(m, rank, *x);
    if (auto leaf = as_leaf(m)) return *leaf;
    if (auto t = delta(m, rank)) return *t;
    throw Error(ErrorKind::NotDecomposable, "no graphic, cographic, R10 or F7 decomposition of '" + m.name() + "'");
  }

 private:
  std::optional<Tree> as_leaf(const Matroid& m) {
    if (auto g = find_graph(m)) return graphic_leaf(*g);
    if (auto g = find_graph(dual(m))) return cographic_leaf(*g);
    for (bool ten : {true, false}) {
      const Matroid target = ten ? r10_matroid() : f7_matroid();
      if (m.size() != target.size()) continue;
      if (auto phi = find_isomorphism(m, target)) {
        std::vector<std::string> labels(m.size());
        for (std::size_t e = 0; e < m.size(); ++e) labels[(*phi)[e]] = m.ground()[e];
        return ten ? r10_leaf(labels) : f7_leaf(labels);
      }
    }
    return std::nullopt;
  }

  // The part of a 2-separation on side x, with a marker standing in for the rest.
  static Matroid side(const Matroid& m, const RankTable& rank, ElementSet x, const std::string& marker) {
    std::vector<std::string> ground = m.labels_of(x);
    ground.push_back(marker);
    const auto idx = x.indices();
    const std::size_t rx = rank(x.bits());
    std::vector<ElementSet> sets;
    for (auto b : m.bases()) {
      const ElementSet part = b & x;
      const std::size_t k = part.size();
      if (k != rx && k + 1 != rx) continue;
      std::uint64_t bits = 0;
      for (std::size_t i = 0; i < idx.size(); ++i) {
        if (part.contains(idx[i])) bits |= 1ull << i;
      }
      if (k + 1 == rx) bits |= 1ull << idx.size();
      sets.emplace_back(bits);
    }
    return Matroid::from_bases(m.name(), std::move(ground), std::move(sets));
  }

  Tree two_sum(const Matroid& m, const RankTable& rank, ElementSet x) {
    const std::string p = "_p" + std::to_string(++markers_);
    const Matroid m1 = side(m, rank, x, p);
    const Matroid m2 = side(m, rank, complement(m, x), p);
    if (!same_bases(bgpc::two_sum(m1, m2, p), m)) {
      throw Error(ErrorKind::NotDecomposable, "2-separation of '" + m.name() + "' does not split as a 2-sum");
    }
    return two_sum_node(run(m1), run(m2), p);
  }

  std::optional<Tree> delta(const Matroid& m, const RankTable& rank) {
    const auto rep = find_binary_rep(m);
    if (!rep) return std::nullopt;
    const std::size_t n = m.size();
    const std::size_t r = m.rank();
    for (std::uint64_t mask = 1; mask + 1 < (1ull << n); ++mask) {
      const ElementSet x(mask);
      const ElementSet y = complement(m, x);
      if (x.size() < 4 || y.size() < 4) continue;
      if (rank(x.bits()) + rank(y.bits()) != r + 2) continue;
      const auto common = shared_span(*rep, x, y);
      if (common.size() != 3) continue;
      const std::string tag = std::to_string(++markers_);
      const Triangle d{"_t" + tag + "a", "_t" + tag + "b", "_t" + tag + "c"};
      const Matroid mx = part(m, *rep, x, common, d);
      const Matroid my = part(m, *rep, y, common, d);
      for (const Matroid* mm : {&mx, &my}) {
        const ElementSet ds = mm->set_of({d.begin(), d.end()});
        if (!is_circuit(*mm, ds) || contains_cocircuit(*mm, ds)) goto next;
      }
      if (!same_bases(delta_sum(mx, my, d), m)) continue;
      for (bool x_graphic : {false, true}) {
        const Matroid& g_side = x_graphic ? mx : my;
        const Matroid& other = x_graphic ? my : mx;
        auto g = find_graph(g_side);
        if (!g || g->min_degree() < 3 || !is_three_connected(g_side)) continue;
        try {
          return delta_sum_node(run(other), graphic_leaf(*g), d);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NotDecomposable) throw;
        }
      }
    next:;
    }
    return std::nullopt;
  }

  // Nonzero vectors in the intersection of the column spans of x and y.
  static std::vector<std::uint64_t> shared_span(const BinaryMatrix& rep, ElementSet x, ElementSet y) {
    std::vector<std::uint64_t> basis;
    auto reduce = [](std::vector<std::uint64_t>& b, std::uint64_t v) {
      for (auto w : b) v = std::min(v, v ^ w);
      return v;
    };
    for (auto j : x.indices()) {
      const auto v = reduce(basis, rep.column_bits(j));
      if (v) {
        basis.push_back(v);
        std::sort(basis.rbegin(), basis.rend());
      }
    }
    std::vector<std::uint64_t> ybasis;
    for (auto j : y.indices()) {
      const auto v = reduce(ybasis, rep.column_bits(j));
      if (v) {
        ybasis.push_back(v);
        std::sort(ybasis.rbegin(), ybasis.rend());
      }
    }
    std::vector<std::uint64_t> out;
    if (basis.size() > 16) return out;
    for (std::uint64_t c = 1; c < (1ull << basis.size()); ++c) {
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (c >> i & 1) v ^= basis[i];
      }
      if (reduce(ybasis, v) == 0) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  static Matroid part(const Matroid& m, const BinaryMatrix& rep, ElementSet x, const std::vector<std::uint64_t>& extra,
                      const Triangle& d) {
    auto ground = m.labels_of(x);
    const auto idx = x.indices();
    BinaryMatrix a(rep.rows(), idx.size() + 3);
    for (std::size_t c = 0; c < idx.size() + 3; ++c) {
      const std::uint64_t col = c < idx.size() ? rep.column_bits(idx[c]) : extra[c - idx.size()];
      for (std::size_t i = 0; i < rep.rows(); ++i) a.set(i, c, col >> i & 1);
    }
    ground.insert(ground.end(), d.begin(), d.end());
    return Matroid::from_binary(m.name(), std::move(ground), a);
  }

  int markers_ = 0;
};

}  // namespace

Tree auto_decompose(const Matroid& m, std::size_t guard) {
  if (m.size() > guard) {
    throw Error(ErrorKind::GroundTooLarge, "automatic decomposition handles at most " + std::to_string(guard) + " elements");
  }
  return Decomposer().run(m);
}

}  // namespace bgpc

#include "bgpc/tu.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <random>

#include "bgpc/error.hpp"

namespace bgpc {

namespace {

// Bareiss on a copy; T must support exact division by previous pivots.
template <typename T>
T bareiss(std::vector<std::vector<T>> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  T sign(1);
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return T(0);
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::int64_t small_det(const IntMatrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  std::vector<std::vector<std::int64_t>> m(rows.size(), std::vector<std::int64_t>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) m[i][j] = a(rows[i], cols[j]);
  }
  return bareiss(std::move(m));
}

// Calls fn on every k-subset of {0..n-1} (as sorted index vectors) until fn returns false.
template <typename Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool sampled_tu(const IntMatrix& a) {
  std::mt19937_64 rng(0x5eed);
  const std::size_t top = std::min(a.rows(), a.cols());
  for (int trial = 0; trial < 4000; ++trial) {
    const std::size_t k = 1 + rng() % top;
    std::vector<std::size_t> rows(a.rows()), cols(a.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    rows.resize(k);
    cols.resize(k);
    const auto d = small_det(a, rows, cols);
    if (d < -1 || d > 1) return false;
  }
  return true;
}

}  // namespace

Rational det_exact(const RationalMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw Error(ErrorKind::InvalidMatroid, "determinant of a non-square matrix");
  }
  return bareiss(m);
}

Integer det_integer(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::InvalidMatroid, "determinant of a non-square matrix");
  std::vector<std::vector<Integer>> m(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  }
  return bareiss(std::move(m));
}

bool is_tu(const IntMatrix& a, std::size_t guard) {
  const std::size_t top = std::min(a.rows(), a.cols());
  if (top > guard) {
    throw Error(ErrorKind::MatrixTooLarge, "TU check limited to min(rows, cols) <= " + std::to_string(guard));
  }
  for (std::size_t k = 1; k <= top; ++k) {
    const bool ok = for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
      return for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
        const auto d = small_det(a, rows, cols);
        return d >= -1 && d <= 1;
      });
    });
    if (!ok) return false;
  }
  return true;
}

SignedMatrix camion_sign(const BinaryMatrix& b) {
  const std::size_t r = b.rows();
  const std::size_t n = b.cols();
  const std::size_t nodes = r + n;
  // Bipartite support graph: node i < r is row i, node r + j is column j.
  SignedMatrix out(r, n);
  std::vector<std::vector<std::size_t>> adj(nodes);
  std::vector<std::pair<std::size_t, std::size_t>> pending;

  std::vector<bool> seen(nodes, false);
  for (std::size_t root = 0; root < nodes; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < nodes; ++w) {
        const bool row_v = v < r;
        if (row_v == (w < r)) continue;
        const std::size_t i = row_v ? v : w;
        const std::size_t j = (row_v ? w : v) - r;
        if (!b.get(i, j) || seen[w]) continue;
        seen[w] = true;
        out(i, j) = 1;
        adj[v].push_back(w);
        adj[w].push_back(v);
        queue.push_back(w);
      }
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (b.get(i, j) && out(i, j) == 0) pending.emplace_back(i, j);
    }
  }

  auto bfs = [&](std::size_t from, std::vector<std::size_t>& parent) {
    std::vector<std::size_t> dist(nodes, std::numeric_limits<std::size_t>::max());
    parent.assign(nodes, nodes);
    dist[from] = 0;
    std::deque<std::size_t> queue{from};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (auto w : adj[v]) {
        if (dist[w] != std::numeric_limits<std::size_t>::max()) continue;
        dist[w] = dist[v] + 1;
        parent[w] = v;
        queue.push_back(w);
      }
    }
    return dist;
  };
  auto entry = [&](std::size_t v, std::size_t w) { return v < r ? out(v, w - r) : out(w, v - r); };

  // Each step signs the pending entry whose endpoints are closest in the signed
  // part; the shortest path then closes a chordless cycle.
  while (!pending.empty()) {
    std::size_t best = 0;
    std::size_t best_dist = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> best_parent, parent;
    for (std::size_t k = 0; k < pending.size(); ++k) {
      const auto dist = bfs(pending[k].first, parent);
      const std::size_t d = dist[r + pending[k].second];
      if (d < best_dist) {
        best_dist = d;
        best = k;
        best_parent = parent;
      }
    }
    const auto [i, j] = pending[best];
    int sum = 0;
    for (std::size_t v = r + j; v != i; v = best_parent[v]) sum += entry(v, best_parent[v]);
    // Choose the sign that makes the cycle total divisible by 4.
    const int sign = ((sum + 1) % 4 + 4) % 4 == 0 ? 1 : -1;
    out(i, j) = sign;
    adj[i].push_back(r + j);
    adj[r + j].push_back(i);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
  }

  const bool tu = std::min(r, n) <= kTuGuard ? is_tu(out) : sampled_tu(out);
  if (!tu) throw Error(ErrorKind::NotRegular, "no totally unimodular signing exists for this support");
  return out;
}

WeightedGram weighted_gram(const IntMatrix& a, const std::vector<Rational>& z) {
  if (z.size() != a.cols()) throw Error(ErrorKind::InvalidMatroid, "weight vector length differs from column count");
  WeightedGram g{RationalMatrix(a.rows(), std::vector<Rational>(a.rows())), a, z};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = i; k < a.rows(); ++k) {
      Rational s = 0;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a(i, j) != 0 && a(k, j) != 0) s += a(i, j) * a(k, j) * z[j];
      }
      g.l[i][k] = s;
      g.l[k][i] = s;
    }
  }
  return g;
}

StarMesh star_mesh(const IntMatrix& a, std::size_t r) {
  if (a.row_is_zero(r)) throw Error(ErrorKind::ZeroRow, "row " + std::to_string(r) + " is zero");
  StarMesh s;
  s.row = r;
  for (std::size_t j = 0; j < a.cols(); ++j) (a(r, j) == 0 ? s.n0 : s.n1).push_back(j);
  for (std::size_t p = 0; p < s.n1.size(); ++p) {
    for (std::size_t q = p + 1; q < s.n1.size(); ++q) s.pairs.emplace_back(s.n1[p], s.n1[q]);
  }
  s.reduced = IntMatrix(a.rows() - 1, s.n0.size() + s.pairs.size());
  for (std::size_t i = 0, out = 0; i < a.rows(); ++i) {
    if (i == r) continue;
    std::size_t c = 0;
    for (auto j : s.n0) s.reduced(out, c++) = a(i, j);
    for (auto [j, k] : s.pairs) s.reduced(out, c++) = a(i, j) - a(r, j) * a(r, k) * a(i, k);
    ++out;
  }
  return s;
}

StarMeshWeights star_mesh_weights(const StarMesh& s, const std::vector<Rational>& z) {
  StarMeshWeights w;
  w.y = 0;
  for (auto j : s.n1) w.y += z[j];
  for (auto j : s.n0) w.z.push_back(z[j]);
  for (auto [j, k] : s.pairs) w.z.push_back(z[j] * z[k] / w.y);
  return w;
}

}  // namespace bgpc

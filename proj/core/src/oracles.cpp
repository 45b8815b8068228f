#include "bgpc/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bgpc/error.hpp"
#include "bgpc/tu.hpp"

namespace bgpc {

Rational brute_bgp_eval(const Matroid& m, const Assignment& point, std::size_t guard) {
  std::vector<Rational> value(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto it = point.find(m.ground()[i]);
    if (it == point.end()) throw Error(ErrorKind::Parse, "no value for element '" + m.ground()[i] + "'");
    value[i] = it->second;
  }
  Rational sum = 0;
  for (auto b : m.bases(guard)) {
    Rational term = 1;
    for (auto i : b.indices()) term *= value[i];
    sum += term;
  }
  return sum;
}

namespace {

std::vector<Rational> weights_of(const Matroid& m, const Assignment& w) {
  std::vector<Rational> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto it = w.find(m.ground()[i]);
    if (it == w.end()) throw Error(ErrorKind::Parse, "no weight for element '" + m.ground()[i] + "'");
    out[i] = it->second;
  }
  return out;
}

}  // namespace

WeightedBasis greedy_max_basis(const Matroid& m, const Assignment& weights) {
  const auto w = weights_of(m, weights);
  std::vector<std::size_t> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });
  WeightedBasis best{ElementSet{}, 0};
  for (auto i : order) {
    if (best.basis.size() == m.rank()) break;
    if (m.is_independent(best.basis.with(i))) {
      best.basis = best.basis.with(i);
      best.weight += w[i];
    }
  }
  return best;
}

WeightedBasis exhaustive_max_basis(const Matroid& m, const Assignment& weights) {
  const auto w = weights_of(m, weights);
  bool first = true;
  WeightedBasis best{ElementSet{}, 0};
  for (auto b : m.bases()) {
    Rational s = 0;
    for (auto i : b.indices()) s += w[i];
    if (first || s > best.weight) best = {b, s};
    first = false;
  }
  return best;
}

Integer kirchhoff_count(const Graph& g) {
  if (!g.is_connected()) throw Error(ErrorKind::DisconnectedGraph, "Kirchhoff count of a disconnected graph");
  const int n = g.vertex_count();
  if (n <= 1) return 1;
  RationalMatrix lap(static_cast<std::size_t>(n - 1), std::vector<Rational>(static_cast<std::size_t>(n - 1), 0));
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    const auto last = static_cast<std::size_t>(n - 1);
    if (u < last) lap[u][u] += 1;
    if (v < last) lap[v][v] += 1;
    if (u < last && v < last) {
      lap[u][v] -= 1;
      lap[v][u] -= 1;
    }
  }
  const Rational d = det_exact(lap);
  return d.get_num();
}

Assignment random_positive_point(const std::vector<std::string>& vars, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(1, 10000);
  Assignment p;
  for (const auto& v : vars) {
    Rational q(dist(rng), dist(rng));
    q.canonicalize();
    p[v] = q;
  }
  return p;
}

Assignment random_int_point(const std::vector<std::string>& vars, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Assignment p;
  for (const auto& v : vars) p[v] = dist(rng);
  return p;
}

Assignment constant_point(const std::vector<std::string>& vars, const Rational& value) {
  Assignment p;
  for (const auto& v : vars) p[v] = value;
  return p;
}

Verdict identity_test(const std::string& name, const Circuit& c, const Matroid& m, std::size_t trials,
                      std::uint64_t seed) {
  Verdict v{name, true, trials, seed, {}, 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const Assignment p = random_positive_point(m.ground(), rng);
    const Rational expected = brute_bgp_eval(m, p);
    Rational got;
    try {
      got = eval_rational(c, p);
    } catch (const Error& e) {
      v.pass = false;
      v.point = p;
      v.expected = expected;
      v.note = e.what();
      return v;
    }
    if (got != expected) {
      v.pass = false;
      v.point = p;
      v.expected = expected;
      v.got = got;
      return v;
    }
  }
  return v;
}

std::string format_point(const Assignment& p) {
  std::string out;
  for (const auto& [var, value] : p) {
    if (!out.empty()) out += ',';
    out += var + "=" + to_string(value);
  }
  return out;
}

std::string format_verdict(const Verdict& v) {
  std::ostringstream out;
  if (v.pass) {
    out << "PASS " << v.name << " trials=" << v.trials << " seed=" << v.seed;
  } else {
    out << "FAIL " << v.name << " point=" << format_point(v.point) << " expected=" << to_fraction_string(v.expected)
        << " got=" << (v.note.empty() ? to_fraction_string(v.got) : "error(" + v.note + ")");
  }
  return out.str();
}

}  // namespace bgpc

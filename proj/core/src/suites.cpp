#include "bgpc/suites.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "bgpc/decompose.hpp"
#include "bgpc/error.hpp"
#include "bgpc/fixtures.hpp"
#include "bgpc/matroid_io.hpp"
#include "bgpc/matroid_ops.hpp"
#include "bgpc/oracles.hpp"
#include "bgpc/relu.hpp"
#include "bgpc/symbolic.hpp"
#include "bgpc/synth.hpp"
#include "bgpc/tropical.hpp"
#include "bgpc/tu.hpp"

namespace bgpc {

namespace {

void expect(CriterionResult& r, bool ok, const std::string& what) {
  if (ok) return;
  r.pass = false;
  r.lines.push_back("FAIL " + what);
}

std::string str(const Rational& q) { return to_string(q); }

std::vector<std::vector<std::string>> basis_labels(const Matroid& m) {
  std::vector<std::vector<std::string>> out;
  for (auto b : m.bases()) out.push_back(m.labels_of(b));
  return out;
}

Assignment reciprocal(const Assignment& p) {
  Assignment out;
  for (const auto& [k, v] : p) out[k] = 1 / v;
  return out;
}

Rational product(const Assignment& p) {
  Rational out = 1;
  for (const auto& [k, v] : p) out *= v;
  return out;
}

// [I | A] with respect to the first basis, as a binary matrix, plus the basis columns.
std::pair<BinaryMatrix, std::vector<std::size_t>> standard_rep(const Matroid& m) {
  const ElementSet basis = m.bases().front();
  const auto rows = basis.indices();
  BinaryMatrix a(rows.size(), m.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (std::size_t e = 0; e < m.size(); ++e) {
      a.set(k, e, basis.contains(e) ? e == rows[k] : m.is_independent(basis.without(rows[k]).with(e)));
    }
  }
  return {a, rows};
}

// TU check for a signed [D | A] with D a signed identity on `unit` columns:
// only A needs the exhaustive test.
bool tu_with_unit_columns(const IntMatrix& a, const std::vector<std::size_t>& unit) {
  std::vector<std::size_t> rest, all_rows;
  for (std::size_t i = 0; i < a.rows(); ++i) all_rows.push_back(i);
  for (std::size_t k = 0; k < unit.size(); ++k) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const int v = a(i, unit[k]);
      if (i == k ? (v != 1 && v != -1) : v != 0) return false;
    }
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (std::find(unit.begin(), unit.end(), j) == unit.end()) rest.push_back(j);
  }
  if (rest.empty()) return true;
  return is_tu(a.submatrix(all_rows, rest));
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); }
};

void r10_golden(CriterionResult& r, const SuiteOptions&) {
  const Matroid m = r10_matroid();
  const Circuit naive = naive_from_bases(basis_labels(m));
  const Rational at_ones = eval_rational(naive, constant_point(m.ground(), 1));
  const Rational brute = brute_bgp_eval(m, constant_point(m.ground(), 1));
  const auto synthesized = synth(r10_leaf());
  expect(r, m.bases().size() == 162, "r10 basis count " + std::to_string(m.bases().size()) + " != 162");
  expect(r, naive.size() == 809, "naive r10 size " + std::to_string(naive.size()) + " != 809");
  expect(r, at_ones == 162, "naive r10 at all-ones " + str(at_ones) + " != 162");
  expect(r, brute == 162, "brute-force r10 at all-ones " + str(brute) + " != 162");
  expect(r, synthesized.size == 809, "synth(r10) size " + std::to_string(synthesized.size) + " != 809");
  r.summary = "size=" + std::to_string(naive.size()) + " value=" + str(at_ones);
}

void graphic_suite(CriterionResult& r, const SuiteOptions&) {
  std::ostringstream summary;
  for (int l = 3; l <= 7; ++l) {
    const Graph g = complete_graph(l);
    const auto rep = synth(graphic_leaf(g));
    const Rational value = eval_rational(rep.circuit, constant_point(g.labels(), 1));
    Integer cayley = 1;
    for (int k = 0; k < l - 2; ++k) cayley *= l;
    const Integer kirchhoff = kirchhoff_count(g);
    const auto enumerated = Matroid::from_graph("K", g).bases().size();
    const std::size_t n = g.edge_count();
    const std::string tag = "K" + std::to_string(l);
    expect(r, value == Rational(cayley), tag + " value " + str(value) + " != " + cayley.get_str());
    expect(r, kirchhoff == cayley, tag + " kirchhoff " + kirchhoff.get_str() + " != " + cayley.get_str());
    expect(r, Integer(static_cast<unsigned long>(enumerated)) == cayley, tag + " enumeration " + std::to_string(enumerated));
    expect(r, 2 * rep.size <= n * n * n, tag + " size " + std::to_string(rep.size) + " > n^3/2");
    r.lines.push_back(tag + " value=" + str(value) + " size=" + std::to_string(rep.size) + " half_bound=" +
                      std::to_string(n * n * n / 2));
    summary << (l > 3 ? "," : "") << tag << ":" << rep.size;
  }
  r.summary = "sizes " + summary.str();
}

void identity_suite(CriterionResult& r, const SuiteOptions& opts) {
  const std::size_t trials = opts.trials.value_or(50);
  const std::uint64_t seed = opts.seed + 3;
  std::size_t passed = 0;
  const auto names = suite_fixture_names();
  for (const auto& name : names) {
    const Fixture f = make_fixture(name);
    const Verdict v = identity_test(name, synth(f.tree).circuit, f.matroid, trials, seed);
    r.lines.push_back(format_verdict(v));
    if (v.pass) {
      ++passed;
    } else {
      r.pass = false;
    }
  }
  r.summary = std::to_string(passed) + "/" + std::to_string(names.size()) + " fixtures, " + std::to_string(trials) + " points";
}

std::string check_ledger(const SynthesisReport& rep) {
  long long total = 0;
  for (const auto& e : rep.ledger) {
    total += e.added;
    const auto n = static_cast<long long>(e.elements);
    bool ok = true;
    if (e.rule == "1-sum") ok = e.added == 1;
    if (e.rule == "2-sum") ok = e.added == 2;
    if (e.rule == "2-sum-parallel") ok = e.added == 0;
    if (e.rule == "dual-wrap") ok = e.added == 2 * n;
    if (e.rule == "star-mesh") ok = e.limit && e.added <= *e.limit && *e.limit == star_mesh_step_limit(e.vertices);
    if (e.rule == "naive") ok = e.limit && e.added == *e.limit;
    if (e.rule == "parallel-merge") ok = e.added == 1;
    if (e.rule == "zero-elimination") ok = e.added <= 0;
    if (e.rule == "coloop-product") ok = e.added == n - 1;
    if (!ok) return "rule " + e.rule + " at " + e.node + " added " + std::to_string(e.added);
  }
  if (total != static_cast<long long>(rep.size)) {
    return "ledger sums to " + std::to_string(total) + ", circuit size " + std::to_string(rep.size);
  }
  return {};
}

void size_suite(CriterionResult& r, const SuiteOptions&) {
  auto names = suite_fixture_names();
  names.push_back("k7");
  names.push_back("k7-co");
  std::size_t worst_num = 0, worst_den = 1;
  std::string worst;
  for (const auto& name : names) {
    const auto rep = synth(make_fixture(name).tree);
    const std::string problem = check_ledger(rep);
    expect(r, problem.empty(), name + ": " + problem);
    expect(r, rep.size <= rep.bound, name + ": size " + std::to_string(rep.size) + " > n^3");
    const bool graphic = name[0] == 'k' && name.find('-') == std::string::npos;
    if (graphic) expect(r, 2 * rep.size <= rep.bound, name + ": graphic size above n^3/2");
    r.lines.push_back(name + " n=" + std::to_string(rep.elements) + " size=" + std::to_string(rep.size) +
                      " bound=" + std::to_string(rep.bound) + " ledger=" + std::to_string(rep.ledger.size()));
    if (rep.size * worst_den > worst_num * rep.bound) {
      worst_num = rep.size;
      worst_den = rep.bound;
      worst = name;
    }
  }
  std::ostringstream s;
  s << names.size() << " circuits, largest size/n^3 " << std::fixed << std::setprecision(3)
    << static_cast<double>(worst_num) / static_cast<double>(worst_den) << " (" << worst << ")";
  r.summary = s.str();
}

// The integer weight vectors shared by the tropical and ReLU suites.
std::vector<Assignment> weight_vectors(const SuiteOptions& opts, std::size_t fixture, const std::vector<std::string>& ground) {
  std::mt19937_64 rng(opts.seed + 5 + 1000 * fixture);
  std::vector<Assignment> out;
  for (std::size_t k = 0; k < opts.trials.value_or(100); ++k) out.push_back(random_int_point(ground, rng, -50, 50));
  return out;
}

void tropical_suite(CriterionResult& r, const SuiteOptions& opts) {
  const auto names = suite_fixture_names();
  std::size_t points = 0;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const Fixture f = make_fixture(names[i]);
    const TropicalCircuit t = tropicalize(synth(f.tree).circuit);
    bool ok = true;
    for (const auto& w : weight_vectors(opts, i, f.matroid.ground())) {
      ++points;
      const Rational got = eval_tropical(t, w);
      const Rational greedy = greedy_max_basis(f.matroid, w).weight;
      const Rational best = exhaustive_max_basis(f.matroid, w).weight;
      if (got != greedy || greedy != best) {
        r.lines.push_back("FAIL " + names[i] + " point=" + format_point(w) + " expected=" + str(greedy) + " got=" + str(got) +
                          " exhaustive=" + str(best));
        ok = false;
        break;
      }
    }
    r.pass = r.pass && ok;
    if (ok) r.lines.push_back("PASS " + names[i] + " trials=" + std::to_string(opts.trials.value_or(100)) + " seed=" +
                              std::to_string(opts.seed + 5 + 1000 * i));
  }
  r.summary = std::to_string(names.size()) + " fixtures, " + std::to_string(points) + " weight vectors";
}

void relu_suite(CriterionResult& r, const SuiteOptions& opts) {
  const auto names = suite_fixture_names();
  std::size_t neurons = 0, gates = 0;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const Fixture f = make_fixture(names[i]);
    const TropicalCircuit t = tropicalize(synth(f.tree).circuit);
    const ReluNetwork net = lower_to_relu(t);
    neurons += net.size();
    gates += t.size();
    expect(r, net.size() <= 3 * t.size(), names[i] + ": " + std::to_string(net.size()) + " neurons > 3*" + std::to_string(t.size()));
    expect(r, net.unit_weights(), names[i] + ": weight outside {0,+-1}");
    bool ok = true;
    for (const auto& w : weight_vectors(opts, i, f.matroid.ground())) {
      const Rational want = eval_tropical(t, w);
      const Rational got = net.forward(w);
      if (got != want) {
        r.lines.push_back("FAIL " + names[i] + " point=" + format_point(w) + " expected=" + str(want) + " got=" + str(got));
        ok = false;
        break;
      }
    }
    r.pass = r.pass && ok;
    if (ok) {
      r.lines.push_back("PASS " + names[i] + " neurons=" + std::to_string(net.size()) + " size=" + std::to_string(t.size()));
    }
  }
  r.summary = std::to_string(neurons) + " neurons for " + std::to_string(gates) + " tropical gates";
}

void star_mesh_suite(CriterionResult& r, const SuiteOptions& opts) {
  std::mt19937_64 rng(opts.seed + 7);
  const std::size_t count = opts.trials.value_or(100);
  std::size_t nonzero = 0;
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t rows = 1 + rng() % 5;
    const std::size_t cols = 1 + rng() % 8;
    IntMatrix a(rows, cols);
    do {
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = static_cast<int>(rng() % 3) - 1;
      }
    } while (a.row_is_zero(rows - 1));
    std::vector<std::string> names;
    for (std::size_t j = 0; j < cols; ++j) names.push_back("z" + std::to_string(j));
    const Assignment point = random_positive_point(names, rng);
    std::vector<Rational> z;
    for (const auto& n : names) z.push_back(point.at(n));
    const StarMesh s = star_mesh(a, rows - 1);
    const StarMeshWeights w = star_mesh_weights(s, z);
    const Rational lhs = det_exact(weighted_gram(a, z).l);
    const Rational rhs = w.y * det_exact(weighted_gram(s.reduced, w.z).l);
    nonzero += lhs != 0;
    bool in_range = true;
    for (std::size_t i = 0; i < s.reduced.rows(); ++i) {
      for (std::size_t j = 0; j < s.reduced.cols(); ++j) in_range = in_range && std::abs(s.reduced(i, j)) <= 2;
    }
    expect(r, lhs == rhs, "matrix " + std::to_string(t) + " (" + std::to_string(rows) + "x" + std::to_string(cols) +
                              "): det(AXA^T)=" + str(lhs) + " y*det(A'X'A'^T)=" + str(rhs));
    expect(r, in_range, "matrix " + std::to_string(t) + ": reduced entry outside [-2,2]");
  }
  r.summary = std::to_string(count) + " matrices (" + std::to_string(nonzero) + " with nonzero determinant) seed=" +
              std::to_string(opts.seed + 7);
}

void maurer_suite(CriterionResult& r, const SuiteOptions&) {
  std::vector<std::pair<std::string, Matroid>> cases;
  for (int l = 3; l <= 6; ++l) cases.emplace_back("K" + std::to_string(l), Matroid::from_graph("K", complete_graph(l)));
  cases.emplace_back("R10", r10_matroid());
  for (const auto& [name, m] : cases) {
    const BinaryMatrix rep = name == "R10" ? standard_form(matrix_a10()) : graph_binary_rep(*m.graph());
    const SignedMatrix a = camion_sign(rep);
    const Rational det = det_exact(weighted_gram(a, std::vector<Rational>(a.cols(), Rational(1))).l);
    const auto count = m.bases().size();
    expect(r, det == Rational(static_cast<unsigned long>(count)), name + ": det(L)=" + str(det) + " bases=" + std::to_string(count));
    r.lines.push_back(name + " det=" + str(det) + " bases=" + std::to_string(count));
  }
  r.summary = "K3..K6 and R10";
}

void signing_suite(CriterionResult& r, const SuiteOptions&) {
  std::size_t signed_ok = 0, total = 0;
  for (const auto& name : suite_fixture_names()) {
    if (name == "f7") continue;
    ++total;
    const Matroid m = make_fixture(name).matroid;
    const auto [rep, unit] = standard_rep(m);
    try {
      const SignedMatrix a = camion_sign(rep);
      const bool same_support = a.support().rows() == rep.rows() && [&] {
        for (std::size_t i = 0; i < rep.rows(); ++i) {
          if (a.support().row_bits(i) != rep.row_bits(i)) return false;
        }
        return true;
      }();
      const bool tu = tu_with_unit_columns(a, unit);
      expect(r, same_support && tu, name + ": signing " + (same_support ? "" : "changes the support ") + (tu ? "" : "is not TU"));
      signed_ok += same_support && tu;
    } catch (const Error& e) {
      expect(r, false, name + ": " + e.what());
    }
  }
  bool f7_rejected = false;
  try {
    camion_sign(standard_form(matrix_a7()));
  } catch (const Error& e) {
    f7_rejected = e.kind() == ErrorKind::NotRegular;
  }
  expect(r, f7_rejected, "F7 representation was signed without NotRegular");
  r.summary = std::to_string(signed_ok) + "/" + std::to_string(total) + " regular fixtures TU, F7 " +
              (f7_rejected ? "NotRegular" : "accepted");
}

// K4 on the triangle `d` (edges 12, 13, 23) with apex edges labelled from `spokes` (14, 24, 34).
Graph k4_on(const Triangle& d, const std::array<std::string, 3>& spokes) {
  return complete_graph(4, {d[0], d[1], spokes[0], d[2], spokes[1], spokes[2]});
}

void structure_suite(CriterionResult& r, const SuiteOptions& opts) {
  const Triangle d{complete_edge_label(1, 2), complete_edge_label(1, 3), complete_edge_label(2, 3)};
  const Matroid k4 = Matroid::from_graph("K4", complete_graph(4));
  const Matroid k5 = Matroid::from_graph("K5", complete_graph(5));
  const Matroid w4 = Matroid::from_graph("W4", wheel_graph(4, {d[0], "r2", "r3", "r4", d[1], d[2], "s3", "s4"}));
  const Matroid other_k4 = Matroid::from_graph("K4", k4_on(d, {"q1", "q2", "q3"}));
  const Matroid other_k5 =
      Matroid::from_graph("K5", complete_graph(5, {d[0], d[1], "q1", "q2", d[2], "q3", "q4", "q5", "q6", "q7"}));

  // Delta-plus followed by deleting the copies gives the delta-sum.
  std::size_t checks = 0;
  for (const auto& [m1, m2] : {std::pair{k4, other_k4}, std::pair{k5, other_k4}, std::pair{w4, other_k5}}) {
    Matroid plus = delta_sum_plus(m1, m2, d);
    for (const auto& di : d) plus = delete_element(plus, di);
    expect(r, same_bases(plus, delta_sum(m1, m2, d)), "delta-plus minus copies differs from delta-sum for " + m1.name());
    ++checks;
  }
  // Delta-Y exchange against a delta-sum with K4, y_i opposite d_i.
  for (const Matroid& m : {k4, k5}) {
    const Matroid y = delta_y_exchange(m, d);
    const Matroid sum = delta_sum(m, Matroid::from_graph("K4", k4_on(d, {"y3", "y2", "y1"})), d);
    const Matroid mapped = sum.relabeled([&](const std::string& l) {
      if (l == "y1") return d[0];
      if (l == "y2") return d[1];
      if (l == "y3") return d[2];
      return l;
    });
    expect(r, same_bases(y, mapped), "delta-Y of " + m.name() + " differs from its delta-sum with K4");
    ++checks;
  }
  // Vertex stars of the glued complete graph stay cocircuits.
  for (const Matroid& m1 : {k4, w4}) {
    for (int l : {4, 5}) {
      std::vector<std::string> labels;
      std::vector<std::string> star;
      for (int i = 1; i <= l; ++i) {
        for (int j = i + 1; j <= l; ++j) {
          std::string label = "v" + std::to_string(i) + "_" + std::to_string(j);
          if (i <= 3 && j <= 3) label = d[static_cast<std::size_t>(i + j - 3)];
          if (j == l) star.push_back(label);
          labels.push_back(label);
        }
      }
      const Matroid m = delta_sum_plus(m1, Matroid::from_graph("K", complete_graph(l, labels)), d);
      expect(r, is_cocircuit(m, m.set_of(star)), "star of v" + std::to_string(l) + " is not a cocircuit of " + m1.name() +
                                                     " (+)D+ K" + std::to_string(l));
      ++checks;
    }
  }
  // Dualization identity, oracle level for every fixture, circuit level for graphs.
  std::mt19937_64 rng(opts.seed + 10);
  const std::size_t points = opts.trials.value_or(10);
  for (const auto& name : suite_fixture_names()) {
    const Fixture f = make_fixture(name);
    const Matroid dm = dual(f.matroid);
    std::optional<Circuit> co;
    if (f.tree->kind == NodeKind::Graphic) co = synth_cographic(f.tree->graph);
    for (std::size_t k = 0; k < points; ++k) {
      const Assignment p = random_positive_point(f.matroid.ground(), rng);
      const Rational lhs = brute_bgp_eval(dm, p);
      const Rational rhs = product(p) * brute_bgp_eval(f.matroid, reciprocal(p));
      expect(r, lhs == rhs, name + ": dual identity fails at " + format_point(p));
      if (co) expect(r, eval_rational(*co, p) == lhs, name + ": cographic circuit differs from dual at " + format_point(p));
    }
    ++checks;
  }
  r.summary = std::to_string(checks) + " structural checks";
}

struct CriterionDef {
  const char* name;
  double limit;
  void (*run)(CriterionResult&, const SuiteOptions&);
};

const CriterionDef kCriteria[] = {
    {"r10-golden", 1, r10_golden},       {"graphic", 5, graphic_suite},     {"identity", 30, identity_suite},
    {"size-bound", 5, size_suite},       {"tropical", 30, tropical_suite},  {"relu", 30, relu_suite},
    {"star-mesh", 10, star_mesh_suite},  {"maurer", 10, maurer_suite},      {"signing", 10, signing_suite},
    {"structure", 20, structure_suite},
};

}  // namespace

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "core") return {1, 2, 3, 4, 10};
  if (suite == "tropical") return {5, 6};
  if (suite == "matrices") return {7, 8, 9};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  throw Error(ErrorKind::Usage, "unknown suite '" + suite + "' (core, tropical, matrices, all)");
}

CriterionResult run_criterion(int id, const SuiteOptions& opts) {
  if (id < 1 || id > 10) throw Error(ErrorKind::Usage, "criteria are numbered 1 to 10");
  const CriterionDef& def = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = def.name;
  r.limit = def.limit;
  const Timer timer;
  try {
    def.run(r, opts);
  } catch (const std::exception& e) {
    r.pass = false;
    r.lines.push_back(std::string("ERROR ") + e.what());
  }
  r.seconds = timer.seconds();
  if (r.seconds >= r.limit) {
    r.pass = false;
    r.lines.push_back("FAIL runtime above the allowance");
  }
  return r;
}

CriterionResult run_coverage(const SuiteOptions& opts) {
  CriterionResult r;
  r.name = "coverage";
  r.limit = 60;
  const Timer timer;
  const Graph k4g = complete_graph(4);
  const Matroid k4 = Matroid::from_graph("K4", k4g);
  const Triangle d{complete_edge_label(1, 2), complete_edge_label(1, 3), complete_edge_label(2, 3)};
  const Assignment ones = constant_point(k4.ground(), 1);
  std::mt19937_64 rng(opts.seed);

  const std::vector<std::pair<std::string, std::function<bool()>>> ops = {
      {"matroid.from_bases", [&] { return Matroid::from_bases("x", {"a", "b"}, {ElementSet::single(0)}).rank() == 1; }},
      {"matroid.from_oracle",
       [&] {
         const Matroid u = Matroid::from_oracle("U24", {"a", "b", "c", "d"}, 2, [](ElementSet s) { return s.size() <= 2; });
         return u.bases().size() == 6;
       }},
      {"matroid.from_binary", [&] { return r10_matroid().bases().size() == 162; }},
      {"matroid.io", [&] { return same_bases(parse_matroid(format_matroid(k4)), k4); }},
      {"matroid.dual", [&] { return dual(dual(k4)).bases() == k4.bases() && dual(k4).rank() == 3; }},
      {"matroid.minors",
       [&] {
         return delete_element(k4, d[0]).bases().size() == 8 && contract_element(k4, d[0]).bases().size() == 8;
       }},
      {"matroid.restrict", [&] { return restrict_to(k4, k4.set_of({d.begin(), d.end()}), "t").bases().size() == 3; }},
      {"matroid.circuits",
       [&] {
         const ElementSet t = k4.set_of({d.begin(), d.end()});
         return is_circuit(k4, t) && !contains_cocircuit(k4, t) && is_cocircuit(k4, k4.set_of({"e14", "e24", "e34"}));
       }},
      {"matroid.one_sum", [&] { return one_sum(k4, r10_matroid()).bases().size() == 16 * 162; }},
      {"matroid.two_sum",
       [&] {
         return two_sum(Matroid::from_graph("a", complete_graph(3, {"a", "b", "g"})),
                        Matroid::from_graph("b", complete_graph(3, {"g", "c", "e"})), "g")
                    .bases()
                    .size() == 4;
       }},
      {"matroid.delta_sums",
       [&] {
         const Fixture f = make_fixture("k4-dsum-k4");
         return f.matroid.bases().size() == 12 && delta_sum_plus(k4, k4.relabeled([&](const std::string& l) {
                                                      return std::find(d.begin(), d.end(), l) == d.end() ? l + "'" : l;
                                                    }),
                                                    d)
                                                      .size() == 9;
       }},
      {"matroid.parallel_extension", [&] { return parallel_extension(k4, d[0], "p").bases().size() == 16 + 8; }},
      {"matroid.y_delta", [&] { return same_bases(y_delta_exchange(delta_y_exchange(k4, d), d), k4); }},
      {"matroid.rep_with_cocircuit_row",
       [&] {
         const ElementSet star = k4.set_of({"e14", "e24", "e34"});
         const BinaryMatrix a = rep_with_cocircuit_row(k4, star);
         return a.row_bits(a.rows() - 1) == star.bits();
       }},
      {"matroid.find_binary_rep", [&] { const auto rep = find_binary_rep(k4); return rep && rep->rows() == 3; }},
      {"matroid.separations", [&] { return is_three_connected(k4) && find_separation(make_fixture("c4-2sum").matroid, 2); }},
      {"matroid.basis_exchange", [&] { return satisfies_basis_exchange(r10_matroid()); }},
      {"tu.matrix_io",
       [&] {
         const IntMatrix a = signed_incidence(k4g);
         return parse_int_matrix(format_int_matrix(a)).matrix == a && is_tu(a);
       }},
      {"tu.det_integer", [&] { return det_integer(IntMatrix{{0, 1}, {1, 0}}) == -1; }},
      {"circuit.io", [&] { const Circuit c = synth_graphic(k4g); return format_circuit(parse_circuit(format_circuit(c))) == format_circuit(c); }},
      {"circuit.substitute",
       [&] {
         CircuitBuilder s;
         const Circuit sum = s.build(s.add(s.input("u"), s.input("v")));
         const Circuit c = substitute(synth_graphic(complete_graph(3, {"x", "y", "w"})), {{"x", sum}});
         return eval_rational(c, {{"u", 1}, {"v", 1}, {"y", 1}, {"w", 1}}) == 5;
       }},
      {"circuit.eliminate_zero",
       [&] {
         const Circuit c = eliminate_zero(synth_graphic(k4g), {d[0]});
         return eval_rational(c, ones) == 8;
       }},
      {"circuit.prune", [&] { return prune(synth_graphic(k4g)).size() == synth_graphic(k4g).size(); }},
      {"circuit.expand_symbolic",
       [&] {
         const Circuit c = synth_graphic(complete_graph(3));
         const Expansion e = expand_symbolic(c);
         const Assignment p = random_positive_point(c.variables(), rng);
         return e.numerator.eval(e.point(p)) / e.denominator.eval(e.point(p)) == eval_rational(c, p);
       }},
      {"tropical.io", [&] { const auto t = tropicalize(synth_graphic(k4g)); return parse_tropical(format_tropical(t)) == t; }},
      {"relu.io",
       [&] {
         const auto n = lower_to_relu(tropicalize(synth_graphic(k4g)));
         return parse_relu(format_relu(n)) == n;
       }},
      {"synth.compose",
       [&] {
         const Circuit k3 = synth_graphic(complete_graph(3, {"a", "b", "c"}));
         const Circuit k3b = synth_graphic(complete_graph(3, {"p", "q", "s"}));
         const Circuit one = compose_one_sum(k3, k3b);
         return eval_rational(one, constant_point(one.variables(), 1)) == 9 && one.size() == 11;
       }},
      {"synth.delta",
       [&] {
         const Circuit c = eliminate_delta_graphic(synth_graphic(k4g), complete_graph(4, {d[0], d[1], "u1", d[2], "u2", "u3"}), d, false);
         return identity_test("dsum", c, delta_sum(k4, Matroid::from_graph("g", complete_graph(4, {d[0], d[1], "u1", d[2], "u2", "u3"})), d),
                              5, opts.seed)
             .pass;
       }},
      {"synth.tree_io",
       [&] {
         const Tree t = make_fixture("random-composite-2").tree;
         return same_bases(recompose(parse_tree(format_tree(t))), recompose(t));
       }},
      {"synth.auto_decompose",
       [&] {
         const Matroid m = r12_matroid();
         const Tree t = auto_decompose(m);
         return same_bases(recompose(t), m) && identity_test("auto", synth(t).circuit, m, 5, opts.seed).pass;
       }},
      {"oracle.greedy", [&] {
         const Assignment w = random_int_point(k4.ground(), rng, -9, 9);
         return greedy_max_basis(k4, w).weight == exhaustive_max_basis(k4, w).weight;
       }},
      {"oracle.kirchhoff", [&] { return kirchhoff_count(k4g) == 16 && brute_bgp_eval(k4, ones) == 16; }},
  };
  std::size_t ok = 0;
  for (const auto& [name, fn] : ops) {
    bool pass = false;
    std::string why;
    try {
      pass = fn();
    } catch (const std::exception& e) {
      why = std::string(" (") + e.what() + ")";
    }
    ok += pass;
    if (!pass) {
      r.pass = false;
      r.lines.push_back("FAIL " + name + why);
    }
  }
  r.seconds = timer.seconds();
  r.summary = std::to_string(ok) + "/" + std::to_string(ops.size()) + " operations";
  return r;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << "criterion " << r.id << ' ' << (r.pass ? "PASS" : "FAIL") << ' ' << r.name << " runtime=" << std::fixed
      << std::setprecision(3) << r.seconds << "s limit=" << std::setprecision(0) << r.limit << "s";
  if (!r.summary.empty()) out << ' ' << r.summary;
  return out.str();
}

}  // namespace bgpc

#include <gtest/gtest.h>

#include <random>

#include "bgpc/decompose.hpp"
#include "bgpc/error.hpp"
#include "bgpc/fixtures.hpp"
#include "bgpc/matroid_ops.hpp"
#include "bgpc/oracles.hpp"
#include "bgpc/synth.hpp"
#include "bgpc/tropical.hpp"
#include "helpers.hpp"

using namespace bgpc;
using bgpc::testing::at_ones;

namespace {

template <typename Fn>
void expect_error(ErrorKind kind, Fn&& fn) {
  try {
    fn();
    FAIL() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

TEST(Graphic, CompleteGraphsMatchCayley) {
  for (int l = 3; l <= 7; ++l) {
    const Circuit c = synth_graphic(complete_graph(l));
    Integer cayley = 1;
    for (int i = 0; i < l - 2; ++i) cayley *= l;
    EXPECT_EQ(Rational(cayley), at_ones(c)) << l;
    EXPECT_LE(2 * c.size(), static_cast<std::size_t>(l * (l - 1) / 2 * l * (l - 1) / 2 * l * (l - 1) / 2)) << l;
  }
}

TEST(Graphic, K4Transcript) {
  std::vector<LedgerEntry> ledger;
  const Circuit c = synth_graphic(complete_graph(4), &ledger);
  EXPECT_EQ(at_ones(c), 16);
  // First step eliminates vertex 4: y = z14 + z24 + z34 and z'_ij = z_ij + z_i4 z_j4 / y.
  const std::vector<Rational> v = eval_gates(c, constant_point(c.variables(), 1));
  const auto& g = c.gates();
  std::size_t y = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].op == Op::Add && g[g[i].lhs].op == Op::Add) {
      y = i;
      break;
    }
  }
  EXPECT_EQ(v[y], 3);
  std::size_t primes = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].op == Op::Add && g[g[i].lhs].op == Op::Input && g[g[i].rhs].op == Op::Div) {
      EXPECT_EQ(v[i], Rational(4, 3));
      ++primes;
    }
  }
  EXPECT_EQ(primes, 3u);
  ASSERT_EQ(ledger.size(), 2u);
  EXPECT_EQ(ledger[0].rule, "star-mesh");
  EXPECT_LE(ledger[0].added, *ledger[0].limit);
}

TEST(Graphic, RandomPointsAgreeWithBruteForce) {
  std::mt19937_64 rng(21);
  for (int l = 3; l <= 5; ++l) {
    const Graph g = complete_graph(l);
    const Circuit c = synth_graphic(g);
    const Matroid m = Matroid::from_graph("k", g);
    for (int i = 0; i < 10; ++i) {
      const Assignment p = random_positive_point(c.variables(), rng);
      EXPECT_EQ(eval_rational(c, p), brute_bgp_eval(m, p));
    }
  }
}

TEST(Graphic, Disconnected) {
  expect_error(ErrorKind::DisconnectedGraph, [] { synth_graphic(Graph(4, {{"a", 0, 1}, {"b", 2, 3}})); });
}

TEST(Cographic, Triangle) {
  const Graph k3(3, {{"x1", 0, 1}, {"x2", 0, 2}, {"x3", 1, 2}});
  const Circuit c = synth_cographic(k3);
  EXPECT_EQ(at_ones(c), 3);
  EXPECT_EQ(eval_rational(c, {{"x1", 1}, {"x2", 2}, {"x3", 3}}), 6);
  EXPECT_LE(c.size(), synth_graphic(k3).size() + 6);
}

TEST(Cographic, K4) {
  const Circuit c = synth_cographic(complete_graph(4));
  EXPECT_EQ(at_ones(c), 16);
  EXPECT_EQ(c.size(), synth_graphic(complete_graph(4)).size() + 12);
}

TEST(Compose, OneSum) {
  const Circuit a = synth_graphic(complete_graph(3));
  const Circuit b = synth_graphic(complete_graph(3, {"p", "q", "r"}));
  const Circuit c = compose_one_sum(a, b);
  EXPECT_EQ(c.size(), 11u);
  EXPECT_EQ(at_ones(c), 9);
  expect_error(ErrorKind::VariableClash, [&] { compose_one_sum(a, a); });
}

TEST(Compose, OneSumTropicalIsGreedySum) {
  const Circuit a = synth_graphic(complete_graph(3));
  const Circuit b = synth_graphic(complete_graph(4, {"p1", "p2", "p3", "p4", "p5", "p6"}));
  const Matroid m = one_sum(Matroid::from_graph("a", complete_graph(3)),
                            Matroid::from_graph("b", complete_graph(4, {"p1", "p2", "p3", "p4", "p5", "p6"})));
  const TropicalCircuit t = tropicalize(compose_one_sum(a, b));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    const Assignment w = random_int_point(t.variables(), rng, -50, 50);
    EXPECT_EQ(eval_tropical(t, w), greedy_max_basis(m, w).weight);
  }
}

TEST(Tree, TwoSumOfTriangles) {
  const Tree t = parse_tree("(2sum (graphic edges a:1-2 b:2-3 d:1-3) (graphic edges d:1-3 c:1-2 e:2-3) glue=d)");
  const SynthesisReport r = synth(t);
  EXPECT_EQ(at_ones(r.circuit), 4);
  EXPECT_EQ(eval_rational(r.circuit, {{"a", 1}, {"b", 1}, {"c", 2}, {"e", 3}}), 17);
}

TEST(Tree, LeafReports) {
  const SynthesisReport k4 = synth(graphic_leaf(complete_graph(4)));
  EXPECT_EQ(at_ones(k4.circuit), 16);
  EXPECT_LE(2 * k4.size, 216u);
  EXPECT_EQ(k4.bound, 216u);
  EXPECT_EQ(synth(r10_leaf()).size, 809u);
  EXPECT_EQ(synth(f7_leaf()).size, 83u);
}

TEST(Tree, LedgerSumsToSize) {
  for (const auto& name : suite_fixture_names()) {
    const SynthesisReport r = synth(make_fixture(name).tree);
    long long total = 0;
    for (const auto& e : r.ledger) {
      total += e.added;
      if (e.limit && e.rule != "zero-elimination") EXPECT_LE(e.added, *e.limit) << name << ' ' << e.rule;
    }
    EXPECT_EQ(total, static_cast<long long>(r.size)) << name;
    EXPECT_LE(r.size, r.bound) << name;
  }
}

TEST(Tree, FixturesMatchOracle) {
  std::mt19937_64 rng(17);
  for (const auto& name : suite_fixture_names()) {
    const Fixture f = make_fixture(name);
    const SynthesisReport r = synth(f.tree);
    EXPECT_TRUE(same_bases(recompose(f.tree), f.matroid)) << name;
    for (int i = 0; i < 5; ++i) {
      const Assignment p = random_positive_point(r.circuit.variables(), rng);
      EXPECT_EQ(eval_rational(r.circuit, p), brute_bgp_eval(f.matroid, p)) << name;
    }
  }
}

TEST(Tree, R12Size) {
  const SynthesisReport r = synth(r12_tree());
  EXPECT_LE(r.size, r.bound);
  EXPECT_EQ(at_ones(r.circuit), Rational(r12_matroid().bases().size()));
}

TEST(Delta, K4OnK4) {
  const Fixture f = make_fixture("k4-dsum-k4");
  const SynthesisReport r = synth(f.tree);
  EXPECT_EQ(at_ones(r.circuit), Rational(f.matroid.bases().size()));
}

TEST(Delta, NotThreeConnected) {
  // A 4-cycle with a chord is a triangle pair glued along an edge: 2-connected only.
  const Graph g(4, {{"t1", 0, 1}, {"t2", 1, 2}, {"t3", 0, 2}, {"a", 2, 3}, {"b", 0, 3}});
  const Circuit m1 = synth_graphic(complete_graph(4, {"t1", "t3", "u1", "t2", "u2", "u3"}));
  expect_error(ErrorKind::NotThreeConnected,
               [&] { eliminate_delta_graphic(m1, g, {"t1", "t2", "t3"}, false); });
}

TEST(Delta, MissingTriangle) {
  const Circuit m1 = synth_graphic(complete_graph(4, {"t1", "t3", "u1", "t2", "u2", "u3"}));
  expect_error(ErrorKind::MissingTriangle,
               [&] { eliminate_delta_graphic(m1, complete_graph(4), {"t1", "t2", "t3"}, false); });
}

TEST(Budget, CorruptedCircuitFailsIdentityTest) {
  const Fixture f = make_fixture("k4");
  Circuit c = synth(f.tree).circuit;
  std::vector<Gate> gates = c.gates();
  for (auto& g : gates) {
    if (g.op == Op::Add) {
      g.op = Op::Mul;
      break;
    }
  }
  const Circuit bad(gates, c.output());
  EXPECT_FALSE(identity_test("corrupt", bad, f.matroid, 10, 1).pass);
  EXPECT_TRUE(identity_test("ok", c, f.matroid, 10, 1).pass);
}

TEST(Minor, EmptyBasisSetOnColoop) {
  const Tree t = graphic_leaf(Graph(3, {{"a", 0, 1}, {"b", 1, 2}}));
  expect_error(ErrorKind::EmptyBasisSet, [&] { minor_tree(t, "a", false); });
}

TEST(Minor, GraphicMinorsMatch) {
  const Tree t = graphic_leaf(complete_graph(4));
  const Matroid m = recompose(t);
  EXPECT_TRUE(same_bases(recompose(minor_tree(t, "e12", false)), delete_element(m, "e12")));
  EXPECT_TRUE(same_bases(recompose(minor_tree(t, "e12", true)), contract_element(m, "e12")));
}

TEST(Decompose, FindsKnownStructures) {
  for (const char* name : {"c4-2sum", "r10", "k4-dsum-k4", "k4", "k4-co"}) {
    const Fixture f = make_fixture(name);
    const Tree t = auto_decompose(f.matroid);
    EXPECT_TRUE(same_bases(recompose(t), f.matroid)) << name;
    const SynthesisReport r = synth(t);
    EXPECT_EQ(at_ones(r.circuit), Rational(f.matroid.bases().size())) << name;
  }
}

TEST(Decompose, R12SplitsIntoDeltaSum) {
  const Matroid m = r12_matroid();
  const Tree t = auto_decompose(m);
  EXPECT_EQ(t->kind, NodeKind::DeltaSum);
  EXPECT_TRUE(same_bases(recompose(t), m));
}

TEST(Decompose, FanoIsNotDecomposable) {
  const Tree t = auto_decompose(f7_matroid());
  EXPECT_EQ(t->kind, NodeKind::F7);
}

TEST(Decompose, GroundGuard) {
  expect_error(ErrorKind::GroundTooLarge, [] { auto_decompose(Matroid::from_graph("k6", complete_graph(6))); });
}

TEST(Isomorphism, R10Relabelled) {
  const Matroid a = r10_matroid();
  const Matroid b = r10_matroid(numbered_labels("q", 10));
  EXPECT_TRUE(find_isomorphism(a, b));
  EXPECT_FALSE(find_isomorphism(a, Matroid::from_graph("k5", complete_graph(5))));
}

}  // namespace

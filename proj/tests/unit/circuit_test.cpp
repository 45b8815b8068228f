#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "bgpc/error.hpp"
#include "bgpc/fixtures.hpp"
#include "bgpc/graph.hpp"
#include "bgpc/oracles.hpp"
#include "bgpc/relu.hpp"
#include "bgpc/symbolic.hpp"
#include "bgpc/synth.hpp"
#include "bgpc/tropical.hpp"
#include "helpers.hpp"

using namespace bgpc;
using bgpc::testing::at_ones;

namespace {

Circuit sum_xy() {
  CircuitBuilder b;
  return b.build(b.add(b.input("x"), b.input("y")));
}

Assignment pt(std::initializer_list<std::pair<const std::string, Rational>> v) { return Assignment(v); }

template <typename Fn>
void expect_error(ErrorKind kind, Fn&& fn) {
  try {
    fn();
    FAIL() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

TEST(Circuit, EvalSum) { EXPECT_EQ(eval_rational(sum_xy(), pt({{"x", 2}, {"y", 3}})), 5); }

TEST(Circuit, MissingVariableIsParseError) {
  expect_error(ErrorKind::Parse, [] { eval_rational(sum_xy(), pt({{"x", 2}})); });
}

TEST(Circuit, DivisionByZero) {
  CircuitBuilder b;
  const Circuit c = b.build(b.div(b.input("x"), b.input("y")));
  expect_error(ErrorKind::DivisionByZero, [&] { eval_rational(c, pt({{"x", 1}, {"y", 0}})); });
}

TEST(Circuit, InputsSharedByName) {
  CircuitBuilder b;
  const auto x = b.input("x");
  EXPECT_EQ(b.input("x"), x);
  const Circuit c = b.build(b.mul(x, x));
  EXPECT_EQ(c.variables(), (std::vector<std::string>{"x"}));
  EXPECT_EQ(c.size(), 1u);
}

TEST(Circuit, SerializationRoundTrip) {
  for (const char* name : {"k4", "k4-co", "c4-2sum", "r12"}) {
    const Circuit c = synth(make_fixture(name).tree).circuit;
    EXPECT_EQ(parse_circuit(format_circuit(c)), c) << name;
  }
}

TEST(Circuit, ParseErrorsCarryLineNumbers) {
  expect_error(ErrorKind::Parse, [] { parse_circuit("g0 = input x\ng1 = add g0 g7\noutput g1\n"); });
  try {
    parse_circuit("g0 = input x\ng1 = frob g0 g0\n");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(Substitute, SharedBinding) {
  CircuitBuilder b;
  const auto x = b.input("x");
  const Circuit sq = b.build(b.mul(x, x));
  CircuitBuilder u;
  const Circuit uv = u.build(u.add(u.input("u"), u.input("v")));
  const Circuit c = substitute(sq, {{"x", uv}});
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(eval_rational(c, pt({{"u", 2}, {"v", 5}})), 49);
}

TEST(Substitute, TwoTrianglesGiveFourCycle) {
  const Circuit k3a = synth_graphic(Graph(3, {{"a", 0, 1}, {"b", 1, 2}, {"d", 0, 2}}));
  // M2 = triangle {d, c, e}: deleting d leaves c, e in series, contracting d leaves them parallel.
  CircuitBuilder bd;
  const Circuit c_del = bd.build(bd.mul(bd.input("c"), bd.input("e")));
  CircuitBuilder bc;
  const Circuit c_con = bc.build(bc.add(bc.input("c"), bc.input("e")));
  const Circuit c = compose_two_sum(k3a, c_del, c_con, "d");
  EXPECT_EQ(c.size(), k3a.size() + c_del.size() + c_con.size() + 2);
  EXPECT_EQ(at_ones(c), 4);
  EXPECT_EQ(eval_rational(c, pt({{"a", 1}, {"b", 1}, {"c", 2}, {"e", 3}})), 17);
}

TEST(EliminateZero, Examples) {
  CircuitBuilder b;
  const Circuit c = b.build(b.mul(b.add(b.input("x"), b.input("y")), b.input("z")));
  const Circuit r = eliminate_zero(c, {"y"});
  EXPECT_EQ(r.size(), 1u);
  auto vars = r.variables();
  std::sort(vars.begin(), vars.end());
  EXPECT_EQ(vars, (std::vector<std::string>{"x", "z"}));
  EXPECT_EQ(eval_rational(r, pt({{"x", 3}, {"z", 4}})), 12);

  CircuitBuilder d;
  const Circuit q = d.build(d.div(d.input("x"), d.input("y")));
  expect_error(ErrorKind::PoleAtZero, [&] { eliminate_zero(q, {"y"}); });
}

TEST(EliminateZero, K5ToWheel) {
  // W4: hub 5, rim 1-2-3-4-1; the non-edges of K5 are 13 and 24.
  const Circuit k5 = synth_graphic(complete_graph(5));
  const Circuit w = eliminate_zero(k5, {"e13", "e24"});
  const Graph wheel(5, {{"e12", 0, 1}, {"e23", 1, 2}, {"e34", 2, 3}, {"e14", 0, 3}, {"e15", 0, 4}, {"e25", 1, 4},
                        {"e35", 2, 4}, {"e45", 3, 4}});
  EXPECT_EQ(Integer(at_ones(w).get_num()), kirchhoff_count(wheel));
}

TEST(Naive, Sizes) {
  EXPECT_EQ(naive_from_bases({{"a", "b"}}).size(), 1u);
  const Matroid r10 = r10_matroid();
  std::vector<std::vector<std::string>> bases;
  for (auto b : r10.bases()) bases.push_back(r10.labels_of(b));
  const Circuit c = naive_from_bases(bases);
  EXPECT_EQ(c.size(), 809u);
  EXPECT_EQ(at_ones(c), 162);
  const Matroid f7 = f7_matroid();
  bases.clear();
  for (auto b : f7.bases()) bases.push_back(f7.labels_of(b));
  EXPECT_EQ(naive_from_bases(bases).size(), 83u);
}

TEST(Tropical, Examples) {
  const TropicalCircuit t = tropicalize(sum_xy());
  EXPECT_EQ(t.size(), 1u);
  EXPECT_EQ(eval_tropical(t, pt({{"x", 3}, {"y", 5}})), 5);

  CircuitBuilder b;
  const auto x = b.input("x"), y = b.input("y");
  const Circuit c = b.build(b.div(b.add(b.mul(x, x), b.mul(x, y)), x));
  const TropicalCircuit tc = tropicalize(c);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5; ++i) {
    const Assignment w = random_int_point({"x", "y"}, rng, -20, 20);
    EXPECT_EQ(eval_tropical(tc, w), std::max(w.at("x"), w.at("y")));
  }

  CircuitBuilder d;
  const auto z = d.input("z");
  EXPECT_EQ(eval_tropical(tropicalize(d.build(d.add(z, z))), pt({{"z", -4}})), -4);
}

TEST(Tropical, TriangleAndR10) {
  const Circuit k3 = synth_graphic(Graph(3, {{"a", 0, 1}, {"b", 0, 2}, {"c", 1, 2}}));
  EXPECT_EQ(eval_tropical(tropicalize(k3), pt({{"a", 5}, {"b", 2}, {"c", 1}})), 7);
  const Circuit r10 = synth(make_fixture("r10").tree).circuit;
  EXPECT_EQ(eval_tropical(tropicalize(r10), constant_point(r10.variables(), 1)), 5);
}

TEST(Tropical, AgreesWithExpansion) {
  std::mt19937_64 rng(5);
  for (const char* name : {"k3", "k4", "c4-2sum"}) {
    const Circuit c = synth(make_fixture(name).tree).circuit;
    const Expansion e = expand_symbolic(c);
    const TropicalCircuit t = tropicalize(c);
    for (int i = 0; i < 20; ++i) {
      const Assignment w = random_int_point(c.variables(), rng, -30, 30);
      const auto p = e.point(w);
      EXPECT_EQ(eval_tropical(t, w), e.numerator.tropical(p) - e.denominator.tropical(p)) << name;
    }
  }
}

TEST(Symbolic, Examples) {
  const Expansion e = expand_symbolic(sum_xy());
  EXPECT_EQ(e.numerator.terms.size(), 2u);
  EXPECT_EQ(e.denominator.terms.size(), 1u);
  CircuitBuilder b;
  const auto x = b.input("x");
  const Expansion q = expand_symbolic(b.build(b.div(x, x)));
  EXPECT_EQ(q.numerator.terms, q.denominator.terms);

  const Circuit k3 = synth_graphic(complete_graph(3));
  const Expansion k = expand_symbolic(k3);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 10; ++i) {
    const Assignment p = random_positive_point(k3.variables(), rng);
    const auto v = k.point(p);
    EXPECT_EQ(k.numerator.eval(v) / k.denominator.eval(v), eval_rational(k3, p));
  }
  for (const auto& [mono, coeff] : k.numerator.terms) EXPECT_GE(coeff, 1);
}

TEST(Symbolic, Guard) {
  expect_error(ErrorKind::TooLarge, [] { expand_symbolic(synth(make_fixture("r10").tree).circuit); });
}

TEST(Relu, MaxOfTwo) {
  const ReluNetwork net = lower_to_relu(tropicalize(sum_xy()));
  EXPECT_EQ(net.forward(pt({{"x", 3}, {"y", 5}})), 5);
  EXPECT_EQ(net.forward(pt({{"x", 5}, {"y", 3}})), 5);
  EXPECT_EQ(net.forward(pt({{"x", -2}, {"y", -7}})), -2);
  EXPECT_TRUE(net.unit_weights());
}

TEST(Relu, K4MatchesTropical) {
  const TropicalCircuit t = tropicalize(synth(make_fixture("k4").tree).circuit);
  const ReluNetwork net = lower_to_relu(t);
  EXPECT_LE(net.size(), 3 * t.size());
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const Assignment w = random_int_point(t.variables(), rng, -50, 50);
    EXPECT_EQ(net.forward(w), eval_tropical(t, w));
  }
  EXPECT_EQ(parse_relu(format_relu(net)), net);
}

TEST(Relu, R10Bound) {
  const TropicalCircuit t = tropicalize(synth(make_fixture("r10").tree).circuit);
  EXPECT_LE(lower_to_relu(t).size(), 2427u);
}

TEST(Relu, TropicalTextRoundTrip) {
  const TropicalCircuit t = tropicalize(synth(make_fixture("k4-co").tree).circuit);
  EXPECT_EQ(parse_tropical(format_tropical(t)), t);
}

}  // namespace

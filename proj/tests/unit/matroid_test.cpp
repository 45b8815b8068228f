#include <gtest/gtest.h>

#include <bit>
#include <set>

#include "bgpc/decompose.hpp"
#include "bgpc/error.hpp"
#include "bgpc/fixtures.hpp"
#include "bgpc/matroid_ops.hpp"
#include "helpers.hpp"

using namespace bgpc;
using bgpc::testing::label_bases;
using bgpc::testing::triangle;

namespace {

using Labels = std::vector<std::vector<std::string>>;

TEST(Bases, Triangle) {
  EXPECT_EQ(label_bases(triangle()), (Labels{{"a", "b"}, {"a", "c"}, {"b", "c"}}));
}

TEST(Bases, R10AndF7Counts) {
  EXPECT_EQ(r10_matroid().bases().size(), 162u);
  EXPECT_EQ(f7_matroid().bases().size(), 28u);
}

TEST(Bases, CompleteGraphsMatchKirchhoff) {
  for (int l = 3; l <= 6; ++l) {
    const Graph g = complete_graph(l);
    EXPECT_EQ(Integer(enumerate_bases(Matroid::from_graph("k", g)).size()), kirchhoff_count(g)) << l;
  }
}

TEST(Bases, GroundGuard) {
  const Graph g = complete_graph(8);  // 28 edges
  EXPECT_THROW(
      {
        try {
          enumerate_bases(Matroid::from_graph("k8", g));
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::GroundTooLarge);
          throw;
        }
      },
      Error);
}

TEST(Rank, Examples) {
  const Matroid k3 = triangle();
  EXPECT_EQ(rank_of(k3, ElementSet{}), 0u);
  EXPECT_EQ(rank_of(k3, k3.everything()), 2u);
  const Matroid r10 = r10_matroid();
  for (std::size_t e = 0; e < r10.size(); ++e) EXPECT_EQ(rank_of(r10, ElementSet::single(e)), 1u);
}

TEST(Dual, TriangleAndInvolution) {
  EXPECT_EQ(label_bases(dual(triangle())), (Labels{{"a"}, {"b"}, {"c"}}));
  const Matroid r10 = r10_matroid();
  EXPECT_TRUE(same_bases(dual(dual(r10)), r10));
}

TEST(Dual, BinaryRepresentationOfDual) {
  // (I_r C) has dual (C^T I_{n-r}); compare basis sets.
  const BinaryMatrix a = matrix_a10();
  const std::size_t r = a.rows(), k = a.cols();
  BinaryMatrix t(k, r + k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < r; ++j) t.set(i, j, a.get(j, i));
    t.set(i, r + i, true);
  }
  const Matroid m = r10_matroid();
  EXPECT_TRUE(same_bases(dual(m), Matroid::from_binary("d", m.ground(), t)));
}

TEST(Minors, Triangle) {
  EXPECT_EQ(label_bases(delete_element(triangle(), "c")), (Labels{{"a", "b"}}));
  EXPECT_EQ(label_bases(contract_element(triangle(), "c")), (Labels{{"a"}, {"b"}}));
}

TEST(Sums, TwoSumOfTrianglesIsFourCycle) {
  const Matroid m1 = Matroid::from_graph("x", Graph(3, {{"a", 0, 1}, {"b", 1, 2}, {"d", 0, 2}}));
  const Matroid m2 = Matroid::from_graph("y", Graph(3, {{"d", 0, 2}, {"c", 0, 1}, {"e", 1, 2}}));
  const Matroid m = two_sum(m1, m2, "d");
  EXPECT_EQ(m.bases().size(), 4u);
  EXPECT_TRUE(same_bases(m, Matroid::from_graph("c4", cycle_graph(4, {"a", "b", "e", "c"}))));
  EXPECT_EQ(brute_bgp_eval(m, constant_point(m.ground(), 1)), 4);
  const auto sep = find_separation(m, 2);
  ASSERT_TRUE(sep.has_value());
  EXPECT_EQ(sep->size(), 2u);
}

TEST(Sums, OneSumSeparation) {
  const Matroid k3b = triangle().relabeled([](const std::string& s) { return s + "'"; });
  const Matroid m = one_sum(triangle(), k3b);
  EXPECT_EQ(m.bases().size(), 9u);
  const auto sep = find_separation(m, 1);
  ASSERT_TRUE(sep.has_value());
  EXPECT_EQ(sep->size(), 3u);
}

// Brute force over basis pairs, straight from conditions (i)-(iii).
std::set<std::set<std::string>> direct_delta_sum(const Matroid& m1, const Matroid& m2, const Triangle& d) {
  using S = std::set<std::string>;
  auto to_set = [](const Matroid& m, ElementSet b) {
    const auto l = m.labels_of(b);
    return S(l.begin(), l.end());
  };
  std::set<S> b1s, b2s;
  for (auto b : m1.bases()) b1s.insert(to_set(m1, b));
  for (auto b : m2.bases()) b2s.insert(to_set(m2, b));
  const S dset(d.begin(), d.end());
  auto meet = [&](const S& b) {
    S out;
    for (const auto& e : b) {
      if (dset.count(e)) out.insert(e);
    }
    return out;
  };
  auto sym = [](S a, const S& b) {
    for (const auto& e : b) {
      if (!a.erase(e)) a.insert(e);
    }
    return a;
  };
  std::set<S> out;
  for (const auto& b1 : b1s) {
    for (const auto& b2 : b2s) {
      bool disjoint = true;
      for (const auto& e : b1) disjoint = disjoint && !b2.count(e);
      if (!disjoint) continue;
      const S i1 = meet(b1), i2 = meet(b2);
      bool ok = (i1.empty() && i2.size() == 2) || (i1.size() == 2 && i2.empty());
      if (i1.size() == 1 && i2.size() == 1) {
        S dj = dset, di = dset;
        dj.erase(*i2.begin());
        di.erase(*i1.begin());
        ok = b1s.count(sym(b1, dj)) && b2s.count(sym(b2, di));
      }
      if (!ok) continue;
      S b;
      for (const auto& e : b1) if (!dset.count(e)) b.insert(e);
      for (const auto& e : b2) if (!dset.count(e)) b.insert(e);
      out.insert(b);
    }
  }
  return out;
}

std::set<std::set<std::string>> basis_labels(const Matroid& m) {
  std::set<std::set<std::string>> out;
  for (auto b : m.bases()) {
    const auto l = m.labels_of(b);
    out.emplace(l.begin(), l.end());
  }
  return out;
}

TEST(Sums, DeltaSumMatchesDirectDefinition) {
  const Graph left = complete_graph(4, {"t1", "t2", "u1", "t3", "u2", "u3"});
  const Graph right = complete_graph(4, {"t1", "t2", "v1", "t3", "v2", "v3"});
  const Matroid m1 = Matroid::from_graph("l", left), m2 = Matroid::from_graph("r", right);
  const Triangle d{"t1", "t2", "t3"};
  const Matroid m = delta_sum(m1, m2, d);
  EXPECT_EQ(m.size(), 6u);
  EXPECT_EQ(basis_labels(m), direct_delta_sum(m1, m2, d));
  EXPECT_TRUE(satisfies_basis_exchange(m));

  const Matroid plus = delta_sum_plus(m1, m2, d);
  EXPECT_EQ(plus.size(), 9u);
  EXPECT_TRUE(satisfies_basis_exchange(plus));
  // Deleting the kept copies gives the plain sum back.
  Matroid back = plus;
  for (const auto& e : d) back = delete_element(back, e);
  EXPECT_EQ(basis_labels(back), basis_labels(m));
}

TEST(Sums, DeltaSumRejectsNonCircuit) {
  const Graph left = complete_graph(4, {"t1", "t2", "u1", "t3", "u2", "u3"});
  const Matroid m1 = Matroid::from_graph("l", left);
  const Matroid m2 = m1.relabeled([](const std::string& s) { return s[0] == 'u' ? "v" + s.substr(1) : s; });
  try {
    delta_sum(m1, m2, {"t1", "t2", "u1"});
    FAIL() << "expected BadInterface";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadInterface);
  }
}

TEST(Exchange, DeltaWyeOnK4) {
  const Graph k4 = complete_graph(4);
  const Matroid m = Matroid::from_graph("k4", k4);
  const Triangle d{"e12", "e13", "e23"};
  const Matroid y = delta_y_exchange(m, d);
  EXPECT_EQ(y.size(), 6u);
  // Y_D(M(K4)) is graphic: the triangle becomes a star on a new vertex.
  const Graph star(5, {{"e14", 0, 3}, {"e24", 1, 3}, {"e34", 2, 3}, {"e23", 0, 4}, {"e13", 1, 4}, {"e12", 2, 4}});
  EXPECT_EQ(y.bases().size(), Matroid::from_graph("s", star).bases().size());
  EXPECT_TRUE(same_bases(y_delta_exchange(y, d), m));
}

TEST(Exchange, TriangleContainingCocircuitRejected) {
  try {
    delta_y_exchange(triangle(), {"a", "b", "c"});
    FAIL() << "expected BadTriangle";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadTriangle);
  }
}

TEST(Circuits, Triangle) {
  const Matroid k3 = triangle();
  EXPECT_TRUE(is_circuit(k3, k3.everything()));
  EXPECT_FALSE(is_circuit(k3, k3.set_of({"a", "b"})));
  EXPECT_TRUE(is_cocircuit(k3, k3.set_of({"a", "b"})));
}

TEST(Circuits, R10HasNoTriangles) {
  const Matroid r10 = r10_matroid();
  for (std::uint64_t bits = 0; bits < (1u << 10); ++bits) {
    if (std::popcount(bits) == 3) EXPECT_FALSE(is_circuit(r10, ElementSet(bits)));
  }
}

TEST(CocircuitRow, TriangleAndR10) {
  const Matroid k3 = triangle();
  const BinaryMatrix a = rep_with_cocircuit_row(k3, k3.set_of({"a", "b"}));
  EXPECT_EQ(a.support(a.rows() - 1), k3.set_of({"a", "b"}));
  EXPECT_TRUE(same_bases(Matroid::from_binary("k", k3.ground(), a), k3));

  const Matroid r10 = r10_matroid();
  std::optional<ElementSet> found;
  for (std::uint64_t bits = 0; bits < (1u << 10) && !found; ++bits) {
    if (std::popcount(bits) == 4 && is_cocircuit(r10, ElementSet(bits))) found = ElementSet(bits);
  }
  ASSERT_TRUE(found);
  const BinaryMatrix b = rep_with_cocircuit_row(r10, *found);
  EXPECT_EQ(b.rows(), 5u);
  EXPECT_EQ(b.support(4), *found);
  EXPECT_TRUE(same_bases(Matroid::from_binary("r", r10.ground(), b), r10));

  try {
    rep_with_cocircuit_row(k3, k3.everything());
    FAIL() << "expected NotACocircuit";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotACocircuit);
  }
}

TEST(Separation, R10IsThreeConnected) {
  const Matroid r10 = r10_matroid();
  EXPECT_FALSE(find_separation(r10, 1));
  EXPECT_FALSE(find_separation(r10, 2));
  EXPECT_TRUE(is_three_connected(r10));
}

TEST(Axioms, FixturesSatisfyBasisExchange) {
  for (const char* name : {"k4", "k4-co", "f7", "c4-2sum"}) {
    EXPECT_TRUE(satisfies_basis_exchange(make_fixture(name).matroid)) << name;
  }
}

TEST(Graph, FindGraphRecoversGraphicMatroids) {
  for (int l = 3; l <= 5; ++l) {
    const Matroid m = Matroid::from_binary("k", complete_graph(l).labels(), graph_binary_rep(complete_graph(l)));
    const auto g = find_graph(m);
    ASSERT_TRUE(g) << l;
    EXPECT_TRUE(same_bases(Matroid::from_graph("g", *g), m));
  }
  EXPECT_FALSE(find_graph(r10_matroid()));
  EXPECT_FALSE(find_graph(f7_matroid()));
}

}  // namespace

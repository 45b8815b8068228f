#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bgpc/error.hpp"
#include "bgpc/fixtures.hpp"
#include "bgpc/int_matrix.hpp"
#include "bgpc/matroid_ops.hpp"
#include "bgpc/oracles.hpp"
#include "bgpc/tu.hpp"

using namespace bgpc;

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 1;
  return a;
}

IntMatrix reduced_incidence(const Graph& g) { return signed_incidence(g); }

std::vector<Rational> ones(std::size_t n) { return std::vector<Rational>(n, Rational(1)); }

TEST(Det, Examples) {
  EXPECT_EQ(det_exact(to_rational(identity(3))), 1);
  EXPECT_EQ(det_exact(to_rational(IntMatrix{{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(det_integer(IntMatrix{{2, 1}, {1, 2}}), 3);
}

TEST(Det, IntegerInputsGiveIntegers) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int t = 0; t < 50; ++t) {
    IntMatrix a(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = entry(rng);
    }
    const Rational d = det_exact(to_rational(a));
    EXPECT_EQ(d.get_den(), 1);
    EXPECT_EQ(d, Rational(det_integer(a)));
  }
}

TEST(Tu, Examples) {
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_TRUE(is_tu(identity(n))) << n;
  EXPECT_FALSE(is_tu(IntMatrix{{1, 1}, {-1, 1}}));
  EXPECT_TRUE(is_tu(reduced_incidence(complete_graph(4))));
}

TEST(Tu, RowAndColumnNegationPreservesTu) {
  const IntMatrix a = reduced_incidence(complete_graph(4));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    IntMatrix b = a;
    for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = -b(i, j);
    EXPECT_TRUE(is_tu(b));
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    IntMatrix b = a;
    for (std::size_t i = 0; i < b.rows(); ++i) b(i, j) = -b(i, j);
    EXPECT_TRUE(is_tu(b));
  }
}

TEST(Camion, AlreadyTu) {
  const BinaryMatrix b = BinaryMatrix::from_strings({"101", "011"});
  const IntMatrix s = camion_sign(b);
  EXPECT_EQ(s.support(), b);
  EXPECT_TRUE(is_tu(s));
}

TEST(Camion, OddCycle) {
  const BinaryMatrix b = BinaryMatrix::from_strings({"110", "011", "101"});
  const IntMatrix s = camion_sign(b);
  EXPECT_EQ(s.support(), b);
  EXPECT_TRUE(is_tu(s));
}

TEST(Camion, FanoIsNotRegular) {
  try {
    camion_sign(f7_matroid().binary() ? *f7_matroid().binary() : standard_form(matrix_a7()));
    FAIL() << "expected NotRegular";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotRegular);
  }
}

TEST(Camion, R10Signable) {
  const IntMatrix s = camion_sign(standard_form(matrix_a10()));
  EXPECT_TRUE(is_tu(s, 10));
  EXPECT_EQ(det_exact(weighted_gram(s, ones(10)).l), 162);
}

TEST(Gram, Examples) {
  const WeightedGram g = weighted_gram(identity(2), {Rational(2), Rational(5)});
  EXPECT_EQ(g.l, (RationalMatrix{{2, 0}, {0, 5}}));
  const WeightedGram row = weighted_gram(IntMatrix{{1, 1, 1, 1}}, ones(4));
  EXPECT_EQ(row.l, (RationalMatrix{{4}}));
  EXPECT_EQ(det_exact(weighted_gram(reduced_incidence(complete_graph(3)), ones(3)).l), 3);
}

TEST(Gram, MatrixTreeOnCompleteGraphs) {
  for (int l = 3; l <= 6; ++l) {
    const Graph g = complete_graph(l);
    const IntMatrix a = reduced_incidence(g);
    EXPECT_EQ(Rational(kirchhoff_count(g)), det_exact(weighted_gram(a, ones(a.cols())).l)) << l;
  }
  const IntMatrix k4 = reduced_incidence(complete_graph(4));
  EXPECT_EQ(det_exact(weighted_gram(k4, ones(6)).l), 16);
}

TEST(StarMesh, IdentityTwoByTwo) {
  const StarMesh s = star_mesh(identity(2), 1);
  EXPECT_EQ(s.reduced, (IntMatrix{{1}}));
  EXPECT_EQ(s.n1, (std::vector<std::size_t>{1}));
  EXPECT_TRUE(s.pairs.empty());
  const StarMeshWeights w = star_mesh_weights(s, {Rational(3), Rational(7)});
  EXPECT_EQ(w.y, 7);
}

TEST(StarMesh, ZeroRow) {
  try {
    star_mesh(IntMatrix{{1, 0}, {0, 0}}, 1);
    FAIL() << "expected ZeroRow";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroRow);
  }
}

TEST(StarMesh, K4StarGivesTripledTriangle) {
  // The last row of the reduced incidence is the star of the third vertex.
  const IntMatrix a = signed_incidence(complete_graph(4));
  const StarMesh s = star_mesh(a, 2);
  EXPECT_EQ(s.reduced.rows(), 2u);
  EXPECT_EQ(s.reduced.cols(), s.n0.size() + s.pairs.size());
  EXPECT_EQ(s.n0.size(), 3u);
  EXPECT_EQ(s.pairs.size(), 3u);
  // Merging parallel columns leaves a rank-2 matroid on three classes: M(K3).
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < s.reduced.cols(); ++j) labels.push_back("c" + std::to_string(j));
  const Matroid m = Matroid::from_binary("a", labels, s.reduced.support());
  EXPECT_EQ(m.rank(), 2u);
  std::set<std::uint64_t> classes;
  for (std::size_t j = 0; j < s.reduced.cols(); ++j) classes.insert(s.reduced.support().column_bits(j));
  EXPECT_EQ(classes.size(), 3u);
}

TEST(StarMesh, DeterminantIdentityRandom) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-1, 1);
  std::uniform_int_distribution<int> num(1, 9);
  int checked = 0;
  while (checked < 100) {
    const std::size_t r = 2 + rng() % 4, n = r + rng() % (9 - r);
    IntMatrix a(r, n);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    }
    const std::size_t row = rng() % r;
    if (a.row_is_zero(row)) continue;
    std::vector<Rational> z;
    for (std::size_t j = 0; j < n; ++j) {
      Rational q(num(rng), num(rng));
      q.canonicalize();
      z.push_back(q);
    }
    const StarMesh s = star_mesh(a, row);
    const StarMeshWeights w = star_mesh_weights(s, z);
    const Rational lhs = det_exact(weighted_gram(a, z).l);
    const Rational rhs = w.y * det_exact(weighted_gram(s.reduced, w.z).l);
    EXPECT_EQ(lhs, rhs);
    ++checked;
  }
}

TEST(MatrixText, RoundTrip) {
  const IntMatrix a{{1, -1, 0}, {0, 1, 1}};
  const LabeledMatrix back = parse_int_matrix(format_int_matrix(a, {"x", "y", "z"}));
  EXPECT_EQ(back.matrix, a);
  EXPECT_EQ(back.labels, (std::vector<std::string>{"x", "y", "z"}));
}

TEST(MatrixText, BadHeaderReportsLine) {
  try {
    parse_int_matrix("# comment\nrows=2 cols=2\n1 0\n0 x\n");
    FAIL() << "expected parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

}  // namespace

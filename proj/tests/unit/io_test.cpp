#include <gtest/gtest.h>

#include "bgpc/error.hpp"
#include "bgpc/fixtures.hpp"
#include "bgpc/matroid_io.hpp"
#include "bgpc/matroid_ops.hpp"
#include "bgpc/tree.hpp"
#include "helpers.hpp"

using namespace bgpc;

namespace {

std::string parse_message(const std::string& text) {
  try {
    parse_matroid(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    return e.what();
  }
  ADD_FAILURE() << "no parse error";
  return {};
}

TEST(MatroidText, RoundTripEveryBacking) {
  const std::vector<Matroid> ms = {
      make_fixture("k4").matroid,
      r10_matroid(),
      Matroid::from_basis_labels("b", {"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}),
  };
  for (const auto& m : ms) {
    const Matroid back = parse_matroid(format_matroid(m));
    EXPECT_EQ(back.ground(), m.ground());
    EXPECT_TRUE(same_bases(back, m)) << m.name();
  }
}

TEST(MatroidText, ErrorsNameTheLine) {
  EXPECT_NE(parse_message("matroid m rank=2 n=3\ngraph:\na 1 2\nb 1\n").find("line 4"), std::string::npos);
  EXPECT_FALSE(parse_message("nonsense\n").empty());
}

TEST(TreeText, RoundTrip) {
  for (const auto& name : suite_fixture_names()) {
    const Tree t = make_fixture(name).tree;
    const Tree back = parse_tree(format_tree(t));
    EXPECT_EQ(format_tree(back), format_tree(t)) << name;
    EXPECT_TRUE(same_bases(recompose(back), recompose(t))) << name;
  }
}

TEST(TreeText, UnknownNode) {
  try {
    parse_tree("(1sum\n (graphic edges a:1-2)\n (bogus))");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(TreeText, BadGlueIsReported) {
  const Tree t = parse_tree("(2sum (graphic edges a:1-2 d:1-2) (graphic edges d:1-2 c:1-2) glue=zz)");
  try {
    recompose(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadInterface) << e.what();
  }
}

}  // namespace

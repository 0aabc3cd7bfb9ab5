#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "treehopf/parse.hpp"

using namespace treehopf;

TEST_CASE("tree parsing and canonical printing") {
  CHECK(parse_tree("o").encoding() == "o");
  CHECK(parse_tree("o(1)").encoding() == "o(1)");
  CHECK(parse_tree("o(2 1)").encoding() == "o(1 2)");
  CHECK(parse_tree("o(1 3(2))").encoding() == "o(1 3(2))");
  CHECK(parse_tree("o(3(2) 1)").encoding() == "o(1 3(2))");
  CHECK(parse_tree("o").dim() == 1);
  CHECK(parse_tree("o(1 3(2))").dim() == 3);
}

TEST_CASE("series parsing") {
  CHECK(to_string(parse_series("o")) == "1*o");
  CHECK(to_string(parse_series("1*o(1 2) + 1/2*o(1(2))")) == "1*o(1 2) + 1/2*o(1(2))");
  CHECK(to_string(parse_series("o(2 1)")) == "1*o(1 2)");
  // merging, zero dropping, sorting by (degree, encoding)
  CHECK(to_string(parse_series("1/2*o(1 2) + 1/2*o(1 2) + 1*o(1)")) == "1*o(1) + 1*o(1 2)");
  CHECK(to_string(parse_series("1*o(1) + -1*o(1)")) == "0");
  CHECK(to_string(parse_series("-2/4*o(1)")) == "-1/2*o(1)");
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_series("x"), ParseError);
  CHECK_THROWS_AS(parse_series("o(1"), ParseError);
  CHECK_THROWS_AS(parse_series("1*"), ParseError);
  CHECK_THROWS_AS(parse_series("o(0)"), ParseError);
  CHECK_THROWS_AS(parse_series("1/0*o"), ParseError);
  CHECK_THROWS_AS(parse_series("o(3)", 2), ParseError);  // label out of range
  try {
    parse_series("1*o(1) + 1*o(1");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position > 9);
  }
}

TEST_CASE("parse-print-parse is a fixed point") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = test_util::random_series(rng, 5, 3, 8);
    const std::string s = to_string(a);
    auto b = parse_series(s, 3);
    CHECK(b == a);
    CHECK(to_string(b) == s);
  }
}

TEST_CASE("psi expressions") {
  CHECK(psi_expression(parse_tree("o")) == "f(y)");
  CHECK(psi_expression(parse_tree("o(1)")) == "f'(y)[V_1(y)]");
  CHECK(psi_expression(parse_tree("o(1(2))")) == "f'(y)[V_1'(y)[V_2(y)]]");
  CHECK(psi_expression(parse_tree("o(1(3 4 5) 2)")) ==
        "f''(y)[V_1'''(y)[V_3(y),V_4(y),V_5(y)],V_2(y)]");
  // arities beyond three switch to ^(k) notation
  CHECK(psi_expression(parse_tree("o(1 1 1 1)")) ==
        "f^(4)(y)[V_1(y),V_1(y),V_1(y),V_1(y)]");
}

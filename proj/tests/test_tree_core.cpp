#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "test_util.hpp"
#include "treehopf/tree.hpp"

using namespace treehopf;

namespace {

RawTree raw(std::vector<RawTree> children) { return RawTree{0, std::move(children)}; }
RawTree leaf() { return RawTree{}; }

const RawTree kCherry = raw({leaf(), leaf()});
const RawTree kLadder2 = raw({RawTree{0, {leaf()}}});

}  // namespace

TEST_CASE("canonicalize basic forms") {
  CHECK(canonicalize(RawTree{}).encoding() == "o");
  CHECK(canonicalize(kCherry).encoding() == "o(• •)");
  CHECK(canonicalize(kLadder2).encoding() == "o(•(•))");

  // cherry with a decorated child entered in both orders
  RawTree a = raw({RawTree{0, {leaf()}}, leaf()});
  RawTree b = raw({leaf(), RawTree{0, {leaf()}}});
  CHECK(canonicalize(a) == canonicalize(b));
}

TEST_CASE("canonicalize is invariant under child permutations") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    RawTree t = test_util::random_raw_tree(rng, 6);
    const TreeShape ref = canonicalize(t);
    for (int k = 0; k < 50; ++k) {
      RawTree perm = t;
      test_util::shuffle_children(rng, perm);
      CHECK(canonicalize(perm) == ref);
    }
  }
}

TEST_CASE("enumerate_shapes counts match a brute-force oracle") {
  const auto shapes = enumerate_shapes(5);
  std::map<int, int> by_degree;
  for (const auto& s : shapes) ++by_degree[s.degree()];
  CHECK(by_degree[0] == 1);
  CHECK(by_degree[1] == 1);
  CHECK(by_degree[2] == 2);
  CHECK(by_degree[3] == 4);
  CHECK(by_degree[4] == 9);
  CHECK(by_degree[5] == 20);

  for (int d = 0; d <= 5; ++d) {
    const auto oracle = test_util::brute_shapes(d);
    CHECK(static_cast<int>(oracle.size()) == by_degree[d]);
    for (const auto& s : shapes)
      if (s.degree() == d) CHECK(oracle.count(s.encoding()) == 1);
  }

  // sorted, no duplicates
  for (std::size_t i = 1; i < shapes.size(); ++i) CHECK(shapes[i - 1] < shapes[i]);

  CHECK_THROWS(enumerate_shapes(9));
}

TEST_CASE("symmetry_order against brute force") {
  CHECK(symmetry_order(canonicalize(raw({leaf()}))) == 1);
  CHECK(symmetry_order(canonicalize(kCherry)) == 2);
  CHECK(symmetry_order(canonicalize(raw({leaf(), leaf(), leaf()}))) == 6);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    RawTree t = test_util::random_raw_tree(rng, 5);
    CHECK(symmetry_order(canonicalize(t)) == test_util::brute_symmetry_order(t));
  }
}

TEST_CASE("graftings enumerate all assignment maps") {
  const TreeShape cherry = canonicalize(kCherry);
  const TreeShape bullet_t = canonicalize(raw({leaf()}));
  const TreeShape unit = canonicalize(RawTree{});

  // |Gr(cherry, bullet)| = 4: three distinct shapes, middle one twice
  auto g = graftings(cherry, bullet_t);
  REQUIRE(g.size() == 4);
  std::map<std::string, int> mult;
  for (const auto& e : g) ++mult[e.result.encoding()];
  CHECK(mult.size() == 3);
  CHECK(mult["o(• • •)"] == 1);
  CHECK(mult["o(• •(•))"] == 2);
  CHECK(mult["o(•(• •))"] == 1);

  // empty tree grafts to exactly the target
  auto ge = graftings(unit, cherry);
  REQUIRE(ge.size() == 1);
  CHECK(ge[0].result == cherry);

  // bullet onto bullet: cherry and 2-ladder
  auto gb = graftings(bullet_t, bullet_t);
  REQUIRE(gb.size() == 2);
  std::set<std::string> got{gb[0].result.encoding(), gb[1].result.encoding()};
  CHECK(got == std::set<std::string>{"o(• •)", "o(•(•))"});

  // cardinality law |Gr(t,s)| = (1+|s|)^(root arity of t)
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    TreeShape t = canonicalize(test_util::random_raw_tree(rng, 3));
    TreeShape s = canonicalize(test_util::random_raw_tree(rng, 3));
    std::size_t expect = 1;
    for (int k = 0; k < t.root_arity(); ++k) expect *= static_cast<std::size_t>(1 + s.degree());
    CHECK(graftings(t, s).size() == expect);
  }
}

TEST_CASE("root_graft unit, commutativity, associativity") {
  const TreeShape cherry = canonicalize(kCherry);
  const TreeShape bullet_t = canonicalize(raw({leaf()}));
  const TreeShape unit = canonicalize(RawTree{});

  CHECK(root_graft(cherry, bullet_t).encoding() == "o(• • •)");
  CHECK(root_graft(cherry, unit) == cherry);
  CHECK(root_graft(unit, cherry) == cherry);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    TreeShape a = canonicalize(test_util::random_raw_tree(rng, 4));
    TreeShape b = canonicalize(test_util::random_raw_tree(rng, 4));
    TreeShape c = canonicalize(test_util::random_raw_tree(rng, 4));
    CHECK(root_graft(a, b) == root_graft(b, a));
    CHECK(root_graft(root_graft(a, b), c) == root_graft(a, root_graft(b, c)));
  }
}

TEST_CASE("admissible_cuts structure") {
  const TreeShape bullet_t = canonicalize(raw({leaf()}));
  auto bc = admissible_cuts(bullet_t);
  REQUIRE(bc.size() == 2);
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& c : bc) pairs.insert({c.pruned.encoding(), c.remaining.encoding()});
  CHECK(pairs.count({"o", "o(•)"}) == 1);
  CHECK(pairs.count({"o(•)", "o"}) == 1);

  CHECK(admissible_cuts(canonicalize(kLadder2)).size() == 3);

  // 7-vertex tree: root with a cherry-topped branch, a 2-chain, and a leaf.
  // Cutting the cherry-top vertex plus the chain's upper vertex prunes a
  // 4-vertex two-branch tree and leaves a cherry.
  RawTree seven = raw({RawTree{0, {leaf(), leaf()}}, RawTree{0, {leaf()}}, leaf()});
  bool found = false;
  for (const auto& c : admissible_cuts(canonicalize(seven)))
    if (c.pruned.encoding() == "o(• •(• •))" && c.remaining.encoding() == "o(• •)")
      found = true;
  CHECK(found);

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    RawTree t = test_util::random_raw_tree(rng, 6);
    const TreeShape shape = canonicalize(t);
    auto cuts = admissible_cuts(shape);
    CHECK(static_cast<std::int64_t>(cuts.size()) == test_util::brute_antichain_count(t));
    bool has_empty = false, has_full = false;
    for (const auto& c : cuts) {
      CHECK(c.pruned.degree() + c.remaining.degree() == shape.degree());
      if (c.pruned.degree() == 0 && c.remaining == shape) has_empty = true;
      if (c.remaining.degree() == 0 && c.pruned == shape) has_full = true;
    }
    CHECK(has_empty);
    CHECK(has_full);
  }
}

TEST_CASE("decompose_root_branches round-trips") {
  const TreeShape cherry = canonicalize(kCherry);
  auto parts = decompose_root_branches(cherry);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].encoding() == "o(•)");
  CHECK(parts[1].encoding() == "o(•)");

  const TreeShape ladder = canonicalize(kLadder2);
  auto lp = decompose_root_branches(ladder);
  REQUIRE(lp.size() == 1);
  CHECK(lp[0] == ladder);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    TreeShape t = canonicalize(test_util::random_raw_tree(rng, 6));
    TreeShape acc = canonicalize(RawTree{});
    for (const auto& part : decompose_root_branches(t)) {
      CHECK(part.root_arity() == (part.degree() == 0 ? 0 : 1));
      acc = root_graft(acc, part);
    }
    CHECK(acc == t);
  }
}

TEST_CASE("symmetry multiplicativity for disjoint branch shapes") {
  const TreeShape ladder = canonicalize(kLadder2);
  const TreeShape bullet_t = canonicalize(raw({leaf()}));
  CHECK(symmetry_order(root_graft(ladder, bullet_t)) ==
        symmetry_order(ladder) * symmetry_order(bullet_t));
}

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <numeric>
#include <vector>

#include "weakid/errors.hpp"
#include "weakid/group.hpp"
#include "weakid/word.hpp"

using namespace weakid;

namespace {

// Independent permutation oracle (one-line form, left-to-right action).
using Perm = std::vector<int>;

Perm mulPerm(const Perm& s, const Perm& t) {
  Perm r(s.size());
  for (std::size_t p = 0; p < s.size(); ++p) r[p] = t[s[p]];
  return r;
}

bool evenPerm(Perm p) {
  int swaps = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[p[i]]);
      ++swaps;
    }
  return swaps % 2 == 0;
}

// The documented element numbering: even permutations first, lexicographic
// by one-line form within each parity class.
std::vector<Perm> orderedPerms(int n, bool evens_only) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> evens, odds;
  do {
    (evenPerm(p) ? evens : odds).push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  if (!evens_only) evens.insert(evens.end(), odds.begin(), odds.end());
  return evens;
}

}  // namespace

TEST_CASE("symmetric and alternating groups match the permutation oracle") {
  for (int n : {2, 3, 4}) {
    FiniteGroup g = makeSymmetric(n);
    auto perms = orderedPerms(n, false);
    REQUIRE(g.order() == static_cast<int>(perms.size()));
    for (int i = 0; i < g.order(); ++i)
      for (int j = 0; j < g.order(); ++j) {
        Perm prod = mulPerm(perms[i], perms[j]);
        int expected =
            static_cast<int>(std::find(perms.begin(), perms.end(), prod) - perms.begin());
        CHECK(g.mul(i, j) == expected);
      }
  }
  FiniteGroup a4 = makeAlternating(4);
  auto evens = orderedPerms(4, true);
  REQUIRE(a4.order() == 12);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) {
      Perm prod = mulPerm(evens[i], evens[j]);
      int expected = static_cast<int>(std::find(evens.begin(), evens.end(), prod) - evens.begin());
      CHECK(a4.mul(i, j) == expected);
    }
  // alternating(n) ids are a prefix of symmetric(n) ids.
  FiniteGroup s4 = makeSymmetric(4);
  for (int i = 0; i < 12; ++i) CHECK(a4.name(i) == s4.name(i));
}

TEST_CASE("sym:3 element numbering and left-to-right composition") {
  FiniteGroup g = makeSymmetric(3);
  CHECK(g.name(0) == "()");
  CHECK(g.name(1) == "(1 2 3)");
  CHECK(g.name(2) == "(1 3 2)");
  CHECK(g.name(3) == "(2 3)");
  CHECK(g.name(4) == "(1 2)");
  CHECK(g.name(5) == "(1 3)");
  // (1 2) * (1 3): apply (1 2) first, then (1 3) -> (1 2 3).
  CHECK(g.mul(g.elementByName("(1 2)"), g.elementByName("(1 3)")) == g.elementByName("(1 2 3)"));
  CHECK(g.mul(g.elementByName("(1 3)"), g.elementByName("(1 2)")) == g.elementByName("(1 3 2)"));
}

TEST_CASE("group zoo orders and identities") {
  struct Row {
    const char* spec;
    int order;
  };
  for (const Row& r : std::vector<Row>{{"cyclic:1", 1},
                                       {"cyclic:6", 6},
                                       {"dihedral:4", 8},
                                       {"sym:3", 6},
                                       {"sym:4", 24},
                                       {"alt:4", 12},
                                       {"alt:5", 60},
                                       {"q8", 8},
                                       {"elem:2:2", 4},
                                       {"gl:2:3", 48},
                                       {"sl:2:3", 24},
                                       {"gl:2:2", 6},
                                       {"prod(cyclic:2,cyclic:3)", 6}}) {
    FiniteGroup g = makeGroup(r.spec);
    CHECK(g.order() == r.order);
    CHECK(g.identity() == 0);
    CHECK(g.label() == r.spec);
  }
}

TEST_CASE("basic group laws hold on every zoo member") {
  for (const char* spec : {"cyclic:6", "dihedral:4", "sym:3", "q8", "elem:2:2", "sl:2:3"}) {
    FiniteGroup g = makeGroup(spec);
    for (int x = 0; x < g.order(); ++x) {
      CHECK(g.mul(x, g.inv(x)) == g.identity());
      CHECK(g.mul(g.inv(x), x) == g.identity());
      CHECK(g.power(x, g.elementOrder(x)) == g.identity());
      CHECK(g.elementOrder(x) >= 1);
      CHECK(g.order() % g.elementOrder(x) == 0);  // Lagrange
    }
  }
}

TEST_CASE("quaternion relations") {
  FiniteGroup q = makeQuaternion8();
  int i = q.elementByName("i"), j = q.elementByName("j"), k = q.elementByName("k");
  int minus1 = q.elementByName("-1");
  CHECK(q.mul(i, i) == minus1);
  CHECK(q.mul(j, j) == minus1);
  CHECK(q.mul(k, k) == minus1);
  CHECK(q.mul(i, j) == k);
  CHECK(q.mul(j, i) == q.elementByName("-k"));
  CHECK(q.mul(q.mul(i, j), k) == minus1);
  CHECK(q.elementOrder(i) == 4);
  CHECK(q.elementOrder(minus1) == 2);
  CHECK(q.exponent() == 4);
}

TEST_CASE("dihedral relations") {
  FiniteGroup d = makeDihedral(5);
  int r = d.elementByName("r1"), s = d.elementByName("sr0");
  CHECK(d.elementOrder(r) == 5);
  CHECK(d.elementOrder(s) == 2);
  // s r s = r^-1
  CHECK(d.mul(d.mul(s, r), s) == d.inv(r));
  CHECK_FALSE(d.isAbelian());
}

TEST_CASE("exponents and abelianness") {
  CHECK(makeCyclic(6).exponent() == 6);
  CHECK(makeCyclic(6).isAbelian());
  CHECK(makeElementaryAbelian(2, 2).exponent() == 2);
  CHECK(makeElementaryAbelian(2, 2).isAbelian());
  CHECK(makeSymmetric(3).exponent() == 6);
  CHECK_FALSE(makeSymmetric(3).isAbelian());
  CHECK(makeGroup("prod(cyclic:2,cyclic:3)").isAbelian());
  CHECK(makeGroup("prod(cyclic:2,cyclic:3)").exponent() == 6);
}

TEST_CASE("fromTable rejects broken tables") {
  // Not associative: order-3 "table" with a tweak.
  std::vector<std::vector<int>> bad{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  bad[1][1] = 1;  // breaks unique inverses / associativity
  CHECK_THROWS_AS(FiniteGroup::fromTable("bad", {"e", "a", "b"}, bad, {1}), SpecError);

  // Generators that do not generate.
  std::vector<std::vector<int>> c4(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c4[i][j] = (i + j) % 4;
  CHECK_THROWS_AS(FiniteGroup::fromTable("c4", {"0", "1", "2", "3"}, c4, {2}), SpecError);
  CHECK_NOTHROW(FiniteGroup::fromTable("c4", {"0", "1", "2", "3"}, c4, {1}));

  // No identity.
  std::vector<std::vector<int>> no_id{{0, 0}, {0, 0}};
  CHECK_THROWS_AS(FiniteGroup::fromTable("x", {"a", "b"}, no_id, {0}), SpecError);
}

TEST_CASE("order cap is enforced") {
  GroupConfig tight;
  tight.order_cap = 10;
  CHECK_THROWS_AS(makeSymmetric(4, tight), SpecError);
  CHECK_NOTHROW(makeSymmetric(3, tight));
}

TEST_CASE("Cayley file round-trip") {
  FiniteGroup d4 = makeDihedral(4);
  nlohmann::json j;
  j["order"] = d4.order();
  std::vector<std::string> names;
  for (int x = 0; x < d4.order(); ++x) names.push_back(d4.name(x));
  j["names"] = names;
  std::vector<std::vector<int>> table(d4.order(), std::vector<int>(d4.order()));
  for (int x = 0; x < d4.order(); ++x)
    for (int y = 0; y < d4.order(); ++y) table[x][y] = d4.mul(x, y);
  j["table"] = table;
  j["generators"] = d4.generators();
  std::string path = "cayley_roundtrip_test.json";
  {
    std::ofstream out(path);
    out << j;
  }
  FiniteGroup loaded = makeGroup("file:" + path);
  REQUIRE(loaded.order() == d4.order());
  for (int x = 0; x < d4.order(); ++x)
    for (int y = 0; y < d4.order(); ++y) CHECK(loaded.mul(x, y) == d4.mul(x, y));
  std::remove(path.c_str());
}

TEST_CASE("group spec errors") {
  CHECK_THROWS_AS(makeGroup("nope:3"), SpecError);
  CHECK_THROWS_AS(makeGroup("cyclic"), SpecError);
  CHECK_THROWS_AS(makeGroup("cyclic:x"), SpecError);
  CHECK_THROWS_AS(makeGroup("gl:3:2"), SpecError);
  CHECK_THROWS_AS(makeGroup("gl:2:4"), SpecError);
  CHECK_THROWS_AS(makeGroup("sym:9"), SpecError);
  CHECK_THROWS_AS(makeGroup("prod(cyclic:2)"), SpecError);
  CHECK_THROWS_AS(makeGroup("file:/does/not/exist.json"), SpecError);
}

TEST_CASE("evaluateWord") {
  FiniteGroup g = makeSymmetric(3);
  int a = g.elementByName("(1 2 3)"), b = g.elementByName("(2 3)");
  // [a, b] = a b a^-1 b^-1 evaluated against explicit table arithmetic.
  int expected = g.mul(g.mul(g.mul(a, b), g.inv(a)), g.inv(b));
  CHECK(evaluateWord(g, parseWord("[g1,g2]"), {{1, a}, {2, b}}) == expected);
  CHECK(evaluateWord(g, parseWord("g1^3"), {{1, a}}) == g.identity());
  CHECK(evaluateWord(g, parseWord("g1^-1"), {{1, a}}) == g.inv(a));
  CHECK(evaluateWord(g, parseWord("()"), {}) == g.identity());
  CHECK_THROWS_AS(evaluateWord(g, parseWord("g1*g2"), {{1, a}}), Error);
}

TEST_CASE("directProduct structure") {
  FiniteGroup p = directProduct(makeSymmetric(3), makeCyclic(2));
  CHECK(p.order() == 12);
  CHECK(p.identity() == 0);
  // Coordinates multiply independently: names encode the pairing.
  CHECK(p.name(0) == "((),0)");
  CHECK_FALSE(p.isAbelian());
  CHECK(p.exponent() == 6);
}

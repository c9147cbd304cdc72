#include <doctest.h>

#include <random>
#include <vector>

#include "weakid/errors.hpp"
#include "weakid/group.hpp"
#include "weakid/subgroup.hpp"
#include "weakid/weakid.hpp"
#include "weakid/word.hpp"

using namespace weakid;

namespace {

TSubgroupGens gens(std::initializer_list<const char*> texts) {
  std::vector<std::string> v(texts.begin(), texts.end());
  return TSubgroupGens::fromStrings(v);
}

Word randomWord(std::mt19937_64& rng, int max_len, int vars) {
  Word w;
  int len = 1 + static_cast<int>(rng() % max_len);
  for (int i = 0; i < len; ++i)
    w = w * Word::generator(1 + static_cast<int>(rng() % vars), (rng() & 1) ? 1 : -1);
  return w;
}

}  // namespace

TEST_CASE("TSubgroupGens canonicalizes") {
  TSubgroupGens a = gens({"g1*g2", "g1", "g1"});
  TSubgroupGens b = gens({"g1", "g1 g2"});
  CHECK(a.words() == b.words());
  CHECK(a.words().size() == 2);
}

TEST_CASE("check_weak examples on sym:3") {
  FiniteGroup g = makeSymmetric(3);

  // The identity word is a weak identity at every height.
  CHECK(checkWeak(g, gens({"()"}), 1).status == Verdict::Status::Holds);

  // The commutator holds at height 2 but not at height 1.
  CHECK(checkWeak(g, gens({"[g1,g2]"}), 2).status == Verdict::Status::Holds);
  CHECK(checkWeak(g, gens({"[g1,g2]"}), 1).status == Verdict::Status::Fails);

  // g1^2 fails at height 5 with the all-copies 3-cycle witness.
  Verdict v = checkWeak(g, gens({"g1^2"}), 5);
  REQUIRE(v.status == Verdict::Status::Fails);
  REQUIRE(v.witness.size() == 5);
  for (const auto& copy : v.witness) CHECK(copy.at("g1") == "(1 2 3)");
  CHECK(v.failing_selection == std::vector<std::string>(5, "g1^2"));

  // g1^6 kills everything: the exponent of sym:3 is 6.
  CHECK(checkWeak(g, gens({"g1^6"}), 1).status == Verdict::Status::Holds);
}

TEST_CASE("check_weak input validation") {
  FiniteGroup g = makeSymmetric(3);
  CHECK_THROWS_AS(checkWeak(g, gens({"g1"}), 0), Error);
  CHECK_THROWS_AS(checkWeak(g, TSubgroupGens(), 1), Error);
}

TEST_CASE("min_height desk values") {
  CHECK(minHeight(makeCyclic(6), gens({"g1^6"})).height == 1);
  CHECK(minHeight(makeSymmetric(3), gens({"[g1,g2]"})).height == 2);
  CHECK(minHeight(makeQuaternion8(), gens({"[g1,g2]"})).height == 2);
  // g1 never becomes weak in a nontrivial group: no height within cutoff.
  HeightReport r = minHeight(makeCyclic(6), gens({"g1"}));
  CHECK_FALSE(r.height.has_value());
  CHECK_FALSE(r.unknown);
}

TEST_CASE("default cutoff") {
  CHECK(defaultHeightCutoff(makeSymmetric(3)) == 5);   // ceil(log2 6) + 2
  CHECK(defaultHeightCutoff(makeCyclic(1)) == 3);      // max(2, 1)
  CHECK(defaultHeightCutoff(makeAlternating(5)) == 8); // ceil(log2 60) + 2
}

TEST_CASE("height monotonicity on random word sets") {
  std::mt19937_64 rng(60601);
  for (const char* spec : {"sym:3", "q8", "dihedral:4"}) {
    FiniteGroup g = makeGroup(spec);
    for (int trial = 0; trial < 15; ++trial) {
      TSubgroupGens s({randomWord(rng, 6, 2)});
      for (int n = 1; n <= 2; ++n) {
        if (checkWeak(g, s, n).status == Verdict::Status::Holds)
          CHECK(checkWeak(g, s, n + 1).status == Verdict::Status::Holds);
      }
    }
  }
}

TEST_CASE("check_weak_modulo examples") {
  // S3 / <squares> = S3 / A3 = C2; in it g1^2 collapses everywhere.
  FiniteGroup s3 = makeSymmetric(3);
  Verdict v = checkWeakModulo(s3, gens({"g1^2"}), gens({"[g1,g2]"}), 1);
  CHECK(v.status == Verdict::Status::Holds);
  CHECK(v.verbal_subgroup_order == 3);
  CHECK(v.quotient_order == 2);

  // Cubes of 2-cycles are 2-cycles, so <g1^3>(S3) = S3 and the quotient is
  // trivial: everything holds modulo it.
  Verdict w = checkWeakModulo(s3, gens({"g1^2"}), gens({"g1^3"}), 1);
  CHECK(w.status == Verdict::Status::Holds);
  CHECK(w.verbal_subgroup_order == 6);
  CHECK(w.quotient_order == 1);

  // Modulo the trivial verbal subgroup is the plain check.
  Verdict plain = checkWeakModulo(s3, gens({"g1"}), TSubgroupGens(), 1);
  CHECK(plain.status == Verdict::Status::Fails);
  CHECK(plain.verbal_subgroup_order == 1);
  CHECK(plain.quotient_order == 6);

  // A5/[A5,A5] is trivial, so {g1} holds modulo the commutator words.
  FiniteGroup a5 = makeAlternating(5);
  Verdict m = checkWeakModulo(a5, gens({"g1"}), gens({"[g1,g2]"}), 1);
  CHECK(m.status == Verdict::Status::Holds);
  CHECK(m.quotient_order == 1);
}

TEST_CASE("weak* chains") {
  FiniteGroup s3 = makeSymmetric(3);
  // {g1^2} modulo {[g1,g2]} at 1, then {[g1,g2]} modulo {()} at 2.
  ChainReport good = verifyWeakStarChain(
      s3, {gens({"g1^2"}), gens({"[g1,g2]"}), gens({"()"})}, {1, 2});
  CHECK(good.overall == Verdict::Status::Holds);
  REQUIRE(good.steps.size() == 2);
  CHECK(good.steps[0].status == Verdict::Status::Holds);
  CHECK(good.steps[1].status == Verdict::Status::Holds);

  // {g1} is not weak modulo the trivial set in a nontrivial group.
  ChainReport bad = verifyWeakStarChain(s3, {gens({"g1"}), gens({"()"})}, {3});
  CHECK(bad.overall == Verdict::Status::Fails);

  // Trivial chain on cyclic(2).
  ChainReport c2 = verifyWeakStarChain(makeCyclic(2), {gens({"g1^2"}), gens({"()"})}, {1});
  CHECK(c2.overall == Verdict::Status::Holds);

  CHECK_THROWS_AS(verifyWeakStarChain(s3, {gens({"g1"})}, {}), Error);
  CHECK_THROWS_AS(verifyWeakStarChain(s3, {gens({"g1"}), gens({"()"})}, {1, 2}), Error);
}

TEST_CASE("abelian equivalence of weak and plain identities") {
  std::mt19937_64 rng(123123);
  for (const char* spec : {"cyclic:6", "elem:2:2"}) {
    FiniteGroup g = makeGroup(spec);
    long long exponent = g.exponent();
    for (int trial = 0; trial < 25; ++trial) {
      Word w = randomWord(rng, 6, 2);
      bool identity = true;
      for (const auto& [var, sum] : exponentSums(w))
        identity = identity && sum % exponent == 0;
      // Weak at some height iff an identity; height 1 decides for abelian G.
      CHECK((checkWeak(g, TSubgroupGens({w}), 1).status == Verdict::Status::Holds) == identity);
    }
  }
}

TEST_CASE("union corollary: heights add") {
  FiniteGroup s3 = makeSymmetric(3);
  TSubgroupGens s1 = gens({"[g1,g2]"});  // height 2
  TSubgroupGens s2 = gens({"g1^6"});     // height 1
  std::vector<Word> both = s1.words();
  for (const Word& w : s2.words()) both.push_back(w);
  CHECK(checkWeak(s3, TSubgroupGens(both), 3).status == Verdict::Status::Holds);

  FiniteGroup q8 = makeQuaternion8();
  TSubgroupGens u1 = gens({"[g1,g2]"});
  TSubgroupGens u2 = gens({"g1^4"});
  std::vector<Word> merged = u1.words();
  for (const Word& w : u2.words()) merged.push_back(w);
  CHECK(checkWeak(q8, TSubgroupGens(merged), 3).status == Verdict::Status::Holds);
}

TEST_CASE("sampled T-subgroup elements stay weak (Theorem gen instances)") {
  SampleBudget budget;
  budget.count = 8;
  for (const char* spec : {"sym:3", "q8"}) {
    FiniteGroup g = makeGroup(spec);
    TSubgroupGens s = gens({"[g1,g2]"});
    REQUIRE(checkWeak(g, s, 2).status == Verdict::Status::Holds);
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
      auto samples = sampleTSubgroup(s, budget, seed);
      std::vector<Word> nonempty;
      for (const Word& w : samples)
        if (!w.empty()) nonempty.push_back(w);
      if (nonempty.empty()) continue;
      CHECK(checkWeak(g, TSubgroupGens(nonempty), 2).status == Verdict::Status::Holds);
    }
  }
}

TEST_CASE("sample_t_subgroup is deterministic and lands in the verbal image") {
  TSubgroupGens s = gens({"[g1,g2]"});
  SampleBudget budget;
  CHECK(sampleTSubgroup(s, budget, 42) == sampleTSubgroup(s, budget, 42));

  // Every sampled word evaluates into the verbal image, in every group.
  FiniteGroup g = makeSymmetric(3);
  Subgroup image = verbalImage(g, s.words());
  std::mt19937_64 rng(5);
  for (const Word& w : sampleTSubgroup(s, budget, 7)) {
    for (int trial = 0; trial < 10; ++trial) {
      Assignment a;
      for (int v : w.variables()) a[v] = static_cast<int>(rng() % g.order());
      CHECK(image.contains(evaluateWord(g, w, a)));
    }
  }
}

TEST_CASE("substituteFresh") {
  // Substituting g3^2 for g2 in [g1,g2].
  CHECK(substituteFresh(parseWord("[g1,g2]"), {{2, parseWord("g3^2")}}, 2) ==
        parseWord("[g1,g3^2]"));
  // A single variable replaced by a commutator, fresh above index 1.
  CHECK(substituteFresh(parseWord("g1"), {{1, parseWord("[g1,g2]")}}, 1) ==
        parseWord("[g2,g3]"));
  // Two positions get disjoint fresh blocks in ascending key order.
  CHECK(substituteFresh(parseWord("[g1,g2]"), {{1, parseWord("g3^2")}, {2, parseWord("g4^2")}},
                        2) == parseWord("[g3^2,g4^2]"));
}

TEST_CASE("substitution_generators") {
  SampleBudget budget;
  budget.count = 5;
  TSubgroupGens out =
      substitutionGenerators(parseWord("[g1,g2]"), {{2, gens({"g3^2"})}}, budget, 9);
  CHECK_FALSE(out.empty());
  // Unsubstituted variables keep their identity: g1 still occurs.
  for (const Word& w : out.words()) {
    if (w.empty()) continue;
    auto vars = w.variables();
    CHECK(std::find(vars.begin(), vars.end(), 1) != vars.end());
  }
  CHECK_THROWS_AS(substitutionGenerators(parseWord("g1"), {{5, gens({"g1"})}}, budget, 0), Error);
}

TEST_CASE("substitutedImage") {
  FiniteGroup g = makeSymmetric(3);
  Subgroup a3 = verbalImage(g, {parseWord("[g1,g2]")});
  // Commutators [a, b] with a ranging over A3 and b over all of S3 generate A3.
  Subgroup img = substitutedImage(g, parseWord("[g1,g2]"), {{1, a3}});
  CHECK(img.members() == std::vector<int>{0, 1, 2});
  // With no positions pinned this is the plain verbal image.
  Subgroup full = substitutedImage(g, parseWord("[g1,g2]"), {});
  CHECK(full.members() == a3.members());
}

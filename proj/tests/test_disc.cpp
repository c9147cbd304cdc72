#include <doctest.h>

#include <random>
#include <vector>

#include "weakid/disc.hpp"
#include "weakid/errors.hpp"
#include "weakid/group.hpp"
#include "weakid/homsearch.hpp"
#include "weakid/word.hpp"

using namespace weakid;

TEST_CASE("the trivial group is discriminating") {
  DiscVerdict v = isDiscriminatingFinite(makeCyclic(1));
  CHECK(v.status == DiscVerdict::Status::Discriminating);
  CHECK(v.witness_pair.has_value());
  CHECK(v.certificate.empty());
}

TEST_CASE("cyclic:2 is not discriminating, certificate is the full nontrivial set") {
  DiscVerdict v = isDiscriminatingFinite(makeCyclic(2));
  REQUIRE(v.status == DiscVerdict::Status::NotDiscriminating);
  // Any hom to Z2 is (a,b) -> alpha*a + beta*b; alpha, beta, alpha+beta
  // cannot all be nonzero over the 2-element field.
  std::vector<std::pair<int, int>> expected{{0, 1}, {1, 0}, {1, 1}};
  CHECK(v.certificate_ids == expected);
}

TEST_CASE("nontrivial groups in the zoo are not discriminating") {
  for (const char* spec : {"cyclic:2", "cyclic:6", "sym:3", "q8", "elem:2:2", "dihedral:4"}) {
    FiniteGroup g = makeGroup(spec);
    CAPTURE(spec);
    DiscVerdict v = isDiscriminatingFinite(g);
    REQUIRE(v.status == DiscVerdict::Status::NotDiscriminating);
    CHECK_FALSE(v.certificate_ids.empty());
    // Certificate soundness: every product hom kills a certificate element.
    auto endos = endomorphisms(g);
    auto pairs = productHomPairs(g, endos);
    CHECK(certificateUnseparable(g, endos, pairs, v.certificate_ids));
    // Minimality: dropping any single element makes the set separable.
    for (std::size_t k = 0; k < v.certificate_ids.size(); ++k) {
      auto reduced = v.certificate_ids;
      reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(k));
      CHECK_FALSE(certificateUnseparable(g, endos, pairs, reduced));
    }
  }
}

TEST_CASE("verdict is UNKNOWN above the endomorphism cap") {
  CHECK(isDiscriminatingFinite(makeAlternating(5)).status == DiscVerdict::Status::Unknown);
}

TEST_CASE("extendDiscriminationFinite") {
  // The trivial group: the induction composes to the trivial map.
  FiniteGroup triv = makeCyclic(1);
  auto ext = extendDiscriminationFinite(triv, 3, {{0, 0, 0}});
  REQUIRE(ext.has_value());
  CHECK(ext->steps.size() == 2);
  CHECK(applyExtension(triv, *ext, {0, 0, 0}) == 0);

  // n = 1 is the identity map.
  auto one = extendDiscriminationFinite(triv, 1, {{0}});
  REQUIRE(one.has_value());
  CHECK(applyExtension(triv, *one, {0}) == 0);

  // Non-discriminating groups yield no map.
  CHECK_FALSE(extendDiscriminationFinite(makeCyclic(2), 2, {{0, 1}, {1, 0}, {1, 1}}).has_value());

  // Unknown verdicts surface as budget errors.
  CHECK_THROWS_AS(extendDiscriminationFinite(makeAlternating(5), 2, {}), BudgetError);
  CHECK_THROWS_AS(extendDiscriminationFinite(triv, 2, {{0}}), Error);  // arity mismatch
}

TEST_CASE("free-abelian discrimination witness, rank 1 desk example") {
  FreeAbelianGroup z1(1);
  AbelianHom h = extendDiscriminationAbelian(z1, 2, {{{1}, {2}}, {{2}, {-1}}});
  // Canonical scan order (entries 0, 1, -1, ... by increasing max-norm)
  // reaches the matrix (0 1) first: values 2 and -1, both nonzero.
  CHECK(h.blocks[0][0][0] == 0);
  CHECK(h.blocks[1][0][0] == 1);
  CHECK(h.apply({{1}, {2}}) == IntVector{2});
  CHECK(h.apply({{2}, {-1}}) == IntVector{-1});
}

TEST_CASE("free-abelian witnesses re-verify on random target sets") {
  std::mt19937_64 rng(424242);
  for (int rank : {1, 2}) {
    FreeAbelianGroup a(rank);
    for (int trial = 0; trial < 20; ++trial) {
      int n = 1 + static_cast<int>(rng() % 2);
      int m = 1 + static_cast<int>(rng() % 4);
      std::vector<std::vector<IntVector>> targets;
      for (int t = 0; t < m; ++t) {
        std::vector<IntVector> tuple(n, IntVector(rank, 0));
        bool nonzero = false;
        while (!nonzero) {
          for (auto& vec : tuple)
            for (auto& x : vec) {
              x = static_cast<long long>(rng() % 7) - 3;
              nonzero = nonzero || x != 0;
            }
        }
        targets.push_back(tuple);
      }
      AbelianHom h = extendDiscriminationAbelian(a, n, targets);
      for (const auto& t : targets) {
        IntVector out = h.apply(t);
        bool killed = true;
        for (long long x : out) killed = killed && x == 0;
        CHECK_FALSE(killed);
      }
    }
  }
}

TEST_CASE("free-abelian search edge cases") {
  FreeAbelianGroup z1(1);
  // Zero targets carry no constraint; the zero matrix is fine.
  AbelianHom zero = extendDiscriminationAbelian(z1, 2, {{{0}, {0}}});
  CHECK(zero.apply({{5}, {7}}) == IntVector{0});
  // An impossible norm cap raises a budget error.
  CHECK_THROWS_AS(extendDiscriminationAbelian(z1, 1, {{{1}}}, 0), BudgetError);
  CHECK_THROWS_AS(FreeAbelianGroup(0), Error);
  CHECK_THROWS_AS(extendDiscriminationAbelian(z1, 2, {{{1}}}), Error);  // arity mismatch
}

TEST_CASE("abelian weak identities are exactly the identities") {
  FreeAbelianGroup z2(2);

  AbelianVerdict comm = abelianWeakEqualsIdentity(parseWord("[g1,g2]"), z2);
  CHECK(comm.is_identity);
  CHECK(comm.exponent_sums.empty());

  AbelianVerdict square = abelianWeakEqualsIdentity(parseWord("g1^2"), z2);
  REQUIRE_FALSE(square.is_identity);
  CHECK(square.witness.at(1) == IntVector{1, 0});

  AbelianVerdict mixed = abelianWeakEqualsIdentity(parseWord("g1^3*g2^-3*[g1,g2]"), z2);
  REQUIRE_FALSE(mixed.is_identity);
  CHECK(mixed.exponent_sums == ExponentVector{{1, 3}, {2, -3}});
  CHECK(mixed.witness.at(1) == IntVector{1, 0});
  CHECK(mixed.witness.at(2) == IntVector{0, 0});

  // The witness really is non-collapsing: the exponent form evaluates to a
  // nonzero vector under it.
  IntVector value(z2.rank, 0);
  for (const auto& [var, sum] : mixed.exponent_sums)
    for (int i = 0; i < z2.rank; ++i) value[i] += sum * mixed.witness.at(var)[i];
  CHECK(value != IntVector(z2.rank, 0));
}

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weakid/homsearch.hpp"
#include "weakid/word.hpp"

namespace weakid {

// Free-abelian group Z^rank. Elements are integer vectors; homomorphisms
// are integer matrices.
struct FreeAbelianGroup {
  int rank;
  explicit FreeAbelianGroup(int r);
};

using IntVector = std::vector<long long>;

struct DiscVerdict {
  enum class Status { Discriminating, NotDiscriminating, Unknown };
  Status status = Status::Unknown;
  std::string group_label;
  // NOT_DISCRIMINATING: a greedy-minimized set of nontrivial elements of
  // G x G that every homomorphism G x G -> G fails to separate (kills at
  // least one of). Ids plus names for reporting.
  std::vector<std::pair<int, int>> certificate_ids;
  std::vector<std::pair<std::string, std::string>> certificate;
  // DISCRIMINATING: indices into the endomorphism list of a pair (phi, psi)
  // whose product hom (a, b) -> phi(a) * psi(b) kills no nontrivial element.
  std::optional<std::pair<int, int>> witness_pair;
};

// Decides the discriminating property by testing the single hardest
// instance: the set of all nontrivial elements of G x G against every
// homomorphism G x G -> G (as commuting endomorphism pairs). UNKNOWN when
// the group exceeds the endomorphism cap.
DiscVerdict isDiscriminatingFinite(const FiniteGroup& g, int endo_cap = 24);

// Re-verification of a NOT certificate: true iff every product hom kills at
// least one certificate element.
bool certificateUnseparable(const FiniteGroup& g, const std::vector<GroupEndomorphism>& endos,
                            const std::vector<std::pair<int, int>>& pairs,
                            const std::vector<std::pair<int, int>>& certificate);

// A homomorphism G^n -> G composed from product homs by folding the two
// leading coordinates, one step at a time: step i is the endomorphism pair
// applied at fold i (so there are n - 1 steps; n = 1 is the identity map).
struct DiscExtension {
  int n = 1;
  std::vector<std::pair<GroupEndomorphism, GroupEndomorphism>> steps;
};

int applyExtension(const FiniteGroup& g, const DiscExtension& ext, const std::vector<int>& tuple);

// Lemma-style induction: a map G^n -> G killing exactly the trivial
// targets, built by repeatedly choosing a product hom that separates the
// nontrivial leading pairs. nullopt when G is not discriminating (then no
// such map need exist); throws BudgetError when the verdict is UNKNOWN.
std::optional<DiscExtension> extendDiscriminationFinite(const FiniteGroup& g, int n,
                                                        const std::vector<std::vector<int>>& targets,
                                                        int endo_cap = 24);

// Homomorphism A^n -> A for A = Z^rank: block matrix with one rank x rank
// integer block per coordinate.
struct AbelianHom {
  int rank = 1;
  int n = 1;
  std::vector<std::vector<IntVector>> blocks;  // blocks[i] = rank x rank block for coordinate i

  IntVector apply(const std::vector<IntVector>& tuple) const;
};

// Finds a hom Z^rank x ... x Z^rank -> Z^rank killing none of the given
// nonzero targets (each target: n vectors of length rank). The excluded
// matrices form a finite union of hyperplanes, so the scan over increasing
// max-norm (entries ordered 0, 1, -1, 2, -2, ...) terminates; throws
// BudgetError beyond norm_cap. Targets containing a zero tuple are killed
// by every hom and are skipped.
AbelianHom extendDiscriminationAbelian(const FreeAbelianGroup& a, int n,
                                       const std::vector<std::vector<IntVector>>& targets,
                                       int norm_cap = 8);

struct AbelianVerdict {
  bool is_identity = false;
  ExponentVector exponent_sums;
  // When not an identity: one assignment (generator -> vector), shared by
  // all copies, under which the word value is nonzero; valid at every
  // height since commuting is automatic in abelian groups.
  std::map<int, IntVector> witness;
  std::string explanation;
};

// A word is a weak identity on a free-abelian group iff it is an identity
// there, iff its exponent sums all vanish.
AbelianVerdict abelianWeakEqualsIdentity(const Word& w, const FreeAbelianGroup& a);

}  // namespace weakid

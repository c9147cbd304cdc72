#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "weakid/group.hpp"
#include "weakid/word.hpp"

namespace weakid {

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t assignments_tested = 0;
  std::uint64_t centralizer_prunes = 0;
  double wall_ms = 0.0;  // excluded from the determinism contract

  SearchStats& operator+=(const SearchStats& o) {
    nodes += o.nodes;
    assignments_tested += o.assignments_tested;
    centralizer_prunes += o.centralizer_prunes;
    wall_ms += o.wall_ms;
    return *this;
  }
};

struct SearchBudget {
  std::uint64_t node_cap = 100'000'000;
  double time_cap_seconds = 60.0;
  int threads = 1;
};

// Generator images for N copies of the free group mapping into one group.
// Valid only when every image of copy j commutes with every image of copy
// k for j != k (that is what a homomorphism out of a direct product needs).
struct MultiCopyAssignment {
  std::vector<Assignment> copies;
};

enum class SearchStatus { Found, Exhausted, Capped };

struct SearchResult {
  SearchStatus status;
  std::optional<MultiCopyAssignment> witness;
  SearchStats stats;
};

// Searches for a cross-commuting multi-copy assignment under which every
// target word evaluates to a nonidentity element (a witness that the
// targets are NOT killed at this height). Canonical order: copy by copy,
// variable by variable, element ids ascending; the domain for copy j is
// restricted to the intersection of the centralizers of all images already
// placed in other copies. The returned witness is the canonically least
// one regardless of thread count; Capped is reported distinctly from
// exhaustion and is never a false negative.
SearchResult findNoncollapsingMulticopy(const FiniteGroup& g, const std::vector<Word>& targets,
                                        const SearchBudget& budget = {});

// Post-hoc check: cross-commuting holds and every word value is nonidentity.
bool verifyMulticopy(const FiniteGroup& g, const std::vector<Word>& targets,
                     const MultiCopyAssignment& mca);

// Endomorphism of a finite group as a full element map plus the generator
// images it was built from. The map preserves the whole table.
struct GroupEndomorphism {
  std::vector<int> generator_images;
  std::vector<int> map;
};

// Complete list of endomorphisms, found by trying every generator-image
// tuple against a BFS factorization of each element and verifying the
// resulting map on the full table. Throws BudgetError above `cap`.
std::vector<GroupEndomorphism> endomorphisms(const FiniteGroup& g, int cap = 24);

// Index pairs (i, j) into `endos` whose images commute elementwise; these
// are exactly the pairs for which (a, b) -> endos[i](a) * endos[j](b) is a
// homomorphism G x G -> G.
std::vector<std::pair<int, int>> productHomPairs(const FiniteGroup& g,
                                                 const std::vector<GroupEndomorphism>& endos);

}  // namespace weakid

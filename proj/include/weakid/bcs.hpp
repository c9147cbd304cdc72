#pragma once

#include <vector>

#include "weakid/group.hpp"
#include "weakid/subgroup.hpp"

namespace weakid {

// A maximal strictly descending centralizer chain over a nested commuting
// set: centralizers[0] = Cen(emptyset) = G, centralizers[i] = Cen of the
// first i added elements. Chain length = centralizers.size() (the leading
// G is counted), so abelian groups have length 1.
struct CentralizerChain {
  std::vector<int> added_elements;
  std::vector<Subgroup> centralizers;
  bool complete = true;  // false when the depth cap truncated the search

  int length() const { return static_cast<int>(centralizers.size()); }
};

// Backtracking search for the longest chain; extends the commuting set only
// by elements that strictly shrink the running centralizer, one
// representative per resulting centralizer. Returns the lexicographically
// least chain of maximal length.
CentralizerChain maxCentralizerChain(const FiniteGroup& g, int cap = 64);

// Chain length; an upper bound for the height of [g1,g2] as a weak
// identity in g. Throws BudgetError when the chain search was truncated.
int bcsHeightBound(const FiniteGroup& g, int cap = 64);

}  // namespace weakid

#include "weakid/bcs.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "weakid/errors.hpp"

namespace weakid {

namespace {

struct ChainSearch {
  const FiniteGroup& g;
  int cap;
  std::vector<int> current;
  std::vector<int> best;
  bool truncated = false;

  void dfs(const std::vector<char>& cen) {
    if (current.size() > best.size()) best = current;
    if (static_cast<int>(current.size()) + 1 >= cap) {
      truncated = true;
      return;
    }
    // One representative (the least element) per resulting centralizer.
    std::map<std::vector<char>, int> seen;
    for (int x = 0; x < g.order(); ++x) {
      if (!cen[x]) continue;  // must commute with everything placed so far
      std::vector<char> next(cen);
      bool shrank = false;
      for (int y = 0; y < g.order(); ++y)
        if (next[y] && !g.commutes(x, y)) {
          next[y] = 0;
          shrank = true;
        }
      if (!shrank) continue;
      seen.emplace(std::move(next), x);  // keeps the least representative
    }
    // Recurse in ascending element order so the first maximal chain found
    // is the lexicographically least one.
    std::vector<std::pair<int, const std::vector<char>*>> ordered;
    for (const auto& [next, x] : seen) ordered.emplace_back(x, &next);
    std::sort(ordered.begin(), ordered.end());
    for (const auto& [x, next] : ordered) {
      current.push_back(x);
      dfs(*next);
      current.pop_back();
    }
  }
};

}  // namespace

CentralizerChain maxCentralizerChain(const FiniteGroup& g, int cap) {
  if (cap < 1) throw Error("cap must be >= 1");
  ChainSearch search{g, cap, {}, {}, false};
  std::vector<char> whole(g.order(), 1);
  search.dfs(whole);

  CentralizerChain chain;
  chain.added_elements = search.best;
  chain.complete = !search.truncated;
  std::vector<int> prefix;
  chain.centralizers.push_back(centralizer(g, prefix));
  for (int x : chain.added_elements) {
    prefix.push_back(x);
    chain.centralizers.push_back(centralizer(g, prefix));
  }
  return chain;
}

int bcsHeightBound(const FiniteGroup& g, int cap) {
  CentralizerChain chain = maxCentralizerChain(g, cap);
  if (!chain.complete) throw BudgetError("centralizer chain search hit the depth cap");
  return chain.length();
}

}  // namespace weakid

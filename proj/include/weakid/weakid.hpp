#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weakid/group.hpp"
#include "weakid/homsearch.hpp"
#include "weakid/subgroup.hpp"
#include "weakid/word.hpp"

namespace weakid {

// Generating words of a verbal subgroup; canonically sorted and deduped,
// so semantically equal sets compare equal.
class TSubgroupGens {
 public:
  TSubgroupGens() = default;
  explicit TSubgroupGens(std::vector<Word> words);
  static TSubgroupGens fromStrings(const std::vector<std::string>& texts);

  const std::vector<Word>& words() const { return words_; }
  bool empty() const { return words_.empty(); }

 private:
  std::vector<Word> words_;
};

struct Verdict {
  enum class Status { Holds, Fails, Unknown };
  Status status = Status::Unknown;
  int height = 0;
  std::string group_label;
  std::vector<std::string> words;
  // Populated iff status == Fails:
  std::vector<std::string> failing_selection;
  std::optional<MultiCopyAssignment> witness_ids;
  std::vector<std::map<std::string, std::string>> witness;  // per copy, "gN" -> element name
  SearchStats stats;
  std::uint64_t selections_tested = 0;
  // Populated by the modulo variant:
  std::optional<int> verbal_subgroup_order;
  std::optional<int> quotient_order;
};

// HOLDS iff for every multiset of N words from S and every cross-commuting
// multi-copy assignment, some chosen word evaluates to the identity in its
// copy. Word selections are enumerated as multisets (permutation symmetry
// of the direct product), canonically ordered; FAILS carries the first
// witness in canonical order.
Verdict checkWeak(const FiniteGroup& g, const TSubgroupGens& s, int height,
                  const SearchBudget& budget = {});

struct HeightReport {
  std::optional<int> height;  // least N <= cutoff with HOLDS
  bool unknown = false;       // a budget cap blocked the scan
  std::vector<Verdict> per_height;
};

int defaultHeightCutoff(const FiniteGroup& g);

// Scans N = 1, 2, ... up to cutoff (0 = default: ceil(log2 |G|) + 2).
HeightReport minHeight(const FiniteGroup& g, const TSubgroupGens& s, int cutoff = 0,
                       const SearchBudget& budget = {});

// Weak identities modulo a verbal subgroup: checkWeak in G / H(G). An
// empty H denotes the trivial verbal subgroup.
Verdict checkWeakModulo(const FiniteGroup& g, const TSubgroupGens& s, const TSubgroupGens& h,
                        int height, const SearchBudget& budget = {},
                        const VerbalBudget& vbudget = {});

struct ChainReport {
  std::vector<Verdict> steps;
  Verdict::Status overall = Verdict::Status::Unknown;
};

// Verifies a weak* chain S_0, ..., S_n: step i checks S_{i-1} modulo S_i at
// heights[i-1]. Overall HOLDS iff every step holds.
ChainReport verifyWeakStarChain(const FiniteGroup& g, const std::vector<TSubgroupGens>& chain,
                                const std::vector<int>& heights, const SearchBudget& budget = {},
                                const VerbalBudget& vbudget = {});

struct SampleBudget {
  int factors = 2;   // max factors per product
  int word_len = 3;  // max letters per endomorphism image word
  int vars = 3;      // alphabet size for image words
  int count = 10;    // samples to draw
};

// Pseudorandom elements of the verbal subgroup generated by S: products of
// endomorphism images of S-words (and their inverses). Deterministic under
// the seed.
std::vector<Word> sampleTSubgroup(const TSubgroupGens& s, const SampleBudget& budget,
                                  std::uint64_t seed);

// Replaces each mapped variable of f by `repl[var]` re-indexed to fresh
// variables above fresh_base (fresh blocks allocated in ascending key
// order). Building block of substitutionGenerators.
Word substituteFresh(const Word& f, const std::map<int, Word>& repl, int fresh_base);

// Budget-bounded slice of the generating set of the substitution verbal
// subgroup: f with each mapped variable replaced by samples from its
// T-subgroup, fresh-indexed above the variables of f.
TSubgroupGens substitutionGenerators(const Word& f, const std::map<int, TSubgroupGens>& positions,
                                     const SampleBudget& budget, std::uint64_t seed);

// Exact image in G of the substitution verbal subgroup: values of f with
// mapped variables ranging over the given subgroups and the remaining
// variables over all of G, closed into a subgroup.
Subgroup substitutedImage(const FiniteGroup& g, const Word& f,
                          const std::map<int, Subgroup>& positions,
                          const VerbalBudget& budget = {});

}  // namespace weakid

#include "weakid/weakid.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "weakid/errors.hpp"

namespace weakid {

TSubgroupGens::TSubgroupGens(std::vector<Word> words) : words_(std::move(words)) {
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

TSubgroupGens TSubgroupGens::fromStrings(const std::vector<std::string>& texts) {
  std::vector<Word> words;
  for (const auto& t : texts) words.push_back(parseWord(t));
  return TSubgroupGens(std::move(words));
}

namespace {

// Multisets of size n over {0..k-1} as nondecreasing index tuples, in
// lexicographic order.
std::vector<std::vector<int>> multisetSelections(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  while (true) {
    out.push_back(cur);
    int pos = n - 1;
    while (pos >= 0 && cur[pos] == k - 1) --pos;
    if (pos < 0) break;
    int v = cur[pos] + 1;
    for (int i = pos; i < n; ++i) cur[i] = v;
  }
  return out;
}

std::vector<std::map<std::string, std::string>> nameWitness(const FiniteGroup& g,
                                                            const MultiCopyAssignment& mca) {
  std::vector<std::map<std::string, std::string>> out;
  for (const auto& copy : mca.copies) {
    std::map<std::string, std::string> named;
    for (const auto& [gen, x] : copy) named["g" + std::to_string(gen)] = g.name(x);
    out.push_back(std::move(named));
  }
  return out;
}

}  // namespace

Verdict checkWeak(const FiniteGroup& g, const TSubgroupGens& s, int height,
                  const SearchBudget& budget) {
  if (height < 1) throw Error("height must be >= 1");
  if (s.empty()) throw Error("word set must be nonempty");

  Verdict v;
  v.height = height;
  v.group_label = g.label();
  for (const Word& w : s.words()) v.words.push_back(w.str());

  bool capped = false;
  for (const auto& sel : multisetSelections(static_cast<int>(s.words().size()), height)) {
    std::vector<Word> targets;
    for (int i : sel) targets.push_back(s.words()[i]);
    SearchResult r = findNoncollapsingMulticopy(g, targets, budget);
    v.stats += r.stats;
    ++v.selections_tested;
    if (r.status == SearchStatus::Found) {
      v.status = Verdict::Status::Fails;
      for (const Word& w : targets) v.failing_selection.push_back(w.str());
      v.witness_ids = r.witness;
      v.witness = nameWitness(g, *r.witness);
      return v;
    }
    if (r.status == SearchStatus::Capped) capped = true;
  }
  v.status = capped ? Verdict::Status::Unknown : Verdict::Status::Holds;
  return v;
}

int defaultHeightCutoff(const FiniteGroup& g) {
  return static_cast<int>(std::ceil(std::log2(std::max(2, g.order())))) + 2;
}

HeightReport minHeight(const FiniteGroup& g, const TSubgroupGens& s, int cutoff,
                       const SearchBudget& budget) {
  if (cutoff <= 0) cutoff = defaultHeightCutoff(g);
  HeightReport report;
  for (int n = 1; n <= cutoff; ++n) {
    Verdict v = checkWeak(g, s, n, budget);
    report.per_height.push_back(v);
    if (v.status == Verdict::Status::Holds) {
      report.height = n;
      return report;
    }
    if (v.status == Verdict::Status::Unknown) {
      report.unknown = true;
      return report;
    }
  }
  return report;
}

Verdict checkWeakModulo(const FiniteGroup& g, const TSubgroupGens& s, const TSubgroupGens& h,
                        int height, const SearchBudget& budget, const VerbalBudget& vbudget) {
  Subgroup image = verbalImage(g, h.words(), vbudget);
  QuotientGroup q = quotient(g, image);
  Verdict v = checkWeak(q.group, s, height, budget);
  v.verbal_subgroup_order = image.size();
  v.quotient_order = q.group.order();
  return v;
}

ChainReport verifyWeakStarChain(const FiniteGroup& g, const std::vector<TSubgroupGens>& chain,
                                const std::vector<int>& heights, const SearchBudget& budget,
                                const VerbalBudget& vbudget) {
  if (chain.size() < 2) throw Error("a weak* chain needs at least two entries");
  if (heights.size() != chain.size() - 1) throw Error("heights must match the step count");

  ChainReport report;
  report.overall = Verdict::Status::Holds;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    Verdict v = checkWeakModulo(g, chain[i - 1], chain[i], heights[i - 1], budget, vbudget);
    if (v.status == Verdict::Status::Fails && report.overall == Verdict::Status::Holds)
      report.overall = Verdict::Status::Fails;
    if (v.status == Verdict::Status::Unknown) report.overall = Verdict::Status::Unknown;
    report.steps.push_back(std::move(v));
  }
  return report;
}

namespace {

// Random reduced word of at most max_len letters over g1..g_vars.
Word randomImageWord(std::mt19937_64& rng, int max_len, int vars) {
  int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_len + 1));
  Word w;
  for (int i = 0; i < len; ++i) {
    int gen = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(vars));
    long long exp = (rng() & 1) ? 1 : -1;
    w = w * Word::generator(gen, exp);
  }
  return w;
}

}  // namespace

std::vector<Word> sampleTSubgroup(const TSubgroupGens& s, const SampleBudget& budget,
                                  std::uint64_t seed) {
  if (s.empty()) throw Error("word set must be nonempty");
  std::mt19937_64 rng(seed);
  std::vector<Word> out;
  for (int i = 0; i < budget.count; ++i) {
    int factors = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(budget.factors));
    Word acc;
    for (int f = 0; f < factors; ++f) {
      const Word& base = s.words()[rng() % s.words().size()];
      std::map<int, Word> images;
      for (int v : base.variables()) images[v] = randomImageWord(rng, budget.word_len, budget.vars);
      Word factor = Endomorphism(std::move(images)).apply(base);
      if (rng() & 1) factor = factor.inverse();
      acc = acc * factor;
    }
    out.push_back(acc);
  }
  return out;
}

Word substituteFresh(const Word& f, const std::map<int, Word>& repl, int fresh_base) {
  int next = fresh_base;
  std::map<int, Word> images;
  for (const auto& [var, w] : repl) {
    std::map<int, Word> reindex;
    for (int v : w.variables()) reindex[v] = Word::generator(++next);
    images[var] = Endomorphism(std::move(reindex)).apply(w);
  }
  return Endomorphism(std::move(images)).apply(f);
}

TSubgroupGens substitutionGenerators(const Word& f, const std::map<int, TSubgroupGens>& positions,
                                     const SampleBudget& budget, std::uint64_t seed) {
  for (const auto& [var, gens] : positions) {
    (void)gens;
    auto vars = f.variables();
    if (!std::binary_search(vars.begin(), vars.end(), var))
      throw Error("substituted variable g" + std::to_string(var) + " does not occur in f");
  }
  std::mt19937_64 rng(seed);
  std::vector<Word> out;
  SampleBudget one = budget;
  one.count = 1;
  for (int i = 0; i < budget.count; ++i) {
    std::map<int, Word> repl;
    for (const auto& [var, gens] : positions)
      repl[var] = sampleTSubgroup(gens, one, rng()).front();
    out.push_back(substituteFresh(f, repl, f.maxVariable()));
  }
  return TSubgroupGens(std::move(out));
}

Subgroup substitutedImage(const FiniteGroup& g, const Word& f,
                          const std::map<int, Subgroup>& positions, const VerbalBudget& budget) {
  auto vars = f.variables();
  std::vector<const std::vector<int>*> domains;
  std::vector<int> all;
  for (int x = 0; x < g.order(); ++x) all.push_back(x);
  double total = 1;
  for (int v : vars) {
    auto it = positions.find(v);
    const std::vector<int>* d = it != positions.end() ? &it->second.members() : &all;
    total *= static_cast<double>(d->size());
    domains.push_back(d);
  }
  if (total > static_cast<double>(budget.max_assignments))
    throw BudgetError("substituted image: assignment space too large");

  std::vector<int> values{g.identity()};
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = (*domains[i])[idx[i]];
    values.push_back(evaluateWord(g, f, a));
    int pos = static_cast<int>(vars.size()) - 1;
    while (pos >= 0 && ++idx[pos] == domains[pos]->size()) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return generatedSubgroup(g, values);
}

}  // namespace weakid

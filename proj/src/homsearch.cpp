#include "weakid/homsearch.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <climits>
#include <thread>

#include "weakid/errors.hpp"

namespace weakid {

namespace {

using Clock = std::chrono::steady_clock;

struct EvalStep {
  int var_pos;
  long long exp;
};

struct Ctx {
  const FiniteGroup& g;
  std::vector<std::vector<int>> vars;       // per copy, sorted variable indices
  std::vector<std::vector<EvalStep>> plan;  // per copy, syllables over tuple positions
  std::vector<char> same_as_prev;           // copy c has the same word as copy c-1
  std::uint64_t node_cap;
  Clock::time_point deadline;
};

struct BranchOut {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<MultiCopyAssignment> witness;
  SearchStats stats;
};

// Depth-first exploration of one top-level branch (a fixed value for the
// first variable of copy 0) in canonical order.
class BranchRun {
 public:
  BranchRun(const Ctx& ctx, int root_value) : ctx_(ctx), root_(root_value) {
    int n = static_cast<int>(ctx.vars.size());
    tuple_.resize(n);
    domains_.resize(n);
    for (int c = 0; c < n; ++c) tuple_[c].resize(ctx.vars[c].size());
  }

  BranchOut run() {
    enterCopy(0);
    BranchOut out;
    out.stats = stats_;
    if (witness_) {
      out.status = SearchStatus::Found;
      out.witness = std::move(witness_);
    } else if (capped_) {
      out.status = SearchStatus::Capped;
    }
    return out;
  }

 private:
  const Ctx& ctx_;
  int root_;
  SearchStats stats_;
  bool capped_ = false;
  std::vector<std::vector<int>> tuple_;
  std::vector<std::vector<int>> domains_;
  std::optional<MultiCopyAssignment> witness_;

  // Returns true when the whole search must stop (witness or cap).
  bool bumpNode() {
    ++stats_.nodes;
    if (stats_.nodes > ctx_.node_cap) {
      capped_ = true;
      return true;
    }
    if ((stats_.nodes & 8191) == 0 && Clock::now() > ctx_.deadline) {
      capped_ = true;
      return true;
    }
    return false;
  }

  int evalCopy(int c) const {
    const FiniteGroup& g = ctx_.g;
    int acc = g.identity();
    for (const auto& step : ctx_.plan[c])
      acc = g.mul(acc, g.power(tuple_[c][step.var_pos], step.exp));
    return acc;
  }

  bool enterCopy(int c) {
    if (c == 0) {
      domains_[0].resize(ctx_.g.order());
      for (int x = 0; x < ctx_.g.order(); ++x) domains_[0][x] = x;
    } else {
      // Restrict to the centralizers of everything placed in copy c-1;
      // earlier copies are already folded into domains_[c-1].
      domains_[c].clear();
      for (int x : domains_[c - 1]) {
        bool ok = true;
        for (int v : tuple_[c - 1])
          if (!ctx_.g.commutes(x, v)) {
            ok = false;
            break;
          }
        if (ok) domains_[c].push_back(x);
      }
      stats_.centralizer_prunes += domains_[c - 1].size() - domains_[c].size();
    }
    return fill(c, 0, true);
  }

  bool fill(int c, int t, bool tight) {
    const auto& domain = domains_[c];
    int n_copies = static_cast<int>(ctx_.vars.size());
    std::size_t start = 0;
    int prev_val = -1;
    if (ctx_.same_as_prev[c] && tight) {
      // Interchangeable copies: force nondecreasing assignment tuples.
      prev_val = tuple_[c - 1][t];
      start = std::lower_bound(domain.begin(), domain.end(), prev_val) - domain.begin();
    }
    for (std::size_t i = start; i < domain.size(); ++i) {
      if (c == 0 && t == 0 && domain[i] != root_) continue;
      if (bumpNode()) return true;
      tuple_[c][t] = domain[i];
      bool tight2 = tight && ctx_.same_as_prev[c] && domain[i] == prev_val;
      if (t + 1 < static_cast<int>(ctx_.vars[c].size())) {
        if (fill(c, t + 1, tight2)) return true;
      } else {
        int value = evalCopy(c);
        if (c + 1 == n_copies) ++stats_.assignments_tested;
        if (value != ctx_.g.identity()) {
          if (c + 1 == n_copies) {
            witness_ = buildWitness();
            return true;
          }
          if (enterCopy(c + 1)) return true;
        }
      }
    }
    return false;
  }

  MultiCopyAssignment buildWitness() const {
    MultiCopyAssignment mca;
    for (std::size_t c = 0; c < ctx_.vars.size(); ++c) {
      Assignment a;
      for (std::size_t t = 0; t < ctx_.vars[c].size(); ++t) a[ctx_.vars[c][t]] = tuple_[c][t];
      mca.copies.push_back(std::move(a));
    }
    return mca;
  }
};

// Canonical aggregation over branch outcomes in ascending branch order.
// Both the sequential and the parallel driver apply exactly this walk, so
// the result (including stats) is independent of the thread count.
struct Aggregator {
  SearchStats stats;
  std::optional<SearchResult> done;
  std::uint64_t node_cap;

  void step(const BranchOut& o) {
    stats += o.stats;
    if (o.status == SearchStatus::Found) {
      done = SearchResult{SearchStatus::Found, o.witness, stats};
    } else if (o.status == SearchStatus::Capped || stats.nodes > node_cap) {
      done = SearchResult{SearchStatus::Capped, std::nullopt, stats};
    }
  }
};

}  // namespace

SearchResult findNoncollapsingMulticopy(const FiniteGroup& g, const std::vector<Word>& targets,
                                        const SearchBudget& budget) {
  auto t0 = Clock::now();
  if (targets.empty()) throw Error("at least one target word is required");

  auto finish = [&](SearchResult r) {
    r.stats.wall_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return r;
  };

  // A copy whose word is empty always collapses; no witness can exist.
  for (const Word& w : targets)
    if (w.empty()) return finish({SearchStatus::Exhausted, std::nullopt, {}});

  Ctx ctx{g, {}, {}, {}, budget.node_cap,
          t0 + std::chrono::duration_cast<Clock::duration>(
                   std::chrono::duration<double>(budget.time_cap_seconds))};
  for (std::size_t c = 0; c < targets.size(); ++c) {
    auto vars = targets[c].variables();
    std::vector<EvalStep> plan;
    for (const auto& s : targets[c].syllables()) {
      int pos = static_cast<int>(std::lower_bound(vars.begin(), vars.end(), s.gen) - vars.begin());
      plan.push_back({pos, s.exp});
    }
    ctx.vars.push_back(std::move(vars));
    ctx.plan.push_back(std::move(plan));
    ctx.same_as_prev.push_back(c > 0 && targets[c] == targets[c - 1]);
  }

  int branches = g.order();
  Aggregator agg{{}, std::nullopt, budget.node_cap};
  int threads = std::max(1, budget.threads);

  if (threads == 1) {
    for (int b = 0; b < branches && !agg.done; ++b) agg.step(BranchRun(ctx, b).run());
  } else {
    std::vector<std::optional<BranchOut>> out(branches);
    std::atomic<int> next{0};
    std::atomic<int> found_branch{INT_MAX};
    auto worker = [&] {
      for (int b = next.fetch_add(1); b < branches; b = next.fetch_add(1)) {
        if (b > found_branch.load()) continue;  // canonical walk cannot reach it
        BranchOut o = BranchRun(ctx, b).run();
        if (o.status == SearchStatus::Found) {
          int cur = found_branch.load();
          while (b < cur && !found_branch.compare_exchange_weak(cur, b)) {
          }
        }
        out[b] = std::move(o);
      }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (int b = 0; b < branches && !agg.done; ++b) {
      assert(out[b].has_value());
      agg.step(*out[b]);
    }
  }

  if (agg.done) return finish(std::move(*agg.done));
  return finish({SearchStatus::Exhausted, std::nullopt, agg.stats});
}

bool verifyMulticopy(const FiniteGroup& g, const std::vector<Word>& targets,
                     const MultiCopyAssignment& mca) {
  if (mca.copies.size() != targets.size()) return false;
  for (std::size_t j = 0; j < mca.copies.size(); ++j)
    for (std::size_t k = j + 1; k < mca.copies.size(); ++k)
      for (const auto& [gj, xj] : mca.copies[j])
        for (const auto& [gk, xk] : mca.copies[k])
          if (!g.commutes(xj, xk)) return false;
  for (std::size_t c = 0; c < targets.size(); ++c)
    if (evaluateWord(g, targets[c], mca.copies[c]) == g.identity()) return false;
  return true;
}

std::vector<GroupEndomorphism> endomorphisms(const FiniteGroup& g, int cap) {
  if (g.order() > cap)
    throw BudgetError("endomorphism enumeration capped at order " + std::to_string(cap));
  int n = g.order();
  const auto& gens = g.generators();
  int k = static_cast<int>(gens.size());

  // BFS factorization of every element as a word in the generators.
  std::vector<int> parent(n, -1), via(n, -1), order_of_discovery;
  order_of_discovery.push_back(g.identity());
  std::vector<char> seen(n, 0);
  seen[g.identity()] = 1;
  for (std::size_t head = 0; head < order_of_discovery.size(); ++head) {
    int x = order_of_discovery[head];
    for (int i = 0; i < k; ++i) {
      int y = g.mul(x, gens[i]);
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = x;
        via[y] = i;
        order_of_discovery.push_back(y);
      }
    }
  }

  std::vector<GroupEndomorphism> out;
  std::vector<int> cand(k, 0);
  std::vector<int> img(n);
  while (true) {
    img[g.identity()] = g.identity();
    for (std::size_t i = 1; i < order_of_discovery.size(); ++i) {
      int x = order_of_discovery[i];
      img[x] = g.mul(img[parent[x]], cand[via[x]]);
    }
    bool hom = true;
    for (int a = 0; a < n && hom; ++a)
      for (int b = 0; b < n; ++b)
        if (img[g.mul(a, b)] != g.mul(img[a], img[b])) {
          hom = false;
          break;
        }
    if (hom) out.push_back({cand, img});

    int pos = k - 1;
    while (pos >= 0 && ++cand[pos] == n) cand[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

std::vector<std::pair<int, int>> productHomPairs(const FiniteGroup& g,
                                                 const std::vector<GroupEndomorphism>& endos) {
  // Distinct image sets per endomorphism.
  std::vector<std::vector<int>> images;
  for (const auto& e : endos) {
    std::vector<int> im = e.map;
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    images.push_back(std::move(im));
  }
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < endos.size(); ++i)
    for (std::size_t j = 0; j < endos.size(); ++j) {
      bool ok = true;
      for (int u : images[i]) {
        for (int v : images[j])
          if (!g.commutes(u, v)) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (ok) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return pairs;
}

}  // namespace weakid

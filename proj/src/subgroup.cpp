#include "weakid/subgroup.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "weakid/errors.hpp"

namespace weakid {

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<char> member)
    : parent_(&parent), member_(std::move(member)) {
  for (int x = 0; x < parent.order(); ++x)
    if (member_[x]) members_.push_back(x);
}

Subgroup generatedSubgroup(const FiniteGroup& g, const std::vector<int>& elems) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> work;
  in[g.identity()] = 1;
  work.push_back(g.identity());
  for (int x : elems)
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j < work.size(); ++j) {
      for (int p : {g.mul(work[i], work[j]), g.mul(work[j], work[i])}) {
        if (!in[p]) {
          in[p] = 1;
          work.push_back(p);
        }
      }
    }
  }
  return Subgroup(g, std::move(in));
}

Subgroup normalClosure(const FiniteGroup& g, const std::vector<int>& elems) {
  // The subgroup generated by a conjugation-closed set is normal.
  std::vector<int> conjugates;
  for (int e : elems)
    for (int x = 0; x < g.order(); ++x)
      conjugates.push_back(g.mul(g.mul(x, e), g.inv(x)));
  return generatedSubgroup(g, conjugates);
}

Subgroup centralizer(const FiniteGroup& g, const std::vector<int>& p) {
  std::vector<char> in(g.order(), 0);
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int e : p)
      if (!g.commutes(x, e)) {
        ok = false;
        break;
      }
    in[x] = ok;
  }
  return Subgroup(g, std::move(in));
}

bool isNormal(const FiniteGroup& g, const Subgroup& h) {
  for (int x = 0; x < g.order(); ++x)
    for (int m : h.members())
      if (!h.contains(g.mul(g.mul(x, m), g.inv(x)))) return false;
  return true;
}

Subgroup verbalImage(const FiniteGroup& g, const std::vector<Word>& s,
                     const VerbalBudget& budget) {
  std::vector<int> values{g.identity()};
  for (const Word& w : s) {
    auto vars = w.variables();
    int k = static_cast<int>(vars.size());
    if (k >= budget.many_vars && g.order() > budget.max_order_for_many_vars)
      throw BudgetError("verbal image: word '" + w.str() + "' has " + std::to_string(k) +
                        " variables on a group of order " + std::to_string(g.order()));
    double total = std::pow(static_cast<double>(g.order()), k);
    if (total > static_cast<double>(budget.max_assignments))
      throw BudgetError("verbal image: assignment space too large for '" + w.str() + "'");

    Assignment a;
    for (int v : vars) a[v] = 0;
    // Odometer over all |G|^k assignments.
    while (true) {
      values.push_back(evaluateWord(g, w, a));
      int pos = k - 1;
      while (pos >= 0) {
        auto it = a.find(vars[pos]);
        if (++it->second < g.order()) break;
        it->second = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return generatedSubgroup(g, values);
}

QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n) {
  if (&n.parent() != &g) throw Error("subgroup does not belong to this group");
  if (!isNormal(g, n)) throw NotNormalError("subgroup is not normal");

  // Left cosets keyed by their smallest member.
  std::vector<int> rep(g.order());
  for (int x = 0; x < g.order(); ++x) {
    int r = x;
    for (int m : n.members()) r = std::min(r, g.mul(x, m));
    rep[x] = r;
  }
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x)
    if (rep[x] == x) reps.push_back(x);

  std::map<int, int> index;
  for (std::size_t i = 0; i < reps.size(); ++i) index[reps[i]] = static_cast<int>(i);
  int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  std::vector<std::string> names(q);
  for (int i = 0; i < q; ++i) {
    names[i] = "[" + g.name(reps[i]) + "]";
    for (int j = 0; j < q; ++j) table[i][j] = index.at(rep[g.mul(reps[i], reps[j])]);
  }

  std::vector<int> gens;
  for (int x : g.generators()) gens.push_back(index.at(rep[x]));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.size() > 1) std::erase(gens, 0);  // drop the identity coset unless it is all we have

  QuotientGroup out{FiniteGroup::fromTable(g.label() + "/N" + std::to_string(n.size()),
                                           std::move(names), table, std::move(gens)),
                    {}};
  out.projection.resize(g.order());
  for (int x = 0; x < g.order(); ++x) out.projection[x] = index.at(rep[x]);
  return out;
}

}  // namespace weakid

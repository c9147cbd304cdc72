#include "weakid/disc.hpp"

#include <algorithm>
#include <string>

#include "weakid/errors.hpp"

namespace weakid {

FreeAbelianGroup::FreeAbelianGroup(int r) : rank(r) {
  if (r < 1) throw Error("free-abelian rank must be >= 1");
}

namespace {

// Does the product hom (a, b) -> phi(a) * psi(b) kill some element of the set?
bool killsOne(const FiniteGroup& g, const GroupEndomorphism& phi, const GroupEndomorphism& psi,
              const std::vector<std::pair<int, int>>& set) {
  for (const auto& [a, b] : set)
    if (g.mul(phi.map[a], psi.map[b]) == g.identity()) return true;
  return false;
}

}  // namespace

bool certificateUnseparable(const FiniteGroup& g, const std::vector<GroupEndomorphism>& endos,
                            const std::vector<std::pair<int, int>>& pairs,
                            const std::vector<std::pair<int, int>>& certificate) {
  for (const auto& [i, j] : pairs)
    if (!killsOne(g, endos[i], endos[j], certificate)) return false;
  return true;
}

DiscVerdict isDiscriminatingFinite(const FiniteGroup& g, int endo_cap) {
  DiscVerdict v;
  v.group_label = g.label();

  std::vector<GroupEndomorphism> endos;
  try {
    endos = endomorphisms(g, endo_cap);
  } catch (const BudgetError&) {
    v.status = DiscVerdict::Status::Unknown;
    return v;
  }
  auto pairs = productHomPairs(g, endos);

  std::vector<std::pair<int, int>> nontrivial;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (a != g.identity() || b != g.identity()) nontrivial.emplace_back(a, b);

  // Any finite set of nontrivial elements is a subset of this one, so one
  // separating hom here settles the whole property.
  for (const auto& [i, j] : pairs)
    if (!killsOne(g, endos[i], endos[j], nontrivial)) {
      v.status = DiscVerdict::Status::Discriminating;
      v.witness_pair = {i, j};
      return v;
    }

  v.status = DiscVerdict::Status::NotDiscriminating;
  // Greedy minimization: drop each element if what remains is still
  // unseparable by every product hom.
  std::vector<std::pair<int, int>> cert = nontrivial;
  for (std::size_t k = 0; k < cert.size();) {
    std::vector<std::pair<int, int>> reduced = cert;
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(k));
    if (certificateUnseparable(g, endos, pairs, reduced))
      cert = std::move(reduced);
    else
      ++k;
  }
  v.certificate_ids = cert;
  for (const auto& [a, b] : cert) v.certificate.emplace_back(g.name(a), g.name(b));
  return v;
}

int applyExtension(const FiniteGroup& g, const DiscExtension& ext, const std::vector<int>& tuple) {
  if (static_cast<int>(tuple.size()) != ext.n) throw Error("tuple arity mismatch");
  std::vector<int> cur = tuple;
  for (const auto& [phi, psi] : ext.steps) {
    int folded = g.mul(phi.map[cur[0]], psi.map[cur[1]]);
    cur.erase(cur.begin());
    cur[0] = folded;
  }
  return cur[0];
}

std::optional<DiscExtension> extendDiscriminationFinite(
    const FiniteGroup& g, int n, const std::vector<std::vector<int>>& targets, int endo_cap) {
  if (n < 1) throw Error("arity must be >= 1");
  for (const auto& t : targets)
    if (static_cast<int>(t.size()) != n) throw Error("target arity mismatch");

  DiscVerdict verdict = isDiscriminatingFinite(g, endo_cap);
  if (verdict.status == DiscVerdict::Status::Unknown)
    throw BudgetError("discrimination verdict exceeded the endomorphism cap");
  if (verdict.status == DiscVerdict::Status::NotDiscriminating) return std::nullopt;

  auto endos = endomorphisms(g, endo_cap);
  auto pairs = productHomPairs(g, endos);

  DiscExtension ext;
  ext.n = n;
  std::vector<std::vector<int>> cur = targets;
  for (int m = n; m >= 2; --m) {
    // The pairs to keep alive at this fold: the nontrivial (t[0], t[1]).
    std::vector<std::pair<int, int>> alive;
    for (const auto& t : cur)
      if (t[0] != g.identity() || t[1] != g.identity()) alive.emplace_back(t[0], t[1]);
    const std::pair<int, int>* chosen = nullptr;
    for (const auto& p : pairs)
      if (!killsOne(g, endos[p.first], endos[p.second], alive)) {
        chosen = &p;
        break;
      }
    // A discriminating group separates every finite nontrivial set.
    if (!chosen) return std::nullopt;
    const GroupEndomorphism& phi = endos[chosen->first];
    const GroupEndomorphism& psi = endos[chosen->second];
    ext.steps.emplace_back(phi, psi);
    for (auto& t : cur) {
      int folded = g.mul(phi.map[t[0]], psi.map[t[1]]);
      t.erase(t.begin());
      t[0] = folded;
    }
  }
  return ext;
}

IntVector AbelianHom::apply(const std::vector<IntVector>& tuple) const {
  if (static_cast<int>(tuple.size()) != n) throw Error("tuple arity mismatch");
  IntVector out(rank, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(tuple[i].size()) != rank) throw Error("vector rank mismatch");
    for (int row = 0; row < rank; ++row)
      for (int col = 0; col < rank; ++col) out[row] += blocks[i][row][col] * tuple[i][col];
  }
  return out;
}

namespace {

// Entry order 0, 1, -1, 2, -2, ...
long long entryValue(int k) { return (k % 2 == 1) ? (k + 1) / 2 : -(k / 2); }

}  // namespace

AbelianHom extendDiscriminationAbelian(const FreeAbelianGroup& a, int n,
                                       const std::vector<std::vector<IntVector>>& targets,
                                       int norm_cap) {
  if (n < 1) throw Error("arity must be >= 1");
  // Flatten targets; zero tuples are killed by every hom and carry no
  // constraint.
  std::vector<IntVector> flat;
  for (const auto& t : targets) {
    if (static_cast<int>(t.size()) != n) throw Error("target arity mismatch");
    IntVector f;
    for (const auto& vec : t) {
      if (static_cast<int>(vec.size()) != a.rank) throw Error("vector rank mismatch");
      f.insert(f.end(), vec.begin(), vec.end());
    }
    if (std::any_of(f.begin(), f.end(), [](long long x) { return x != 0; }))
      flat.push_back(std::move(f));
  }

  int cols = n * a.rank;
  int cells = a.rank * cols;
  std::vector<long long> m(cells);  // row-major rank x cols

  auto valid = [&] {
    for (const auto& f : flat) {
      bool nonzero = false;
      for (int row = 0; row < a.rank && !nonzero; ++row) {
        long long dot = 0;
        for (int c = 0; c < cols; ++c) dot += m[row * cols + c] * f[c];
        nonzero = dot != 0;
      }
      if (!nonzero) return false;
    }
    return true;
  };
  auto pack = [&] {
    AbelianHom hom;
    hom.rank = a.rank;
    hom.n = n;
    hom.blocks.assign(n, std::vector<IntVector>(a.rank, IntVector(a.rank, 0)));
    for (int i = 0; i < n; ++i)
      for (int row = 0; row < a.rank; ++row)
        for (int col = 0; col < a.rank; ++col)
          hom.blocks[i][row][col] = m[row * cols + i * a.rank + col];
    return hom;
  };

  // Increasing max-norm; within one norm, lexicographic over the entry
  // order above. The excluded set is a finite union of hyperplanes, so a
  // valid matrix exists at some norm.
  for (int norm = 0; norm <= norm_cap; ++norm) {
    int limit = 2 * norm + 1;  // entry indices 0 .. limit-1
    std::vector<int> idx(cells, 0);
    while (true) {
      bool at_norm = norm == 0;
      for (int c = 0; c < cells && !at_norm; ++c) at_norm = idx[c] >= limit - 2;
      if (at_norm) {
        for (int c = 0; c < cells; ++c) m[c] = entryValue(idx[c]);
        if (valid()) return pack();
      }
      int pos = cells - 1;
      while (pos >= 0 && ++idx[pos] == limit) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
  throw BudgetError("no discrimination matrix within max-norm " + std::to_string(norm_cap));
}

AbelianVerdict abelianWeakEqualsIdentity(const Word& w, const FreeAbelianGroup& a) {
  AbelianVerdict v;
  v.exponent_sums = exponentSums(w);
  if (v.exponent_sums.empty()) {
    v.is_identity = true;
    v.explanation = "all exponent sums vanish; the word is an identity on every abelian group";
    return v;
  }
  v.is_identity = false;
  // One shared assignment for all copies: the first generator with nonzero
  // exponent sum goes to e1, everything else in the word to zero.
  auto [var, coeff] = *v.exponent_sums.begin();
  for (int g : w.variables()) v.witness[g] = IntVector(a.rank, 0);
  v.witness[var][0] = 1;
  v.explanation = "exponent sum of g" + std::to_string(var) + " is " + std::to_string(coeff) +
                  "; with g" + std::to_string(var) +
                  " -> e1 and all other generators -> 0 the word value is " +
                  std::to_string(coeff) + "*e1 != 0 in every copy, at every height";
  return v;
}

}  // namespace weakid

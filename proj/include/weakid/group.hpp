#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weakid/word.hpp"

namespace weakid {

struct GroupConfig {
  int order_cap = 360;
  // Full associativity scan up to this order, sampled triples above.
  int assoc_full_check_max = 256;
  std::uint64_t assoc_samples = 100'000;
};

// Generator-images map of a homomorphism from the free group into a fixed
// finite group: generator index -> element id.
using Assignment = std::map<int, int>;

// Finite group backed by a full multiplication table. Immutable after
// construction; all queries are pure and safe to share across threads.
//
// Conventions (also printed by `weakid about`):
//   * permutations compose left-to-right: (s*t)(p) = t(s(p));
//   * matrices act on column vectors, table[x][y] is the matrix product x*y;
//   * the identity always has element id 0;
//   * permutation groups number even permutations first (so alternating(n)
//     is a prefix of symmetric(n)), lexicographic by one-line form within
//     each parity class.
class FiniteGroup {
 public:
  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int x, int y) const { return table_[static_cast<std::size_t>(x) * order_ + y]; }
  int inv(int x) const { return inverse_[x]; }
  const std::string& name(int x) const { return names_[x]; }
  const std::vector<int>& generators() const { return generators_; }
  const std::string& label() const { return label_; }

  int power(int x, long long e) const;
  bool commutes(int x, int y) const { return mul(x, y) == mul(y, x); }
  int elementOrder(int x) const;
  long long exponent() const;
  bool isAbelian() const;
  // Element id with the given name, or -1.
  int elementByName(const std::string& name) const;

  // Validates every invariant: identity row/column, unique inverses,
  // associativity (full or sampled per config), generator closure.
  static FiniteGroup fromTable(std::string label, std::vector<std::string> names,
                               const std::vector<std::vector<int>>& table,
                               std::vector<int> generators, const GroupConfig& cfg = {});

 private:
  int order_ = 1;
  int identity_ = 0;
  std::vector<int> table_;  // row-major order_ x order_
  std::vector<int> inverse_;
  std::vector<std::string> names_;
  std::vector<int> generators_;
  std::string label_;
};

FiniteGroup makeCyclic(int n, const GroupConfig& cfg = {});
FiniteGroup makeDihedral(int n, const GroupConfig& cfg = {});  // order 2n
FiniteGroup makeSymmetric(int n, const GroupConfig& cfg = {});
FiniteGroup makeAlternating(int n, const GroupConfig& cfg = {});
FiniteGroup makeQuaternion8(const GroupConfig& cfg = {});
FiniteGroup makeElementaryAbelian(int p, int k, const GroupConfig& cfg = {});
FiniteGroup makeGL2(int p, const GroupConfig& cfg = {});
FiniteGroup makeSL2(int p, const GroupConfig& cfg = {});
FiniteGroup directProduct(const FiniteGroup& a, const FiniteGroup& b, const GroupConfig& cfg = {});
FiniteGroup loadCayleyFile(const std::string& path, const GroupConfig& cfg = {});

// Group-spec mini-language: cyclic:N, dihedral:N, sym:N, alt:N, q8,
// elem:P:K, gl:2:P, sl:2:P, prod(<spec>,<spec>), file:<path>.
FiniteGroup makeGroup(const std::string& spec, const GroupConfig& cfg = {});

// Value of w under the homomorphism extending `a`. Throws if some
// generator occurring in w is unassigned.
int evaluateWord(const FiniteGroup& g, const Word& w, const Assignment& a);

}  // namespace weakid

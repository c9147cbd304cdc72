#pragma once

#include <cstdint>
#include <vector>

#include "weakid/group.hpp"
#include "weakid/word.hpp"

namespace weakid {

// Subgroup of a fixed parent group as a membership bitset. The parent must
// outlive the subgroup.
class Subgroup {
 public:
  Subgroup(const FiniteGroup& parent, std::vector<char> member);

  const FiniteGroup& parent() const { return *parent_; }
  bool contains(int x) const { return member_[x] != 0; }
  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<int>& members() const { return members_; }
  bool isWholeGroup() const { return size() == parent_->order(); }
  bool isTrivial() const { return size() == 1; }

 private:
  const FiniteGroup* parent_;
  std::vector<char> member_;
  std::vector<int> members_;  // sorted ids
};

Subgroup generatedSubgroup(const FiniteGroup& g, const std::vector<int>& elems);
Subgroup normalClosure(const FiniteGroup& g, const std::vector<int>& elems);
Subgroup centralizer(const FiniteGroup& g, const std::vector<int>& p);
bool isNormal(const FiniteGroup& g, const Subgroup& h);

struct VerbalBudget {
  std::uint64_t max_assignments = 13'000'000;
  // Words with this many distinct variables are rejected on groups larger
  // than max_order_for_many_vars.
  int many_vars = 4;
  int max_order_for_many_vars = 24;
};

// H(G): the subgroup generated by all word values of S under assignments
// of their variables into G. Normal in G for any S.
Subgroup verbalImage(const FiniteGroup& g, const std::vector<Word>& s,
                     const VerbalBudget& budget = {});

struct QuotientGroup {
  FiniteGroup group;
  std::vector<int> projection;  // parent element id -> quotient element id
};

// Quotient by a normal subgroup; cosets are numbered by their smallest
// member id, so the identity coset is element 0. Throws NotNormalError.
QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n);

}  // namespace weakid

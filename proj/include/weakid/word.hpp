#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace weakid {

// One maximal run g_i^e inside a reduced word. Generator indices are
// 1-based (g1, g2, ...); the exponent is never zero.
struct Syllable {
  int gen;
  long long exp;
  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// A freely reduced word over g1, g2, ... in run-length form. Adjacent
// syllables always carry distinct generators; the empty word is the
// identity. Words are immutable values; every operation reduces eagerly,
// so equality is structural comparison.
class Word {
 public:
  Word() = default;

  static Word generator(int index, long long exp = 1);
  // Reduces the given runs (merging neighbours, dropping zero exponents).
  static Word fromSyllables(std::vector<Syllable> syllables);

  const std::vector<Syllable>& syllables() const { return sylls_; }
  bool empty() const { return sylls_.empty(); }
  // Total letter count, sum of |exp|.
  long long length() const;

  Word inverse() const;
  Word pow(long long e) const;

  // Sorted distinct generator indices occurring in the word.
  std::vector<int> variables() const;
  int maxVariable() const;

  // Emits the word grammar with explicit '*'; the empty word prints as "()".
  std::string str() const;

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word&, const Word&) = default;
  // Canonical order: shorter first, then syllable-lexicographic.
  friend bool operator<(const Word& a, const Word& b);

 private:
  std::vector<Syllable> sylls_;
};

Word commutator(const Word& x, const Word& y);

// Parses the grammar
//   word := term (('*')? term)*
//   term := atom ('^' int)?
//   atom := 'g' posint | '(' word ')' | '[' word ',' word ']'
// with whitespace ignored; [x,y] = x y x^-1 y^-1. The empty string and
// "()" denote the identity word.
Word parseWord(std::string_view text);

// Endomorphism of the free group given by finitely many generator images;
// unmapped generators map to themselves.
class Endomorphism {
 public:
  Endomorphism() = default;
  explicit Endomorphism(std::map<int, Word> images) : images_(std::move(images)) {}

  const std::map<int, Word>& images() const { return images_; }
  Word image(int gen) const;
  Word apply(const Word& w) const;

 private:
  std::map<int, Word> images_;
};

// (outer ∘ inner)(w) = outer(inner(w)).
Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner);

// Exponent-sum map; a generator is absent iff its sum is zero.
using ExponentVector = std::map<int, long long>;
ExponentVector exponentSums(const Word& w);

}  // namespace weakid

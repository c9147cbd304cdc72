#include "weakid/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>

#include "weakid/errors.hpp"

namespace weakid {

namespace {

constexpr long long kMaxLetters = 1'000'000;

void pushReduced(std::vector<Syllable>& out, int gen, long long exp) {
  if (exp == 0) return;
  if (!out.empty() && out.back().gen == gen) {
    out.back().exp += exp;
    if (out.back().exp == 0) out.pop_back();
  } else {
    out.push_back({gen, exp});
  }
}

}  // namespace

Word Word::generator(int index, long long exp) {
  if (index <= 0) throw Error("generator index must be positive");
  Word w;
  if (exp != 0) w.sylls_.push_back({index, exp});
  return w;
}

Word Word::fromSyllables(std::vector<Syllable> syllables) {
  Word w;
  for (const auto& s : syllables) {
    if (s.gen <= 0) throw Error("generator index must be positive");
    pushReduced(w.sylls_, s.gen, s.exp);
  }
  return w;
}

long long Word::length() const {
  long long n = 0;
  for (const auto& s : sylls_) n += std::llabs(s.exp);
  return n;
}

Word Word::inverse() const {
  Word w;
  w.sylls_.reserve(sylls_.size());
  for (auto it = sylls_.rbegin(); it != sylls_.rend(); ++it)
    w.sylls_.push_back({it->gen, -it->exp});
  return w;
}

Word Word::pow(long long e) const {
  if (e == 0 || empty()) return {};
  Word base = e < 0 ? inverse() : *this;
  long long n = e < 0 ? -e : e;
  if (sylls_.size() == 1) {
    // Single run: the power stays a single run.
    return Word::generator(base.sylls_[0].gen, base.sylls_[0].exp * n);
  }
  if (n * length() > kMaxLetters) throw Error("word power too large");
  Word acc;
  for (long long i = 0; i < n; ++i) acc = acc * base;
  return acc;
}

std::vector<int> Word::variables() const {
  std::set<int> vars;
  for (const auto& s : sylls_) vars.insert(s.gen);
  return {vars.begin(), vars.end()};
}

int Word::maxVariable() const {
  int m = 0;
  for (const auto& s : sylls_) m = std::max(m, s.gen);
  return m;
}

std::string Word::str() const {
  if (sylls_.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < sylls_.size(); ++i) {
    if (i) out += '*';
    out += 'g';
    out += std::to_string(sylls_[i].gen);
    if (sylls_[i].exp != 1) {
      out += '^';
      out += std::to_string(sylls_[i].exp);
    }
  }
  return out;
}

Word operator*(const Word& u, const Word& v) {
  Word w;
  w.sylls_ = u.sylls_;
  for (const auto& s : v.sylls_) pushReduced(w.sylls_, s.gen, s.exp);
  return w;
}

bool operator<(const Word& a, const Word& b) {
  long long la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  return a.sylls_ < b.sylls_;
}

Word commutator(const Word& x, const Word& y) {
  return x * y * x.inverse() * y.inverse();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = wordExpr();
    skipWs();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return w;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_), pos_);
  }

  void skipWs() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skipWs();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool atomAhead() {
    char c = peek();
    return c == 'g' || c == '(' || c == '[';
  }

  Word wordExpr() {
    Word acc;
    bool starPending = false;
    while (true) {
      if (atomAhead()) {
        acc = acc * term();
        starPending = false;
      } else if (peek() == '*') {
        ++pos_;
        starPending = true;
      } else {
        break;
      }
    }
    if (starPending) fail("expected term after '*'");
    return acc;
  }

  Word term() {
    Word base = atom();
    if (peek() == '^') {
      ++pos_;
      return base.pow(integer());
    }
    return base;
  }

  Word atom() {
    char c = peek();
    if (c == 'g') {
      ++pos_;
      long long idx = digits();
      if (idx == 0) fail("generator index 0 is not allowed");
      if (idx > 1'000'000) fail("generator index too large");
      return Word::generator(static_cast<int>(idx));
    }
    if (c == '(') {
      ++pos_;
      Word w = wordExpr();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word x = wordExpr();
      expect(',');
      Word y = wordExpr();
      expect(']');
      return commutator(x, y);
    }
    fail("expected generator, '(' or '['");
  }

  long long integer() {
    skipWs();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    long long v = digits();
    return neg ? -v : v;
  }

  long long digits() {
    skipWs();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected digits");
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000) fail("number too large");
      ++pos_;
    }
    return v;
  }
};

}  // namespace

Word parseWord(std::string_view text) { return Parser(text).parse(); }

Word Endomorphism::image(int gen) const {
  auto it = images_.find(gen);
  return it != images_.end() ? it->second : Word::generator(gen);
}

Word Endomorphism::apply(const Word& w) const {
  Word acc;
  for (const auto& s : w.syllables()) acc = acc * image(s.gen).pow(s.exp);
  return acc;
}

Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner) {
  std::map<int, Word> images;
  for (const auto& [gen, w] : inner.images()) images[gen] = outer.apply(w);
  for (const auto& [gen, w] : outer.images())
    if (!images.count(gen)) images[gen] = w;
  return Endomorphism(std::move(images));
}

ExponentVector exponentSums(const Word& w) {
  ExponentVector v;
  for (const auto& s : w.syllables()) {
    auto [it, _] = v.try_emplace(s.gen, 0);
    it->second += s.exp;
    if (it->second == 0) v.erase(it);
  }
  return v;
}

}  // namespace weakid

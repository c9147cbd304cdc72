#include "weakid/group.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include <json.hpp>

#include "weakid/errors.hpp"

namespace weakid {

namespace {

long long lcmLL(long long a, long long b) { return a / std::gcd(a, b) * b; }

// Closure of `seed` under the multiplication table; returns sorted ids.
std::vector<int> closure(const std::vector<std::vector<int>>& table, int identity,
                         const std::vector<int>& seed) {
  int n = static_cast<int>(table.size());
  std::vector<char> in(n, 0);
  std::vector<int> work;
  in[identity] = 1;
  work.push_back(identity);
  for (int x : seed)
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j < work.size(); ++j) {
      for (int p : {table[work[i]][work[j]], table[work[j]][work[i]]}) {
        if (!in[p]) {
          in[p] = 1;
          work.push_back(p);
        }
      }
    }
  }
  std::sort(work.begin(), work.end());
  return work;
}

// Smallest generating set found greedily: single elements in id order,
// then pairs in lexicographic order. Deterministic.
std::vector<int> findGenerators(const std::vector<std::vector<int>>& table, int identity) {
  int n = static_cast<int>(table.size());
  if (n == 1) return {identity};
  for (int x = 0; x < n; ++x)
    if (static_cast<int>(closure(table, identity, {x}).size()) == n) return {x};
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (static_cast<int>(closure(table, identity, {x, y}).size()) == n) return {x, y};
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z)
        if (static_cast<int>(closure(table, identity, {x, y, z}).size()) == n) return {x, y, z};
  throw SpecError("no generating set of size <= 3 found");
}

using Perm = std::vector<int>;  // one-line form over 0..n-1

Perm composePerm(const Perm& s, const Perm& t) {
  // left-to-right: (s*t)(p) = t(s(p))
  Perm r(s.size());
  for (std::size_t p = 0; p < s.size(); ++p) r[p] = t[s[p]];
  return r;
}

bool isEven(const Perm& p) {
  int transpositions = 0;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::string cycleNotation(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) {
      seen[i] = 1;
      continue;
    }
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

FiniteGroup fromPerms(std::string label, const std::vector<Perm>& perms, const GroupConfig& cfg) {
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = cycleNotation(perms[i]);
    for (int j = 0; j < n; ++j) table[i][j] = index.at(composePerm(perms[i], perms[j]));
  }
  return FiniteGroup::fromTable(std::move(label), std::move(names), table,
                                findGenerators(table, 0), cfg);
}

std::vector<Perm> allPerms(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Even permutations first (each class lexicographic), so that the
// alternating group occupies the leading ids and the identity is id 0.
std::vector<Perm> symmetricOrder(int n) {
  std::vector<Perm> evens, odds;
  for (auto& p : allPerms(n)) (isEven(p) ? evens : odds).push_back(std::move(p));
  evens.insert(evens.end(), odds.begin(), odds.end());
  return evens;
}

bool isPrime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

using Mat2 = std::array<int, 4>;  // row-major (a,b,c,d)

Mat2 matMul(const Mat2& x, const Mat2& y, int p) {
  return {(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
          (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
}

std::string matName(const Mat2& m) {
  return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" +
         std::to_string(m[2]) + "," + std::to_string(m[3]) + "]]";
}

FiniteGroup makeLinear2(int p, bool special, const GroupConfig& cfg) {
  if (!isPrime(p)) throw SpecError("field order must be prime");
  if (p > 3) throw SpecError("gl/sl supported for p <= 3 only");
  std::vector<Mat2> mats;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          int det = ((a * d - b * c) % p + p) % p;
          if (special ? det == 1 : det != 0) mats.push_back({a, b, c, d});
        }
  // Move the identity matrix to id 0.
  Mat2 id{1, 0, 0, 1};
  auto it = std::find(mats.begin(), mats.end(), id);
  std::swap(*mats.begin(), *it);

  std::map<Mat2, int> index;
  for (std::size_t i = 0; i < mats.size(); ++i) index[mats[i]] = static_cast<int>(i);
  int n = static_cast<int>(mats.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = matName(mats[i]);
    for (int j = 0; j < n; ++j) table[i][j] = index.at(matMul(mats[i], mats[j], p));
  }
  std::string label = (special ? "sl:2:" : "gl:2:") + std::to_string(p);
  return FiniteGroup::fromTable(label, std::move(names), table, findGenerators(table, 0), cfg);
}

std::vector<std::string> splitTopLevel(const std::string& s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

int parseIntParam(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw SpecError("bad numeric parameter '" + s + "' in group spec");
  return std::stoi(s);
}

}  // namespace

FiniteGroup FiniteGroup::fromTable(std::string label, std::vector<std::string> names,
                                   const std::vector<std::vector<int>>& table,
                                   std::vector<int> generators, const GroupConfig& cfg) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw SpecError("empty multiplication table");
  if (n > cfg.order_cap) throw SpecError("group order " + std::to_string(n) +
                                         " exceeds cap " + std::to_string(cfg.order_cap));
  if (static_cast<int>(names.size()) != n) throw SpecError("names/table size mismatch");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw SpecError("table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw SpecError("table entry out of range");
  }

  // Locate the identity: the unique e with e*y = y and x*e = x for all x, y.
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int y = 0; y < n && ok; ++y) ok = table[e][y] == y && table[y][e] == y;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw SpecError("table has no identity element");

  std::vector<int> inverse(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (table[x][y] == identity) {
        if (inverse[x] != -1) throw SpecError("non-unique inverse");
        inverse[x] = y;
      }
    }
    if (inverse[x] == -1) throw SpecError("element without inverse");
    if (table[inverse[x]][x] != identity) throw SpecError("one-sided inverse");
  }

  if (n <= cfg.assoc_full_check_max) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (table[table[x][y]][z] != table[x][table[y][z]])
            throw SpecError("table is not associative");
  } else {
    std::mt19937_64 rng(0x5eed5eedULL);
    for (std::uint64_t i = 0; i < cfg.assoc_samples; ++i) {
      int x = static_cast<int>(rng() % n), y = static_cast<int>(rng() % n),
          z = static_cast<int>(rng() % n);
      if (table[table[x][y]][z] != table[x][table[y][z]])
        throw SpecError("table is not associative (sampled)");
    }
  }

  if (generators.empty()) throw SpecError("generator list must be nonempty");
  for (int g : generators)
    if (g < 0 || g >= n) throw SpecError("generator id out of range");
  if (static_cast<int>(closure(table, identity, generators).size()) != n)
    throw SpecError("generators do not generate the group");

  FiniteGroup g;
  g.order_ = n;
  g.identity_ = identity;
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table_[static_cast<std::size_t>(i) * n + j] = table[i][j];
  g.inverse_ = std::move(inverse);
  g.names_ = std::move(names);
  g.generators_ = std::move(generators);
  g.label_ = std::move(label);
  return g;
}

int FiniteGroup::power(int x, long long e) const {
  if (e < 0) {
    x = inv(x);
    e = -e;
  }
  e %= elementOrder(x);
  int acc = identity_;
  for (long long i = 0; i < e; ++i) acc = mul(acc, x);
  return acc;
}

int FiniteGroup::elementOrder(int x) const {
  int acc = x, k = 1;
  while (acc != identity_) {
    acc = mul(acc, x);
    ++k;
  }
  return k;
}

long long FiniteGroup::exponent() const {
  long long e = 1;
  for (int x = 0; x < order_; ++x) e = lcmLL(e, elementOrder(x));
  return e;
}

bool FiniteGroup::isAbelian() const {
  for (int x = 0; x < order_; ++x)
    for (int y = x + 1; y < order_; ++y)
      if (!commutes(x, y)) return false;
  return true;
}

int FiniteGroup::elementByName(const std::string& name) const {
  for (int x = 0; x < order_; ++x)
    if (names_[x] == name) return x;
  return -1;
}

FiniteGroup makeCyclic(int n, const GroupConfig& cfg) {
  if (n < 1) throw SpecError("cyclic order must be >= 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = std::to_string(i);
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return FiniteGroup::fromTable("cyclic:" + std::to_string(n), std::move(names), table,
                                {n > 1 ? 1 : 0}, cfg);
}

FiniteGroup makeDihedral(int n, const GroupConfig& cfg) {
  if (n < 1) throw SpecError("dihedral parameter must be >= 1");
  // ids 0..n-1 are rotations r^k, ids n..2n-1 are reflections s r^k.
  int m = 2 * n;
  auto rid = [n](int k) { return ((k % n) + n) % n; };
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) {
    names[i] = (i < n ? "r" : "sr") + std::to_string(i % n);
    for (int j = 0; j < m; ++j) {
      bool fi = i >= n, fj = j >= n;
      int a = i % n, b = j % n;
      if (!fi && !fj) table[i][j] = rid(a + b);
      else if (!fi && fj) table[i][j] = n + rid(b - a);  // r^a (s r^b) = s r^(b-a)
      else if (fi && !fj) table[i][j] = n + rid(a + b);  // (s r^a) r^b = s r^(a+b)
      else table[i][j] = rid(b - a);                     // (s r^a)(s r^b) = r^(b-a)
    }
  }
  std::vector<int> gens = n > 1 ? std::vector<int>{1, n} : std::vector<int>{n};
  return FiniteGroup::fromTable("dihedral:" + std::to_string(n), std::move(names), table,
                                std::move(gens), cfg);
}

FiniteGroup makeSymmetric(int n, const GroupConfig& cfg) {
  if (n < 1 || n > 5) throw SpecError("symmetric(n) supported for 1 <= n <= 5");
  return fromPerms("sym:" + std::to_string(n), symmetricOrder(n), cfg);
}

FiniteGroup makeAlternating(int n, const GroupConfig& cfg) {
  if (n < 1 || n > 5) throw SpecError("alternating(n) supported for 1 <= n <= 5");
  std::vector<Perm> evens;
  for (auto& p : allPerms(n))
    if (isEven(p)) evens.push_back(std::move(p));
  return fromPerms("alt:" + std::to_string(n), evens, cfg);
}

FiniteGroup makeQuaternion8(const GroupConfig& cfg) {
  // ids: 0..3 = 1,i,j,k; 4..7 = -1,-i,-j,-k.
  // basis multiplication with sign: b[x][y] = (sign, basis)
  static const int basis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1},
                                 {+1, +1, -1, -1}};
  // sign table: i*i=-1, i*j=k, i*k=-j, j*i=-k, j*j=-1, j*k=i, k*i=j, k*j=-i, k*k=-1
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int bx = x % 4, by = y % 4;
      int s = sign[bx][by] * (x >= 4 ? -1 : 1) * (y >= 4 ? -1 : 1);
      table[x][y] = basis[bx][by] + (s < 0 ? 4 : 0);
    }
  std::vector<std::string> names = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
  return FiniteGroup::fromTable("q8", std::move(names), table, {1, 2}, cfg);
}

FiniteGroup makeElementaryAbelian(int p, int k, const GroupConfig& cfg) {
  if (!isPrime(p)) throw SpecError("elementary abelian base must be prime");
  if (k < 1) throw SpecError("elementary abelian rank must be >= 1");
  long long n = 1;
  for (int i = 0; i < k; ++i) {
    n *= p;
    if (n > cfg.order_cap) throw SpecError("group order exceeds cap");
  }
  int order = static_cast<int>(n);
  auto digitsOf = [p, k](int id) {
    std::vector<int> d(k);
    for (int i = k - 1; i >= 0; --i) {
      d[i] = id % p;
      id /= p;
    }
    return d;
  };
  auto idOf = [p, k](const std::vector<int>& d) {
    int id = 0;
    for (int i = 0; i < k; ++i) id = id * p + d[i];
    return id;
  };
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  std::vector<std::string> names(order);
  for (int x = 0; x < order; ++x) {
    auto dx = digitsOf(x);
    std::string nm = "(";
    for (int i = 0; i < k; ++i) nm += (i ? "," : "") + std::to_string(dx[i]);
    names[x] = nm + ")";
    for (int y = 0; y < order; ++y) {
      auto dy = digitsOf(y);
      std::vector<int> dz(k);
      for (int i = 0; i < k; ++i) dz[i] = (dx[i] + dy[i]) % p;
      table[x][y] = idOf(dz);
    }
  }
  std::vector<int> gens;
  for (int i = 0; i < k; ++i) {
    std::vector<int> d(k, 0);
    d[i] = 1;
    gens.push_back(idOf(d));
  }
  return FiniteGroup::fromTable("elem:" + std::to_string(p) + ":" + std::to_string(k),
                                std::move(names), table, std::move(gens), cfg);
}

FiniteGroup makeGL2(int p, const GroupConfig& cfg) { return makeLinear2(p, false, cfg); }
FiniteGroup makeSL2(int p, const GroupConfig& cfg) { return makeLinear2(p, true, cfg); }

FiniteGroup directProduct(const FiniteGroup& a, const FiniteGroup& b, const GroupConfig& cfg) {
  long long n = static_cast<long long>(a.order()) * b.order();
  if (n > cfg.order_cap) throw SpecError("product order exceeds cap");
  int order = static_cast<int>(n), ob = b.order();
  auto id = [ob](int x, int y) { return x * ob + y; };
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  std::vector<std::string> names(order);
  for (int x = 0; x < order; ++x) {
    names[x] = "(" + a.name(x / ob) + "," + b.name(x % ob) + ")";
    for (int y = 0; y < order; ++y)
      table[x][y] = id(a.mul(x / ob, y / ob), b.mul(x % ob, y % ob));
  }
  std::vector<int> gens;
  for (int g : a.generators()) gens.push_back(id(g, b.identity()));
  for (int g : b.generators()) gens.push_back(id(a.identity(), g));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return FiniteGroup::fromTable("prod(" + a.label() + "," + b.label() + ")", std::move(names),
                                table, std::move(gens), cfg);
}

FiniteGroup loadCayleyFile(const std::string& path, const GroupConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open Cayley file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad Cayley file JSON: ") + e.what(), 0);
  }
  int order = j.at("order").get<int>();
  auto names = j.at("names").get<std::vector<std::string>>();
  auto table = j.at("table").get<std::vector<std::vector<int>>>();
  auto gens = j.at("generators").get<std::vector<int>>();
  if (static_cast<int>(table.size()) != order) throw SpecError("order/table mismatch");
  auto g = FiniteGroup::fromTable("file:" + path, std::move(names), table, std::move(gens), cfg);
  if (g.identity() != 0) throw SpecError("Cayley file identity must be element 0");
  return g;
}

FiniteGroup makeGroup(const std::string& spec, const GroupConfig& cfg) {
  if (spec.rfind("prod(", 0) == 0 && spec.back() == ')') {
    auto inner = spec.substr(5, spec.size() - 6);
    auto parts = splitTopLevel(inner, ',');
    if (parts.size() != 2) throw SpecError("prod(...) takes exactly two specs");
    return directProduct(makeGroup(parts[0], cfg), makeGroup(parts[1], cfg), cfg);
  }
  if (spec.rfind("file:", 0) == 0) return loadCayleyFile(spec.substr(5), cfg);
  auto parts = splitTopLevel(spec, ':');
  const std::string& kind = parts[0];
  auto arity = [&](std::size_t n) {
    if (parts.size() != n + 1) throw SpecError("group spec '" + kind + "' takes " +
                                               std::to_string(n) + " parameter(s)");
  };
  if (kind == "cyclic") { arity(1); return makeCyclic(parseIntParam(parts[1]), cfg); }
  if (kind == "dihedral") { arity(1); return makeDihedral(parseIntParam(parts[1]), cfg); }
  if (kind == "sym") { arity(1); return makeSymmetric(parseIntParam(parts[1]), cfg); }
  if (kind == "alt") { arity(1); return makeAlternating(parseIntParam(parts[1]), cfg); }
  if (kind == "q8") { arity(0); return makeQuaternion8(cfg); }
  if (kind == "elem") {
    arity(2);
    return makeElementaryAbelian(parseIntParam(parts[1]), parseIntParam(parts[2]), cfg);
  }
  if (kind == "gl" || kind == "sl") {
    arity(2);
    if (parseIntParam(parts[1]) != 2) throw SpecError("only 2x2 linear groups supported");
    int p = parseIntParam(parts[2]);
    return kind == "gl" ? makeGL2(p, cfg) : makeSL2(p, cfg);
  }
  throw SpecError("unknown group spec: " + spec);
}

int evaluateWord(const FiniteGroup& g, const Word& w, const Assignment& a) {
  int acc = g.identity();
  for (const auto& s : w.syllables()) {
    auto it = a.find(s.gen);
    if (it == a.end()) throw Error("unassigned generator g" + std::to_string(s.gen));
    acc = g.mul(acc, g.power(it->second, s.exp));
  }
  return acc;
}

}  // namespace weakid

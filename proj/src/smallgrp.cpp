#include "emcg/smallgrp.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

#include "emcg/error.hpp"

namespace emcg::grp {

namespace {

constexpr std::size_t kUndefined = static_cast<std::size_t>(-1);

using Mask = std::uint64_t;

Mask bit(std::size_t i) { return Mask{1} << i; }

std::vector<std::size_t> mask_to_list(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

Mask list_to_mask(const std::vector<std::size_t>& elems, std::size_t order) {
  Mask m = 0;
  for (auto e : elems) {
    if (e >= order) throw Error(ErrorKind::InvalidSubgroup, "element index out of range");
    m |= bit(e);
  }
  return m;
}

void check_order(std::size_t n, const char* what) {
  if (n == 0 || n > kMaxOrder)
    throw Error(ErrorKind::UnsupportedSize, std::string(what) + ": order " + std::to_string(n) +
                                                " outside [1, " + std::to_string(kMaxOrder) + "]");
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.inverse = !l.inverse;
  return out;
}

// ------------------------------------------------------------ presentation parsing

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Split on commas that are not inside brackets.
std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

class WordParser {
 public:
  WordParser(std::string_view text, const std::vector<std::string>& names) : s_(text), names_(names) {}

  Word parse() {
    Word w = parse_sequence();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected character");
    return w;
  }

 private:
  Word parse_sequence() {
    Word w;
    for (;;) {
      skip_space();
      if (pos_ >= s_.size() || s_[pos_] == ',' || s_[pos_] == ']') break;
      Word factor = parse_factor();
      w.insert(w.end(), factor.begin(), factor.end());
    }
    return w;
  }

  Word parse_factor() {
    Word base;
    if (s_[pos_] == '[') {
      ++pos_;
      Word x = parse_sequence();
      expect(',');
      Word y = parse_sequence();
      expect(']');
      base = x;
      base.insert(base.end(), y.begin(), y.end());
      Word xi = inverse_word(x), yi = inverse_word(y);
      base.insert(base.end(), xi.begin(), xi.end());
      base.insert(base.end(), yi.begin(), yi.end());
    } else if (s_[pos_] == '1') {
      ++pos_;  // identity
    } else {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      if (start == pos_) fail("expected a generator");
      const std::string name(s_.substr(start, pos_ - start));
      auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) throw Error(ErrorKind::Parse, "undeclared generator '" + name + "'");
      base.push_back({static_cast<std::size_t>(it - names_.begin()), false});
    }
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      long long e = 0;
      const char* begin = s_.data() + pos_;
      const char* end = s_.data() + s_.size();
      auto [ptr, ec] = std::from_chars(begin, end, e);
      if (ec != std::errc()) fail("bad exponent");
      pos_ += static_cast<std::size_t>(ptr - begin);
      if (e < 0) base = inverse_word(base);
      Word out;
      for (long long i = 0; i < (e < 0 ? -e : e); ++i) out.insert(out.end(), base.begin(), base.end());
      return out;
    }
    return base;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

// ------------------------------------------------------------ coset enumeration

class Enumerator {
 public:
  Enumerator(std::size_t generators, std::size_t max_cosets)
      : cols_(2 * generators), max_(max_cosets) {
    new_row();
  }

  void run(const std::vector<std::vector<std::size_t>>& relators) {
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!live(c)) continue;
      for (const auto& w : relators) {
        scan_and_fill(c, w);
        if (!live(c)) break;
      }
      if (!live(c)) continue;
      for (std::size_t x = 0; x < cols_; ++x)
        if (table_[c][x] == kUndefined) define(c, x);
    }
  }

  CosetTable result() {
    CosetTable t;
    t.generators = cols_ / 2;
    t.defined_cosets = table_.size();
    std::vector<std::size_t> renumber(table_.size(), kUndefined);
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (live(c)) renumber[c] = t.live_cosets++;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!live(c)) continue;
      std::vector<std::size_t> row(cols_);
      for (std::size_t x = 0; x < cols_; ++x) row[x] = renumber[rep(table_[c][x])];
      t.action.push_back(std::move(row));
    }
    return t;
  }

 private:
  bool live(std::size_t c) const { return parent_[c] == c; }

  void new_row() {
    if (table_.size() >= max_)
      throw Error(ErrorKind::Capacity, "coset enumeration exceeded " + std::to_string(max_) +
                                           " cosets (the group may be infinite)");
    table_.emplace_back(cols_, kUndefined);
    parent_.push_back(parent_.size());
  }

  void define(std::size_t c, std::size_t x) {
    new_row();
    const std::size_t d = table_.size() - 1;
    table_[c][x] = d;
    table_[d][x ^ 1] = c;
  }

  std::size_t rep(std::size_t c) {
    std::size_t root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      const std::size_t next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(std::size_t a, std::size_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue_.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const std::size_t dead = queue_[i];
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::size_t target = table_[dead][x];
        if (target == kUndefined) continue;
        table_[target][x ^ 1] = kUndefined;
        const std::size_t mu = rep(dead);
        const std::size_t nu = rep(target);
        if (table_[mu][x] != kUndefined) {
          merge(nu, table_[mu][x]);
        } else if (table_[nu][x ^ 1] != kUndefined) {
          merge(mu, table_[nu][x ^ 1]);
        } else {
          table_[mu][x] = nu;
          table_[nu][x ^ 1] = mu;
        }
      }
    }
  }

  void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::size_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && table_[f][w[i]] != kUndefined) f = table_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][w[j] ^ 1] != kUndefined) b = table_[b][w[j--] ^ 1];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][w[i] ^ 1] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  std::size_t cols_;
  std::size_t max_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> queue_;
};

}  // namespace

// ------------------------------------------------------------ Presentation

void Presentation::validate() const {
  for (const auto& w : relators)
    for (const auto& l : w)
      if (l.gen >= generator_names.size())
        throw Error(ErrorKind::Parse, "relator uses undeclared generator index " + std::to_string(l.gen));
}

std::string Presentation::to_string() const {
  std::string out = "gens: ";
  for (std::size_t i = 0; i < generator_names.size(); ++i) out += (i ? "," : "") + generator_names[i];
  out += "; rels: ";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    if (r) out += ", ";
    if (relators[r].empty()) out += "1";
    for (std::size_t i = 0; i < relators[r].size(); ++i) {
      const auto& l = relators[r][i];
      out += (i ? " " : "") + generator_names[l.gen] + (l.inverse ? "^-1" : "");
    }
  }
  return out;
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  std::vector<std::string> rel_texts;
  for (const auto& part : split_top_level(text, ';')) {
    if (part.empty()) continue;
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::Parse, "expected 'gens:' or 'rels:' in '" + part + "'");
    const std::string key = trim(std::string_view(part).substr(0, colon));
    const std::string value = trim(std::string_view(part).substr(colon + 1));
    if (key == "gens") {
      have_gens = true;
      if (value.empty()) continue;
      for (auto& name : split_top_level(value, ',')) {
        if (name.empty() || !std::all_of(name.begin(), name.end(), [](char ch) {
              return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
            }) || std::isdigit(static_cast<unsigned char>(name[0])))
          throw Error(ErrorKind::Parse, "bad generator name '" + name + "'");
        if (std::find(p.generator_names.begin(), p.generator_names.end(), name) != p.generator_names.end())
          throw Error(ErrorKind::Parse, "duplicate generator '" + name + "'");
        p.generator_names.push_back(name);
      }
    } else if (key == "rels") {
      if (!value.empty()) rel_texts = split_top_level(value, ',');
    } else {
      throw Error(ErrorKind::Parse, "unknown section '" + key + "'");
    }
  }
  if (!have_gens) throw Error(ErrorKind::Parse, "presentation has no 'gens:' section");
  for (const auto& r : rel_texts) p.relators.push_back(WordParser(r, p.generator_names).parse());
  return p;
}

CosetTable enumerate_cosets(const Presentation& p, std::size_t max_cosets) {
  p.validate();
  if (max_cosets < 1) throw Error(ErrorKind::OutOfDomain, "max_cosets must be positive");
  std::vector<std::vector<std::size_t>> relators;
  for (const auto& w : p.relators) {
    std::vector<std::size_t> cols;
    for (const auto& l : w) cols.push_back(2 * l.gen + (l.inverse ? 1 : 0));
    relators.push_back(std::move(cols));
  }
  Enumerator e(p.generator_names.size(), max_cosets);
  e.run(relators);
  return e.result();
}

// ------------------------------------------------------------ MulTableGroup

MulTableGroup::MulTableGroup(std::vector<std::vector<std::size_t>> table, std::size_t identity)
    : table_(std::move(table)), identity_(identity) {
  const std::size_t n = table_.size();
  check_order(n, "multiplication table");
  if (identity_ >= n) throw Error(ErrorKind::InvalidTable, "identity index out of range");
  for (const auto& row : table_) {
    if (row.size() != n) throw Error(ErrorKind::InvalidTable, "table is not square");
    Mask seen = 0;
    for (auto v : row) {
      if (v >= n) throw Error(ErrorKind::InvalidTable, "table entry out of range");
      seen |= bit(v);
    }
    if (std::popcount(seen) != static_cast<int>(n)) throw Error(ErrorKind::InvalidTable, "row is not a permutation");
  }
  for (std::size_t j = 0; j < n; ++j) {
    Mask seen = 0;
    for (std::size_t i = 0; i < n; ++i) seen |= bit(table_[i][j]);
    if (std::popcount(seen) != static_cast<int>(n))
      throw Error(ErrorKind::InvalidTable, "column is not a permutation");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (table_[identity_][a] != a || table_[a][identity_] != a)
      throw Error(ErrorKind::InvalidTable, "identity element does not act trivially");
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const auto it = std::find(table_[a].begin(), table_[a].end(), identity_);
    inverse_[a] = static_cast<std::size_t>(it - table_[a].begin());
    if (table_[inverse_[a]][a] != identity_) throw Error(ErrorKind::InvalidTable, "missing two-sided inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw Error(ErrorKind::InvalidTable, "multiplication is not associative");
}

std::size_t MulTableGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::size_t MulTableGroup::power(std::size_t a, std::int64_t e) const {
  const auto n = static_cast<std::int64_t>(element_order(a));
  e = ((e % n) + n) % n;
  std::size_t x = identity_;
  for (std::int64_t i = 0; i < e; ++i) x = mul(x, a);
  return x;
}

bool MulTableGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::size_t MulTableGroup::involution_count() const {
  std::size_t k = 0;
  for (std::size_t a = 0; a < order(); ++a)
    if (a != identity_ && mul(a, a) == identity_) ++k;
  return k;
}

std::vector<std::size_t> MulTableGroup::order_profile() const {
  std::vector<std::size_t> profile(order() + 1, 0);
  for (std::size_t a = 0; a < order(); ++a) ++profile[element_order(a)];
  return profile;
}

std::vector<std::size_t> MulTableGroup::center() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < order(); ++a) {
    bool central = true;
    for (std::size_t b = 0; b < order() && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<std::size_t> MulTableGroup::closure(const std::vector<std::size_t>& gens) const {
  Mask have = bit(identity_);
  std::vector<std::size_t> frontier{identity_};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto x : frontier)
      for (auto g : gens) {
        const auto y = mul(x, g);
        if (!(have & bit(y))) {
          have |= bit(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return mask_to_list(have);
}

bool MulTableGroup::is_subgroup(const std::vector<std::size_t>& elems) const {
  const Mask m = list_to_mask(elems, order());
  if (!(m & bit(identity_))) return false;
  for (auto a : elems)
    for (auto b : elems)
      if (!(m & bit(mul(a, inverse(b))))) return false;
  return true;
}

bool MulTableGroup::is_normal(const std::vector<std::size_t>& elems) const {
  if (!is_subgroup(elems)) return false;
  const Mask m = list_to_mask(elems, order());
  for (std::size_t g = 0; g < order(); ++g)
    for (auto n : elems)
      if (!(m & bit(mul(mul(g, n), inverse(g))))) return false;
  return true;
}

std::vector<std::vector<std::size_t>> MulTableGroup::subgroups() const {
  std::set<Mask> found{bit(identity_)};
  std::vector<Mask> queue{bit(identity_)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Mask s = queue[i];
    const auto elems = mask_to_list(s);
    for (std::size_t g = 0; g < order(); ++g) {
      if (s & bit(g)) continue;
      auto gens = elems;
      gens.push_back(g);
      const Mask t = list_to_mask(closure(gens), order());
      if (found.insert(t).second) queue.push_back(t);
    }
  }
  std::vector<std::vector<std::size_t>> out;
  for (Mask m : found) out.push_back(mask_to_list(m));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// ------------------------------------------------------------ construction

MulTableGroup from_coset_table(const CosetTable& t) {
  const std::size_t n = t.live_cosets;
  check_order(n, "coset enumeration result");
  // Representative word (as columns) for each coset, by breadth-first search.
  std::vector<std::vector<std::size_t>> rep(n);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::vector<std::size_t> order{0};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t c = order[i];
    for (std::size_t x = 0; x < 2 * t.generators; ++x) {
      const std::size_t d = t.action[c][x];
      if (seen[d]) continue;
      seen[d] = true;
      rep[d] = rep[c];
      rep[d].push_back(x);
      order.push_back(d);
    }
  }
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t c = i;
      for (auto x : rep[j]) c = t.action[c][x];
      table[i][j] = c;
    }
  return MulTableGroup(std::move(table), 0);
}

MulTableGroup todd_coxeter(const Presentation& p, std::size_t max_cosets) {
  return from_coset_table(enumerate_cosets(p, max_cosets));
}

MulTableGroup trivial_group() { return cyclic(1); }

MulTableGroup cyclic(std::size_t n) {
  check_order(n, "cyclic group");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return MulTableGroup(std::move(t));
}

MulTableGroup dihedral(std::size_t order) {
  if (order < 2 || order % 2 != 0)
    throw Error(ErrorKind::UnsupportedSize, "dihedral group order must be even and at least 2");
  check_order(order, "dihedral group");
  const std::size_t m = order / 2;
  // Element s^f r^i has index f*m + i.
  std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t f1 = a / m, i1 = a % m, f2 = b / m, i2 = b % m;
      const std::size_t i = ((f2 ? m - i1 : i1) + i2) % m;
      t[a][b] = ((f1 + f2) % 2) * m + i;
    }
  return MulTableGroup(std::move(t));
}

MulTableGroup klein() { return direct_product(cyclic(2), cyclic(2)); }

MulTableGroup quaternion8() {
  // Units 1, i, j, k as 0..3; product of units gives (sign, unit).
  constexpr int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  constexpr int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  // Index sign_bit * 4 + unit, sign_bit 1 meaning negative.
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      const std::size_t ua = a % 4, ub = b % 4;
      const int sign = (a / 4 ? -1 : 1) * (b / 4 ? -1 : 1) * unit_sign[ua][ub];
      t[a][b] = (sign < 0 ? 4 : 0) + static_cast<std::size_t>(unit_prod[ua][ub]);
    }
  return MulTableGroup(std::move(t));
}

MulTableGroup direct_product(const MulTableGroup& g, const MulTableGroup& h) {
  const std::size_t n = g.order(), m = h.order();
  check_order(n * m, "direct product");
  std::vector<std::vector<std::size_t>> t(n * m, std::vector<std::size_t>(n * m));
  for (std::size_t a = 0; a < n * m; ++a)
    for (std::size_t b = 0; b < n * m; ++b) t[a][b] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
  return MulTableGroup(std::move(t), g.identity() * m + h.identity());
}

MulTableGroup semidirect_product(const MulTableGroup& n, const MulTableGroup& h,
                                 const std::vector<std::vector<std::size_t>>& action) {
  const std::size_t nn = n.order(), hn = h.order();
  check_order(nn * hn, "semidirect product");
  if (action.size() != hn) throw Error(ErrorKind::InvalidAction, "action must list one automorphism per element");
  for (std::size_t x = 0; x < hn; ++x) {
    const auto& phi = action[x];
    if (phi.size() != nn) throw Error(ErrorKind::InvalidAction, "automorphism has wrong length");
    std::vector<std::size_t> sorted = phi;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < nn; ++i)
      if (sorted[i] != i) throw Error(ErrorKind::InvalidAction, "action is not a permutation");
    if (!is_homomorphism(n, n, phi)) throw Error(ErrorKind::InvalidAction, "action is not an automorphism");
  }
  for (std::size_t x = 0; x < hn; ++x)
    for (std::size_t y = 0; y < hn; ++y)
      for (std::size_t a = 0; a < nn; ++a)
        if (action[h.mul(x, y)][a] != action[x][action[y][a]])
          throw Error(ErrorKind::InvalidAction, "action is not a homomorphism into Aut(N)");

  std::vector<std::vector<std::size_t>> t(nn * hn, std::vector<std::size_t>(nn * hn));
  for (std::size_t a = 0; a < nn * hn; ++a)
    for (std::size_t b = 0; b < nn * hn; ++b) {
      const std::size_t n1 = a / hn, h1 = a % hn, n2 = b / hn, h2 = b % hn;
      t[a][b] = n.mul(n1, action[h1][n2]) * hn + h.mul(h1, h2);
    }
  return MulTableGroup(std::move(t), n.identity() * hn + h.identity());
}

MulTableGroup quotient(const MulTableGroup& g, const std::vector<std::size_t>& normal) {
  if (!g.is_normal(normal)) throw Error(ErrorKind::InvalidSubgroup, "subgroup is not normal");
  std::vector<std::size_t> label(g.order(), kUndefined);
  std::vector<std::size_t> reps;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (label[a] != kUndefined) continue;
    for (auto x : normal) label[g.mul(a, x)] = reps.size();
    reps.push_back(a);
  }
  std::vector<std::vector<std::size_t>> t(reps.size(), std::vector<std::size_t>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) t[i][j] = label[g.mul(reps[i], reps[j])];
  return MulTableGroup(std::move(t), label[g.identity()]);
}

std::vector<std::size_t> commutator_subgroup(const MulTableGroup& g) {
  std::vector<std::size_t> comms;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      comms.push_back(g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b))));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return g.closure(comms);
}

MulTableGroup abelianization(const MulTableGroup& g) { return quotient(g, commutator_subgroup(g)); }

// ------------------------------------------------------------ isomorphism

bool is_homomorphism(const MulTableGroup& g, const MulTableGroup& h, const std::vector<std::size_t>& map) {
  if (map.size() != g.order()) return false;
  for (auto v : map)
    if (v >= h.order()) return false;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (map[g.mul(a, b)] != h.mul(map[a], map[b])) return false;
  return true;
}

std::optional<std::vector<std::size_t>> find_isomorphism(const MulTableGroup& g, const MulTableGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.is_abelian() != h.is_abelian()) return std::nullopt;
  if (g.order_profile() != h.order_profile()) return std::nullopt;

  // Greedy generating set of g, preferring elements of large order.
  std::vector<std::size_t> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](auto a, auto b) { return g.element_order(a) > g.element_order(b); });
  std::vector<std::size_t> gens;
  std::size_t span = 1;
  for (auto x : by_order) {
    if (span == g.order()) break;
    auto trial = gens;
    trial.push_back(x);
    const auto c = g.closure(trial);
    if (c.size() > span) {
      gens = std::move(trial);
      span = c.size();
    }
  }

  std::vector<std::size_t> images(gens.size());
  std::vector<std::size_t> map;
  // Extend the images of gens[0..depth) to their generated subgroup; false on
  // conflict or collision.
  auto extend = [&](std::size_t depth) {
    map.assign(g.order(), kUndefined);
    std::vector<bool> used(h.order(), false);
    map[g.identity()] = h.identity();
    used[h.identity()] = true;
    std::vector<std::size_t> frontier{g.identity()};
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const auto x = frontier[i];
      for (std::size_t k = 0; k < depth; ++k) {
        const auto y = g.mul(x, gens[k]);
        const auto fy = h.mul(map[x], images[k]);
        if (map[y] == kUndefined) {
          if (used[fy]) return false;
          map[y] = fy;
          used[fy] = true;
          frontier.push_back(y);
        } else if (map[y] != fy) {
          return false;
        }
      }
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == gens.size()) return extend(depth) && is_homomorphism(g, h, map);
    for (std::size_t y = 0; y < h.order(); ++y) {
      if (h.element_order(y) != g.element_order(gens[depth])) continue;
      images[depth] = y;
      if (extend(depth + 1) && self(self, depth + 1)) return true;
    }
    return false;
  };
  if (gens.empty()) {
    // Trivial group.
    return std::vector<std::size_t>{h.identity()};
  }
  if (!search(search, 0)) return std::nullopt;
  return map;
}

bool is_isomorphic(const MulTableGroup& g, const MulTableGroup& h) { return find_isomorphism(g, h).has_value(); }

// ------------------------------------------------------------ complements

std::optional<std::vector<std::size_t>> find_complement(const MulTableGroup& g,
                                                        const std::vector<std::size_t>& normal) {
  if (!g.is_normal(normal)) throw Error(ErrorKind::InvalidSubgroup, "subgroup is not normal");
  const Mask n_mask = list_to_mask(normal, g.order());
  const std::size_t target = g.order() / static_cast<std::size_t>(std::popcount(n_mask));
  for (const auto& s : g.subgroups()) {
    if (s.size() != target) continue;
    if ((list_to_mask(s, g.order()) & n_mask) == bit(g.identity())) return s;
  }
  return std::nullopt;
}

bool has_complement(const MulTableGroup& g, const std::vector<std::size_t>& normal) {
  return find_complement(g, normal).has_value();
}

// ------------------------------------------------------------ the even-p model

std::vector<std::vector<std::size_t>> klein_swap_action() {
  // klein() = C2 x C2 with (i, j) at index 2i + j; the swap exchanges 1 and 2.
  return {{0, 1, 2, 3}, {0, 2, 1, 3}};
}

EvenModel build_e_even_model() {
  const auto k = klein();
  const auto c2 = cyclic(2);
  const auto inner = semidirect_product(k, c2, klein_swap_action());
  EvenModel m{direct_product(inner, c2), 0, 0, 0, 0, {}};
  // Index in inner: n * 2 + h; index in the product: inner * 2 + r.
  auto element = [](std::size_t n, std::size_t h, std::size_t r) { return (n * 2 + h) * 2 + r; };
  m.d1 = element(2, 0, 0);
  m.d2 = element(1, 0, 0);
  m.u = element(0, 1, 0);
  m.r = element(0, 0, 1);
  m.kernel = m.group.closure({m.d1, m.d2});
  return m;
}

MulTableGroup build_E_even() { return build_e_even_model().group; }

Presentation e_even_presentation() {
  return parse_presentation(
      "gens: d1,d2,u,r; rels: d1^2, d2^2, u^2, r^2, [d1,d2], u d1 u^-1 d2^-1, [r,d1], [r,d2], [r,u]");
}

Presentation abelianized(const Presentation& p) {
  Presentation out = p;
  for (std::size_t a = 0; a < p.generator_names.size(); ++a)
    for (std::size_t b = a + 1; b < p.generator_names.size(); ++b)
      out.relators.push_back({{a, false}, {b, false}, {a, true}, {b, true}});
  return out;
}

Presentation dihedral_quotient_presentation() {
  return parse_presentation("gens: a,b,u; rels: a^2, b^2, u^2, [a,b], a u b^-1 u^-1");
}

}  // namespace emcg::grp

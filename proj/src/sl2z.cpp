#include "emcg/sl2z.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "emcg/error.hpp"

namespace emcg::sl2z {

namespace {

bool is_even(const BigInt& x) { return !bit_test(x, 0); }

std::int64_t to_i64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorKind::UnsupportedSize, "generator exponent exceeds 64 bits");
  return static_cast<std::int64_t>(x);
}

// Integer nearest to num / den, ties toward zero; den != 0.
BigInt nearest_quotient(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;  // truncates
  BigInt r = num - q * den;
  if (2 * abs(r) > abs(den)) q += ((r < 0) == (den < 0)) ? 1 : -1;
  return q;
}

}  // namespace

// ---------------------------------------------------------------- UniModMat2

UniModMat2::UniModMat2() : d1_(1), d2_(0), d3_(0), d4_(1) {}

UniModMat2::UniModMat2(Unchecked, BigInt d1, BigInt d2, BigInt d3, BigInt d4)
    : d1_(std::move(d1)), d2_(std::move(d2)), d3_(std::move(d3)), d4_(std::move(d4)) {}

UniModMat2::UniModMat2(BigInt d1, BigInt d2, BigInt d3, BigInt d4)
    : UniModMat2(Unchecked{}, std::move(d1), std::move(d2), std::move(d3), std::move(d4)) {
  if (!is_unimodular(d1_, d2_, d3_, d4_)) {
    const BigInt det = d1_ * d4_ - d2_ * d3_;
    throw Error(ErrorKind::InvalidMatrix, "determinant is " + det.str() + ", expected 1");
  }
}

UniModMat2 UniModMat2::minus_identity() { return {Unchecked{}, -1, 0, 0, -1}; }
UniModMat2 UniModMat2::V() { return {Unchecked{}, 0, -1, 1, 0}; }
UniModMat2 UniModMat2::T() { return {Unchecked{}, 1, 2, 0, 1}; }
UniModMat2 UniModMat2::T_power(std::int64_t k) { return {Unchecked{}, 1, BigInt(2) * k, 0, 1}; }

UniModMat2 UniModMat2::inverse() const { return {Unchecked{}, d4_, -d2_, -d3_, d1_}; }

UniModMat2 UniModMat2::operator-() const { return {Unchecked{}, -d1_, -d2_, -d3_, -d4_}; }

UniModMat2 UniModMat2::pow(std::int64_t e) const {
  UniModMat2 base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  UniModMat2 acc;
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

UniModMat2 operator*(const UniModMat2& a, const UniModMat2& b) {
  return {UniModMat2::Unchecked{}, a.d1_ * b.d1_ + a.d2_ * b.d3_, a.d1_ * b.d2_ + a.d2_ * b.d4_,
          a.d3_ * b.d1_ + a.d4_ * b.d3_, a.d3_ * b.d2_ + a.d4_ * b.d4_};
}

std::string UniModMat2::to_string() const {
  return "[[" + d1_.str() + "," + d2_.str() + "],[" + d3_.str() + "," + d4_.str() + "]]";
}

bool is_unimodular(const BigInt& d1, const BigInt& d2, const BigInt& d3, const BigInt& d4) {
  return d1 * d4 - d2 * d3 == 1;
}

// ---------------------------------------------------------------- membership

bool is_member(const UniModMat2& m) {
  return is_even(m.d1() * m.d2()) && is_even(m.d3() * m.d4());
}

std::string_view to_string(Mod2Class c) {
  switch (c) {
    case Mod2Class::IdClass: return "IdClass";
    case Mod2Class::VClass: return "VClass";
    case Mod2Class::Other: return "Other";
  }
  return "?";
}

Mod2Class reduce_mod2(const UniModMat2& m) {
  const int a = !is_even(m.d1()), b = !is_even(m.d2()), c = !is_even(m.d3()), d = !is_even(m.d4());
  if (a && !b && !c && d) return Mod2Class::IdClass;
  if (!a && b && c && !d) return Mod2Class::VClass;
  return Mod2Class::Other;
}

// ---------------------------------------------------------------- words

std::int64_t GenWord::length() const {
  std::int64_t n = 0;
  for (const auto& t : tokens) n += std::llabs(t.exponent);
  return n;
}

bool GenWord::is_normal() const {
  if (central_sign != 1 && central_sign != -1) return false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& t = tokens[i];
    if (t.gen == Gen::V && t.exponent != 1) return false;
    if (t.gen == Gen::T && t.exponent == 0) return false;
    if (i > 0 && tokens[i - 1].gen == t.gen) return false;
  }
  return true;
}

GenWord parse_word(std::string_view text) {
  GenWord w;
  std::istringstream in{std::string(text)};
  std::string tok;
  bool first = true;
  while (in >> tok) {
    if (first && tok[0] == '-') {
      w.central_sign = -1;
      tok.erase(0, 1);
      if (tok.empty() || tok == "1") {
        first = false;
        continue;
      }
    }
    if (first && tok == "1") {
      first = false;
      continue;
    }
    first = false;
    Gen g;
    if (tok[0] == 'V')
      g = Gen::V;
    else if (tok[0] == 'T')
      g = Gen::T;
    else
      throw Error(ErrorKind::Parse, "unknown generator token '" + tok + "'");
    std::int64_t e = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^' || tok.size() == 2)
        throw Error(ErrorKind::Parse, "malformed token '" + tok + "'");
      const char* begin = tok.data() + 2;
      const char* end = tok.data() + tok.size();
      if (*begin == '+') ++begin;
      auto [ptr, ec] = std::from_chars(begin, end, e);
      if (ec != std::errc() || ptr != end)
        throw Error(ErrorKind::Parse, "bad exponent in token '" + tok + "'");
    }
    w.tokens.push_back({g, e});
  }
  return w;
}

std::string format_word(const GenWord& w) {
  std::string out = w.central_sign < 0 ? "-" : "";
  if (w.tokens.empty()) return out + "1";
  bool first = true;
  for (const auto& t : w.tokens) {
    if (!first) out += ' ';
    first = false;
    out += t.gen == Gen::V ? 'V' : 'T';
    if (t.exponent != 1) out += "^" + std::to_string(t.exponent);
  }
  return out;
}

UniModMat2 eval_word(const GenWord& w) {
  UniModMat2 acc = w.central_sign < 0 ? UniModMat2::minus_identity() : UniModMat2::identity();
  for (const auto& t : w.tokens) {
    if (t.gen == Gen::T) {
      acc = acc * UniModMat2::T_power(t.exponent);
    } else {
      const auto r = ((t.exponent % 4) + 4) % 4;
      acc = acc * UniModMat2::V().pow(r);
    }
  }
  return acc;
}

GenWord normal_form(const GenWord& w) {
  GenWord out;
  out.central_sign = w.central_sign < 0 ? -1 : 1;
  auto& stack = out.tokens;
  for (const auto& t : w.tokens) {
    if (t.gen == Gen::T) {
      if (t.exponent == 0) continue;
      if (!stack.empty() && stack.back().gen == Gen::T) {
        stack.back().exponent += t.exponent;
        if (stack.back().exponent == 0) stack.pop_back();
      } else {
        stack.push_back(t);
      }
      continue;
    }
    auto r = ((t.exponent % 4) + 4) % 4;
    if (r >= 2) {
      out.central_sign = -out.central_sign;  // V^2 = -1
      r -= 2;
    }
    if (r == 0) continue;
    if (!stack.empty() && stack.back().gen == Gen::V) {
      stack.pop_back();
      out.central_sign = -out.central_sign;
    } else {
      stack.push_back({Gen::V, 1});
    }
  }
  return out;
}

GenWord decompose(const UniModMat2& m) {
  if (!is_even(m.d1() * m.d2()))
    throw Error(ErrorKind::NotMember, "not a member: row product d1*d2 = " + BigInt(m.d1() * m.d2()).str() + " is odd");
  if (!is_even(m.d3() * m.d4()))
    throw Error(ErrorKind::NotMember, "not a member: row product d3*d4 = " + BigInt(m.d3() * m.d4()).str() + " is odd");

  // Left-multiply by T^k and V until the lower-left entry vanishes, recording
  // the inverse of each step; then m = (recorded inverses) * (+-T^j).
  std::vector<Token> inverses;
  UniModMat2 cur = m;
  while (cur.d3() != 0) {
    if (abs(cur.d1()) > abs(cur.d3())) {
      const BigInt k = -nearest_quotient(cur.d1(), 2 * cur.d3());
      const std::int64_t k64 = to_i64(k);
      cur = UniModMat2::T_power(k64) * cur;
      inverses.push_back({Gen::T, -k64});
    } else {
      // Ties cannot occur for members (first-column entries differ in parity);
      // V is applied first if they did.
      cur = UniModMat2::V() * cur;
      inverses.push_back({Gen::V, -1});
    }
  }
  // cur = s * T^j with s = d1 = d4 = +-1.
  GenWord w;
  w.tokens = std::move(inverses);
  w.central_sign = cur.d1() < 0 ? -1 : 1;
  const BigInt j = cur.d1() * cur.d2() / 2;
  w.tokens.push_back({Gen::T, to_i64(j)});
  return normal_form(w);
}

// ---------------------------------------------------------------- presentation

std::vector<GenWord> normal_forms_up_to(int length_bound) {
  std::vector<GenWord> out;
  GenWord cur;
  auto grow = [&](auto&& self, std::int64_t remaining) -> void {
    out.push_back(cur);
    const bool last_is_v = !cur.tokens.empty() && cur.tokens.back().gen == Gen::V;
    const bool last_is_t = !cur.tokens.empty() && cur.tokens.back().gen == Gen::T;
    if (!last_is_v && remaining >= 1) {
      cur.tokens.push_back({Gen::V, 1});
      self(self, remaining - 1);
      cur.tokens.pop_back();
    }
    if (!last_is_t) {
      for (std::int64_t k = 1; k <= remaining; ++k)
        for (std::int64_t e : {k, -k}) {
          cur.tokens.push_back({Gen::T, e});
          self(self, remaining - k);
          cur.tokens.pop_back();
        }
    }
  };
  grow(grow, length_bound);
  return out;
}

PresentationReport verify_presentation(int length_bound) {
  if (length_bound < 1 || length_bound > 12)
    throw Error(ErrorKind::OutOfDomain, "presentation check supports length bounds 1..12");
  PresentationReport report;
  report.length_bound = length_bound;

  const auto v4 = eval_word(parse_word("V V V V"));
  report.v4_is_identity = v4 == UniModMat2::identity();
  if (!report.v4_is_identity) report.failures.push_back("V^4 evaluates to " + v4.to_string());

  const auto rel = eval_word(parse_word("V^2 T V^-2 T^-1"));
  report.v2_commutes_with_t = rel == UniModMat2::identity();
  if (!report.v2_commutes_with_t) report.failures.push_back("V^2 T V^-2 T^-1 evaluates to " + rel.to_string());

  std::unordered_set<std::string> seen;
  for (auto w : normal_forms_up_to(length_bound)) {
    for (int sign : {1, -1}) {
      w.central_sign = sign;
      ++report.forms_checked;
      if (!seen.insert(eval_word(w).to_string()).second) ++report.collisions;
    }
  }
  return report;
}

}  // namespace emcg::sl2z

#include <doctest.h>

#include <random>

#include "emcg/error.hpp"
#include "emcg/sl2z.hpp"

using namespace emcg;
using namespace emcg::sl2z;

namespace {

ErrorKind kind_of(const auto& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an emcg::Error");
  return ErrorKind::Parse;
}

UniModMat2 mat(long a, long b, long c, long d) { return UniModMat2(a, b, c, d); }

GenWord random_normal_word(std::mt19937_64& rng, int max_length) {
  GenWord w;
  w.central_sign = (rng() & 1) ? 1 : -1;
  const int budget = static_cast<int>(rng() % static_cast<unsigned>(max_length + 1));
  int used = 0;
  bool v = rng() & 1;
  while (used < budget) {
    if (v) {
      w.tokens.push_back({Gen::V, 1});
      ++used;
    } else {
      const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(budget - used));
      w.tokens.push_back({Gen::T, (rng() & 1) ? k : -k});
      used += k;
    }
    v = !v;
  }
  return w;
}

}  // namespace

TEST_CASE("matrix construction") {
  CHECK(kind_of([] { mat(2, 0, 0, 1); }) == ErrorKind::InvalidMatrix);
  CHECK(UniModMat2::V() * UniModMat2::V() == UniModMat2::minus_identity());
  CHECK(UniModMat2::T().pow(3) == mat(1, 6, 0, 1));
  CHECK(UniModMat2::T_power(-2) == mat(1, -4, 0, 1));
  CHECK(mat(2, -1, 1, 0).inverse() * mat(2, -1, 1, 0) == UniModMat2::identity());
  CHECK(mat(2, -1, 1, 0).to_string() == "[[2,-1],[1,0]]");
  // Far outside 64-bit range.
  const auto big = UniModMat2::T().pow(4000000000000000000LL) * UniModMat2::T().pow(4000000000000000000LL);
  CHECK(big.d2() == BigInt("16000000000000000000"));
}

TEST_CASE("is_member") {
  CHECK(is_member(UniModMat2::identity()));
  CHECK_FALSE(is_member(mat(1, 1, 0, 1)));
  CHECK(is_member(mat(2, -1, 1, 0)));
  CHECK(mat(2, -1, 1, 0) == UniModMat2::T() * UniModMat2::V());
  CHECK(is_member(UniModMat2::minus_identity()));
}

TEST_CASE("reduce_mod2") {
  CHECK(reduce_mod2(UniModMat2::T()) == Mod2Class::IdClass);
  CHECK(reduce_mod2(UniModMat2::V()) == Mod2Class::VClass);
  CHECK(reduce_mod2(mat(1, 1, 0, 1)) == Mod2Class::Other);
  CHECK(reduce_mod2(mat(0, 1, -1, 1)) == Mod2Class::Other);
  CHECK(reduce_mod2(UniModMat2::minus_identity()) == Mod2Class::IdClass);
}

TEST_CASE("the (1 1 / 1 0) example") {
  // det = -1, so it is rejected before any reduction happens.
  CHECK(kind_of([] { mat(1, 1, 1, 0); }) == ErrorKind::InvalidMatrix);
}

TEST_CASE("eval_word") {
  CHECK(eval_word(parse_word("V V V V")) == UniModMat2::identity());
  CHECK(eval_word(parse_word("V^2 T")) == eval_word(parse_word("T V^2")));
  CHECK(eval_word(GenWord{}) == UniModMat2::identity());
  CHECK(eval_word(parse_word("V V")) == UniModMat2::minus_identity());
  CHECK(eval_word(parse_word("T V")) == mat(2, -1, 1, 0));
  CHECK(eval_word(parse_word("-T")) == mat(-1, -2, 0, -1));
}

TEST_CASE("parse_word and format_word") {
  const auto w = parse_word("  V T^-3  V ");
  REQUIRE(w.tokens.size() == 3);
  CHECK(w.tokens[1].gen == Gen::T);
  CHECK(w.tokens[1].exponent == -3);
  CHECK(format_word(w) == "V T^-3 V");
  CHECK(parse_word("- V").central_sign == -1);
  CHECK(parse_word("-V T").central_sign == -1);
  CHECK(format_word(GenWord{}) == "1");
  CHECK(parse_word("1") == GenWord{});
  CHECK(format_word(parse_word("-1")) == "-1");
  for (const char* bad : {"X", "V^", "T^a", "V T^2x", "- -V"})
    CHECK(kind_of([&] { parse_word(bad); }) == ErrorKind::Parse);
}

TEST_CASE("decompose") {
  CHECK(format_word(decompose(UniModMat2::V())) == "V");
  CHECK(format_word(decompose(UniModMat2::T().pow(3))) == "T^3");
  CHECK(eval_word(decompose(mat(2, -1, 1, 0))) == mat(2, -1, 1, 0));
  CHECK(format_word(decompose(UniModMat2::minus_identity())) == "-1");
  try {
    decompose(mat(1, 1, 0, 1));
    FAIL("expected NotMember");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMember);
    CHECK(std::string(e.what()).find("d1*d2") != std::string::npos);
  }
}

TEST_CASE("normal_form") {
  CHECK(normal_form(parse_word("T T^-1")) == GenWord{});
  CHECK(normal_form(parse_word("V V")) == parse_word("-1"));
  CHECK(normal_form(parse_word("V V V")) == parse_word("-V"));
  CHECK(normal_form(parse_word("T^2 T^3 V^5")) == parse_word("T^5 V"));
}

TEST_CASE("verify_presentation") {
  const auto r = verify_presentation(6);
  CHECK(r.v4_is_identity);
  CHECK(r.v2_commutes_with_t);
  CHECK(r.collisions == 0);
  CHECK(r.ok());
  CHECK(r.forms_checked == 2 * normal_forms_up_to(6).size());
  CHECK(kind_of([] { verify_presentation(0); }) == ErrorKind::OutOfDomain);
}

// ----------------------------------------------------------------- properties

TEST_CASE("property: membership closure under products and inverses") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto a = eval_word(random_normal_word(rng, 12));
    const auto b = eval_word(random_normal_word(rng, 12));
    REQUIRE(is_member(a));
    REQUIRE(is_member(a * b));
    REQUIRE(is_member(a.inverse()));
  }
}

TEST_CASE("property: characterization by reduction mod 2") {
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b)
      for (int c = -5; c <= 5; ++c)
        for (int d = -5; d <= 5; ++d) {
          if (a * d - b * c != 1) continue;
          const auto m = mat(a, b, c, d);
          const auto cls = reduce_mod2(m);
          REQUIRE(is_member(m) == (cls == Mod2Class::IdClass || cls == Mod2Class::VClass));
        }
}

TEST_CASE("property: decompose roundtrip on random normal forms") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    const auto w = random_normal_word(rng, 20);
    const auto m = eval_word(w);
    const auto d = decompose(m);
    REQUIRE(eval_word(d) == m);
    // Normal forms are unique, so the decomposition recovers the word itself.
    REQUIRE(d == normal_form(w));
  }
}

TEST_CASE("property: normal form is idempotent and preserves the value") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 1000; ++i) {
    GenWord w;
    w.central_sign = (rng() & 1) ? 1 : -1;
    const int n = static_cast<int>(rng() % 10);
    for (int j = 0; j < n; ++j)
      w.tokens.push_back({(rng() & 1) ? Gen::V : Gen::T, static_cast<std::int64_t>(rng() % 9) - 4});
    const auto nf = normal_form(w);
    REQUIRE(nf.is_normal());
    REQUIRE(normal_form(nf) == nf);
    REQUIRE(eval_word(nf) == eval_word(w));
  }
}

TEST_CASE("property: central sign") {
  CHECK(eval_word(parse_word("V V")) == UniModMat2::minus_identity());
  CHECK(is_member(UniModMat2::minus_identity()));
  CHECK(reduce_mod2(UniModMat2::minus_identity()) == Mod2Class::IdClass);
}

#include <doctest.h>

#include "emcg/error.hpp"
#include "emcg/homotopy_tables.hpp"

using namespace emcg;
using namespace emcg::htpy;

namespace {

bool out_of_domain(const auto& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == ErrorKind::OutOfDomain;
  }
  return false;
}

}  // namespace

TEST_CASE("FinAbGroup normal form") {
  CHECK(FinAbGroup(0, {2, 2}) == FinAbGroup::z2_squared());
  CHECK(FinAbGroup(0, {6}) == FinAbGroup(0, {2, 3}));
  CHECK(FinAbGroup(0, {4, 2}) == FinAbGroup(0, {2, 4}));
  CHECK(FinAbGroup(0, {1, 1}).is_trivial());
  CHECK(FinAbGroup(0, {0}) == FinAbGroup::integers());
  CHECK(FinAbGroup(2, {4}).to_string() == "Z^2+Z4");
  CHECK(FinAbGroup::trivial().to_string() == "0");
  CHECK(FinAbGroup(0, {2, 2}).order() == 4);
  CHECK_FALSE(FinAbGroup::integers().order().has_value());
  CHECK(direct_sum(FinAbGroup::z2(), FinAbGroup::z2()) == FinAbGroup::z2_squared());
}

TEST_CASE("stable table examples") {
  CHECK(s_pi_p_so_p(6).is_trivial());
  CHECK(s_pi_p_so_p(11) == FinAbGroup::integers());
  CHECK(s_pi_p_so_p(8) == FinAbGroup::z2_squared());
  CHECK(s_pi_p_so_p(14) == FinAbGroup::z2());
  CHECK(s_pi_p_so_p(13).is_trivial());
}

TEST_CASE("unstable table examples") {
  CHECK(pi_p_so_p_plus(8, 2) == FinAbGroup::z2());
  CHECK(pi_p_so_p_plus(10, 2).is_trivial());
  CHECK(pi_p_so_p_plus(12, 1) == FinAbGroup::z2());
  CHECK(pi_p_so_p_plus(16, 1) == FinAbGroup::z2_squared());
  CHECK(pi_pm1_so_pm1(14) == FinAbGroup::z2());
  CHECK(pi_pm1_so_pm1(22) == FinAbGroup::z2());
}

TEST_CASE("hom_to") {
  CHECK(hom_to(2, FinAbGroup::z2()) == FinAbGroup::z2_squared());
  CHECK(hom_to(0, FinAbGroup::z2_squared()).is_trivial());
  CHECK(hom_to(2, FinAbGroup::trivial()).is_trivial());
  CHECK(hom_to(1, FinAbGroup::integers()) == FinAbGroup::integers());
}

TEST_CASE("property: lookups raise outside their domains") {
  for (int p : {-3, 0, 1, 2}) CHECK(out_of_domain([&] { s_pi_p_so_p(p); }));
  for (int p = 3; p <= 64; ++p) CHECK_NOTHROW(s_pi_p_so_p(p));
  for (int p = -2; p <= 40; ++p)
    for (int shift = 0; shift <= 3; ++shift) {
      const bool valid = p >= 4 && p % 2 == 0 && (shift == 1 || shift == 2);
      if (valid)
        CHECK_NOTHROW(pi_p_so_p_plus(p, shift));
      else
        CHECK(out_of_domain([&] { pi_p_so_p_plus(p, shift); }));
    }
  for (int p = -2; p <= 40; ++p) {
    if (p >= 9 && p % 8 == 6)
      CHECK_NOTHROW(pi_pm1_so_pm1(p));
    else
      CHECK(out_of_domain([&] { pi_pm1_so_pm1(p); }));
  }
  CHECK(out_of_domain([] { hom_to(-1, FinAbGroup::z2()); }));
}

TEST_CASE("property: torsion order does not matter") {
  CHECK(FinAbGroup(0, {2, 2}) == FinAbGroup(0, std::vector<std::int64_t>{2, 2}));
  CHECK(FinAbGroup(1, {4, 2, 3}) == FinAbGroup(1, {3, 2, 4}));
  CHECK(FinAbGroup(1, {4, 2, 3}) == FinAbGroup(1, {2, 12}));
}

TEST_CASE("property: the two tables agree on even p, apart from the p=6 exception") {
  for (int p = 4; p <= 32; p += 2) {
    if (p == 6) {
      CHECK(s_pi_p_so_p(6).is_trivial());
      CHECK(pi_p_so_p_plus(6, 1) == FinAbGroup::z2());
      continue;
    }
    CHECK(s_pi_p_so_p(p) == pi_p_so_p_plus(p, 1));
  }
}

#include <doctest.h>

#include "emcg/ambient_geom.hpp"
#include "emcg/error.hpp"
#include "emcg/oracles.hpp"
#include "emcg/sl2z.hpp"
#include "emcg/smallgrp.hpp"

using namespace emcg;
using namespace emcg::geom;

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

std::int64_t dense_det(const SignedPermMatrix& m) {
  oracle::DenseInt d;
  for (const auto& row : m.dense()) d.emplace_back(row.begin(), row.end());
  return oracle::bareiss_determinant(d);
}

const HpAction kV{{{{0, -1}, {1, 0}}}};
const HpAction kSwap{{{{0, 1}, {1, 0}}}};
const HpAction kMinus{{{{-1, 0}, {0, -1}}}};

}  // namespace

TEST_CASE("signed permutation basics") {
  CHECK(kind_of([] { SignedPermMatrix({{0, 1}, {0, 1}}); }) == ErrorKind::InvalidMatrix);
  CHECK(kind_of([] { SignedPermMatrix({{0, 2}}); }) == ErrorKind::InvalidMatrix);
  CHECK(kind_of([] { SignedPermMatrix({{3, 1}}); }) == ErrorKind::InvalidMatrix);
  const SignedPermMatrix m({{1, -1}, {0, 1}});
  CHECK(m.determinant() == 1);
  CHECK(m.order() == 4);
  CHECK(m.act({3, 5}) == std::vector<std::int64_t>{5, -3});
  // Composition agrees with dense multiplication.
  const SignedPermMatrix n({{0, -1}, {1, 1}});
  oracle::DenseInt dm, dn;
  for (const auto& r : m.dense()) dm.emplace_back(r.begin(), r.end());
  for (const auto& r : n.dense()) dn.emplace_back(r.begin(), r.end());
  oracle::DenseInt prod;
  for (const auto& r : (m * n).dense()) prod.emplace_back(r.begin(), r.end());
  CHECK(prod == oracle::dense_multiply(dm, dn));
}

TEST_CASE("omega") {
  const auto om = build_omega(3);
  CHECK(om.size() == 9);
  CHECK(om.determinant() == 1);
  CHECK(om.row(0).sign == -1);
  CHECK(build_omega(2).row(0).sign == 1);
  for (int p = 1; p <= 9; p += 2) {
    const auto m = build_omega(p);
    CHECK(m.pow(4).is_identity());
    CHECK_FALSE(m.pow(2).is_identity());
  }
  const auto d = restrict_to_product(om, 3, 3);
  CHECK(d.swaps_factors);
  CHECK(d.first_block_det == -1);
  CHECK(d.second_block_det == 1);
  CHECK(kind_of([] { build_omega(0); }) == ErrorKind::OutOfDomain);
}

TEST_CASE("omega hat") {
  const auto h = build_omega_hat(4);
  CHECK(h.order() == 2);
  CHECK(h.determinant() == 1);
  const auto d = restrict_to_product(h, 4, 4);
  CHECK(d.swaps_factors);
  CHECK(d.first_block_det == 1);
  CHECK(d.second_block_det == 1);
  CHECK(kind_of([] { build_omega_hat(0); }) == ErrorKind::OutOfDomain);
  CHECK(kind_of([] { build_omega_hat(3); }) == ErrorKind::OutOfDomain);
}

TEST_CASE("omega prime") {
  const auto m = build_omega_prime(2, 5);
  CHECK(m.size() == 2 + 5 + 3);
  CHECK(m.determinant() == 1);
  CHECK(m.pow(2).is_identity());
  CHECK(m.row(1).sign == -1);
  CHECK(m.row(2 + 2).sign == -1);
  const auto d = restrict_to_product(m, 2, 5);
  CHECK_FALSE(d.swaps_factors);
  CHECK(d.first_block_det == -1);
  CHECK(d.second_block_det == -1);
  CHECK(kind_of([] { build_omega_prime(3, 3); }) == ErrorKind::OutOfDomain);
  CHECK(kind_of([] { build_omega_prime(1, 3); }) == ErrorKind::OutOfDomain);
}

TEST_CASE("restrict_to_product") {
  const auto d = restrict_to_product(SignedPermMatrix::identity(9), 3, 3);
  CHECK_FALSE(d.swaps_factors);
  CHECK(d.first_block_det == 1);
  CHECK(d.second_block_det == 1);
  // Mixes coordinate 0 into a block.
  CHECK(kind_of([] { restrict_to_product(SignedPermMatrix({{1, 1}, {0, 1}, {2, 1}, {3, 1}, {4, 1}}), 1, 1); }) ==
        ErrorKind::NotBlockStructured);
  // Splits a block between the two factors.
  CHECK(kind_of([] {
          restrict_to_product(SignedPermMatrix({{0, 1}, {1, 1}, {3, 1}, {2, 1}, {4, 1}}), 1, 1);
        }) == ErrorKind::NotBlockStructured);
  CHECK(kind_of([] { restrict_to_product(SignedPermMatrix::identity(9), 3, 4); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("induced homology actions") {
  CHECK(induced_homology_action(restrict_to_product(build_omega(3), 3, 3)) == kV);
  CHECK(induced_homology_action(restrict_to_product(build_omega_hat(4), 4, 4)) == kSwap);
  CHECK(induced_homology_action(restrict_to_product(build_double_reflection(4), 4, 4)) == kMinus);
  CHECK(kind_of([] { induced_homology_action(restrict_to_product(build_omega_prime(2, 3), 2, 3)); }) ==
        ErrorKind::OutOfDomain);
}

// ----------------------------------------------------------------- properties

TEST_CASE("property: constructed matrices are orthogonal with determinant one") {
  for (int p = 1; p <= 11; ++p) {
    std::vector<SignedPermMatrix> ms{build_omega(p)};
    if (p >= 2 && p % 2 == 0) ms.push_back(build_omega_hat(p));
    if (p >= 2) ms.push_back(build_double_reflection(p));
    if (p >= 2) ms.push_back(build_omega_prime(p, p + 1));
    for (const auto& m : ms) {
      CHECK(m.is_orthogonal());
      CHECK(m.determinant() == 1);
      CHECK(dense_det(m) == 1);
      CHECK((m * m.transpose()).is_identity());
    }
  }
}

TEST_CASE("property: omega squared acts as minus the identity") {
  for (int p = 1; p <= 11; ++p) {
    const auto d = restrict_to_product(build_omega(p).pow(2), p, p);
    CHECK_FALSE(d.swaps_factors);
    CHECK(d.first_block_det == -1);
    CHECK(d.second_block_det == -1);
    CHECK(induced_homology_action(d) == kMinus);
    CHECK(kV * kV == kMinus);
  }
}

TEST_CASE("property: omega induces V for odd p") {
  const auto v = sl2z::UniModMat2::V();
  for (int p = 1; p <= 11; p += 2) {
    const auto h = induced_homology_action(restrict_to_product(build_omega(p), p, p));
    CHECK(h == kV);
    CHECK(sl2z::UniModMat2(h.m[0][0], h.m[0][1], h.m[1][0], h.m[1][1]) == v);
  }
}

// Row vectors: x (M N) applies M first, so actions compose in reverse.
TEST_CASE("property: induced action reverses products") {
  for (int p = 2; p <= 8; p += 2) {
    const auto a = build_omega_hat(p), b = build_double_reflection(p), c = build_omega(p);
    auto act = [&](const SignedPermMatrix& m) { return induced_homology_action(restrict_to_product(m, p, p)); };
    CHECK(act(a * b) == act(b) * act(a));
    CHECK(act(c * a) == act(a) * act(c));
    CHECK(act(a * c) == act(c) * act(a));
    CHECK(act(b * c) == act(c) * act(b));
  }
}

TEST_CASE("property: even-p image is the Klein four-group") {
  for (int p = 2; p <= 10; p += 2) {
    const auto g = generate_matrix_group({induced_homology_action(restrict_to_product(build_omega_hat(p), p, p)),
                                          induced_homology_action(restrict_to_product(build_double_reflection(p), p, p))});
    CHECK(g.elements.size() == 4);
    CHECK(grp::is_isomorphic(g.table, grp::klein()));
  }
  CHECK(generate_matrix_group({kV}).elements.size() == 4);
  CHECK(grp::is_isomorphic(generate_matrix_group({kV}).table, grp::cyclic(4)));
  CHECK(kind_of([] { generate_matrix_group({HpAction{{{{1, 1}, {0, 1}}}}}, 64); }) == ErrorKind::Capacity);
}

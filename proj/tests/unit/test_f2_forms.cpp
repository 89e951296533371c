#include <doctest.h>

#include <algorithm>
#include <random>

#include "emcg/error.hpp"
#include "emcg/f2_forms.hpp"
#include "emcg/oracles.hpp"

using namespace emcg;
using namespace emcg::f2;

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

QuadraticRefinement refinement(std::vector<int> values) {
  return QuadraticRefinement(SymplecticSpace::standard(static_cast<int>(values.size() / 2)), values);
}

Matrix swap2() { return Matrix::from_rows({{0, 1}, {1, 0}}); }

// Random invertible change of basis, applied to the standard Gram.
Matrix random_invertible(int n, std::mt19937& rng) {
  for (;;) {
    Matrix m(n);
    for (int j = 0; j < n; ++j) m.set_column(j, static_cast<Bits>(rng() & ((1u << n) - 1)));
    if (m.invertible()) return m;
  }
}

}  // namespace

TEST_CASE("eval_q on small examples") {
  const auto e1 = Vector::basis(2, 0), e2 = Vector::basis(2, 1);
  CHECK(eval_q(refinement({0, 0}), e1 + e2) == 1);
  CHECK(eval_q(refinement({1, 1}), e1 + e2) == 1);
  CHECK(eval_q(refinement({1, 0}), Vector(2, 0)) == 0);
  CHECK(eval_q(refinement({1, 1, 1, 1}), Vector(4, 0)) == 0);
  CHECK(kind_of([&] { eval_q(refinement({0, 0}), Vector(4, 1)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("symplectic_basis") {
  SUBCASE("standard pairing gives the standard pairs") {
    const auto basis = symplectic_basis(SymplecticSpace::standard(2));
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].a == Vector::basis(4, 0));
    CHECK(basis[0].b == Vector::basis(4, 1));
    CHECK(basis[1].a == Vector::basis(4, 2));
    CHECK(basis[1].b == Vector::basis(4, 3));
  }
  SUBCASE("permuted basis in dimension 4") {
    // pairs (e0,e2) and (e1,e3)
    const SymplecticSpace space(Matrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
    const auto basis = symplectic_basis(space);
    REQUIRE(basis.size() == 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        CHECK(space.pair(basis[i].a, basis[j].b) == (i == j ? 1 : 0));
        CHECK(space.pair(basis[i].a, basis[j].a) == 0);
        CHECK(space.pair(basis[i].b, basis[j].b) == 0);
      }
  }
  SUBCASE("degenerate and odd inputs") {
    CHECK(kind_of([] { symplectic_basis(Matrix::from_rows({{0, 0}, {0, 0}})); }) == ErrorKind::Degenerate);
    CHECK(kind_of([] { symplectic_basis(Matrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}})); }) ==
          ErrorKind::Degenerate);
    CHECK(kind_of([] { SymplecticSpace(Matrix::from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}})); }) ==
          ErrorKind::Degenerate);
  }
}

TEST_CASE("arf examples") {
  CHECK(arf(refinement({0, 0})) == 0);
  CHECK(arf(refinement({1, 1})) == 1);
  CHECK(arf(refinement({1, 1, 1, 1})) == 0);
  CHECK(arf(refinement({1, 1, 0, 0})) == 1);
  CHECK(oracle::majority_arf(refinement({1, 1})) == 1);
  CHECK(oracle::majority_arf(refinement({1, 1, 1, 1})) == 0);
}

TEST_CASE("enumerate_sp sizes") {
  CHECK(enumerate_sp(1).size() == 6);
  CHECK(enumerate_sp(2).size() == 720);
  CHECK(oracle::brute_force_sp(1).size() == 6);
  CHECK(kind_of([] { enumerate_sp(0); }) == ErrorKind::UnsupportedSize);
  CHECK(kind_of([] { enumerate_sp(4); }) == ErrorKind::UnsupportedSize);

  const auto sp = enumerate_sp(2);
  CHECK(std::is_sorted(sp.begin(), sp.end()));
  CHECK(std::adjacent_find(sp.begin(), sp.end()) == sp.end());
  // Same set as the dense brute force.
  std::vector<Matrix> brute;
  for (const auto& d : oracle::brute_force_sp(2)) {
    std::vector<std::vector<int>> rows;
    for (const auto& r : d) rows.emplace_back(r.begin(), r.end());
    brute.push_back(Matrix::from_rows(rows));
  }
  std::sort(brute.begin(), brute.end());
  CHECK(brute == sp);
}

TEST_CASE("enumerate_sp k=3 order") { CHECK(enumerate_sp(3).size() == 1451520); }

TEST_CASE("transport") {
  CHECK(transport(refinement({1, 0, 1, 1}), Matrix::identity(4)) == refinement({1, 0, 1, 1}));
  CHECK(transport(refinement({0, 0}), swap2()) == refinement({0, 0}));
  CHECK(transport(refinement({1, 0}), swap2()) == refinement({0, 1}));
  CHECK(kind_of([] { transport(refinement({0, 0}), Matrix::from_rows({{1, 1}, {0, 0}})); }) ==
        ErrorKind::NotSymplectic);
  CHECK(kind_of([] { transport(refinement({0, 0}), Matrix::identity(4)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("stabilizers and orbits") {
  const std::vector<Matrix> expected{Matrix::identity(2), swap2()};
  auto stab = stabilizer(refinement({0, 0}));
  CHECK(stab.size() == 2);
  CHECK(std::is_permutation(stab.begin(), stab.end(), expected.begin()));
  CHECK(stabilizer(refinement({1, 1})).size() == 6);
  CHECK(stabilizer(refinement({0, 0, 0, 0})).size() == 72);
  CHECK(orbit(refinement({0, 0})).size() == 3);
  CHECK(orbit(refinement({1, 1})).size() == 1);
  CHECK(orbit(refinement({0, 0, 0, 0})).size() == 10);
  CHECK(kind_of([] { stabilizer(refinement({0, 0, 0, 0, 0, 0, 0, 0})); }) == ErrorKind::UnsupportedSize);
}

// ----------------------------------------------------------------- properties

TEST_CASE("property: defining identity for every refinement up to dimension 8") {
  for (int k = 1; k <= 4; ++k)
    for (const auto& q : all_refinements(SymplecticSpace::standard(k))) REQUIRE(oracle::refinement_identity_holds(q));
  // Also on non-standard pairings.
  std::mt19937 rng(7);
  for (int k = 1; k <= 3; ++k) {
    const auto b = random_invertible(2 * k, rng);
    const auto gram = b.transpose() * SymplecticSpace::standard(k).gram() * b;
    for (const auto& q : all_refinements(SymplecticSpace(gram))) REQUIRE(oracle::refinement_identity_holds(q));
  }
}

TEST_CASE("property: majority oracle agrees with arf up to dimension 8") {
  for (int k = 1; k <= 4; ++k)
    for (const auto& q : all_refinements(SymplecticSpace::standard(k))) REQUIRE(oracle::majority_arf(q) == arf(q));
}

TEST_CASE("property: counting Arf values") {
  for (int k = 1; k <= 3; ++k) {
    const auto all = all_refinements(SymplecticSpace::standard(k));
    const auto zeros = std::count_if(all.begin(), all.end(), [](const auto& q) { return arf(q) == 0; });
    const long half = 1L << (2 * k - 1), shift = 1L << (k - 1);
    CHECK(all.size() == (1u << (2 * k)));
    CHECK(zeros == half + shift);
    CHECK(static_cast<long>(all.size()) - zeros == half - shift);
  }
}

TEST_CASE("property: Arf is transport invariant") {
  for (int k = 1; k <= 2; ++k) {
    const auto sp = enumerate_sp(k);
    for (const auto& q : all_refinements(SymplecticSpace::standard(k)))
      for (const auto& s : sp) REQUIRE(arf(transport(q, s)) == arf(q));
  }
}

TEST_CASE("property: orbit-stabilizer") {
  for (int k = 1; k <= 2; ++k) {
    const auto order = enumerate_sp(k).size();
    for (const auto& q : all_refinements(SymplecticSpace::standard(k)))
      CHECK(orbit(q).size() * stabilizer(q).size() == order);
  }
}

TEST_CASE("property: Arf does not depend on the symplectic basis") {
  std::mt19937 rng(11);
  for (int k = 1; k <= 3; ++k) {
    const auto space = SymplecticSpace::standard(k);
    // Images of the standard basis under symplectic maps are symplectic bases.
    std::vector<Matrix> changes{Matrix::identity(2 * k)};
    if (k <= 2) {
      const auto sp = enumerate_sp(k);
      for (int i = 0; i < 20; ++i) changes.push_back(sp[rng() % sp.size()]);
    }
    for (const auto& q : all_refinements(space)) {
      const int reference = arf(q);
      for (const auto& s : changes) {
        std::vector<HyperbolicPair> basis;
        for (int i = 0; i < k; ++i)
          basis.push_back({s.apply(Vector::basis(2 * k, 2 * i)), s.apply(Vector::basis(2 * k, 2 * i + 1))});
        REQUIRE(arf(q, basis) == reference);
      }
    }
  }
  // A non-standard Gram: the computed basis must also agree with the majority.
  const auto b = random_invertible(4, rng);
  const SymplecticSpace twisted(b.transpose() * SymplecticSpace::standard(2).gram() * b);
  for (const auto& q : all_refinements(twisted)) CHECK(oracle::majority_arf(q) == arf(q));
}

TEST_CASE("stabilizer on a non-standard pairing has the same order") {
  std::mt19937 rng(5);
  const auto b = random_invertible(4, rng);
  const SymplecticSpace twisted(b.transpose() * SymplecticSpace::standard(2).gram() * b);
  std::size_t sizes[2] = {0, 0};
  for (const auto& q : all_refinements(twisted)) {
    const auto stab = stabilizer(q);
    for (const auto& s : stab) CHECK(transport(q, s) == q);
    sizes[arf(q)] = stab.size();
  }
  CHECK(sizes[0] == 72);
  CHECK(sizes[1] == 120);
}

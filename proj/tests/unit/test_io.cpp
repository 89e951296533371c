#include <doctest.h>

#include "emcg/ambient_geom.hpp"
#include "emcg/classifier.hpp"
#include "emcg/error.hpp"
#include "emcg/io.hpp"
#include "emcg/sl2z.hpp"
#include "emcg/smallgrp.hpp"

using namespace emcg;
using io::Json;

namespace {

bool parse_error(const auto& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == ErrorKind::Parse;
  }
  return false;
}

template <class T, class From>
void roundtrip(const T& x, From from) {
  const auto text = io::to_json(x).dump();
  CHECK(from(io::parse_json(text)) == x);
}

}  // namespace

TEST_CASE("roundtrips") {
  roundtrip(sl2z::UniModMat2(2, -1, 1, 0), io::unimod_from_json);
  roundtrip(sl2z::UniModMat2::T().pow(4000000000000000000LL).pow(8), io::unimod_from_json);
  roundtrip(sl2z::parse_word("-V T^-3 V T^7"), io::word_from_json);
  roundtrip(f2::Matrix::from_rows({{0, 1, 1}, {1, 0, 0}, {1, 1, 1}}), io::f2_matrix_from_json);
  roundtrip(f2::QuadraticRefinement(f2::SymplecticSpace::standard(2), std::vector<int>{1, 0, 1, 1}),
            io::refinement_from_json);
  const f2::SymplecticSpace twisted(
      f2::Matrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
  roundtrip(f2::QuadraticRefinement(twisted, std::vector<int>{1, 1, 0, 1}), io::refinement_from_json);
  roundtrip(geom::build_omega(5), io::signed_perm_from_json);
  roundtrip(geom::HpAction{{{{0, -1}, {1, 0}}}}, io::hp_action_from_json);
  roundtrip(htpy::FinAbGroup(1, {2, 4}), io::fin_ab_from_json);
  for (const auto& f : std::vector<cls::KnotFamily>{cls::UnknotSphere{6}, cls::EqualProduct{1}, cls::EqualProduct{2},
                                                    cls::EqualProduct{8}, cls::UnequalProduct{3, 4},
                                                    cls::AdjacentProduct{22}})
    roundtrip(cls::classify(f), io::classification_from_json);
  const auto g = grp::dihedral(8);
  const auto back = io::table_group_from_json(io::parse_json(io::to_json(g).dump()));
  CHECK(back.table() == g.table());
}

TEST_CASE("schemas") {
  CHECK(io::to_json(sl2z::UniModMat2::V()).dump() == R"({"rows":[[0,-1],[1,0]]})");
  CHECK(io::to_json(htpy::FinAbGroup::z2_squared()).dump() == R"({"rank":0,"torsion":[2,2]})");
  const auto j = io::to_json(cls::classify(cls::EqualProduct{4}));
  CHECK(j.at("total") == "D8xZ2");
  CHECK(j.at("citations").size() > 0);
  CHECK(io::to_json(cls::classify(cls::UnequalProduct{2, 3})).at("kernel").is_null());
  const auto q = io::refinement_from_json(io::parse_json(R"({"values":[1,1]})"));
  CHECK(q.space() == f2::SymplecticSpace::standard(1));
}

TEST_CASE("malformed input") {
  CHECK(parse_error([] { io::parse_json("{"); }));
  CHECK(parse_error([] { io::unimod_from_json(io::parse_json(R"({"rows":[[1,0]]})")); }));
  CHECK(parse_error([] { io::unimod_from_json(io::parse_json(R"({"rows":[[1,0],[0,"x"]]})")); }));
  CHECK(parse_error([] { io::unimod_from_json(io::parse_json(R"({"cols":[[1,0],[0,1]]})")); }));
  CHECK(parse_error([] { io::word_from_json(io::parse_json(R"({"tokens":[["X",1]],"sign":1})")); }));
  CHECK(parse_error([] { io::refinement_from_json(io::parse_json(R"({"values":[1,1,1]})")); }));
  CHECK(parse_error([] { io::signed_perm_from_json(io::parse_json(R"({"size":2,"entries":[[0,0,1],[0,1,1]]})")); }));
  CHECK(parse_error([] { io::classification_from_json(io::parse_json(R"({"image":"Z7"})")); }));
  // Well-formed JSON, invalid mathematics: not a parse error.
  CHECK_THROWS_WITH_AS(io::unimod_from_json(io::parse_json(R"({"rows":[[2,0],[0,1]]})")), doctest::Contains("det"),
                       Error);
}

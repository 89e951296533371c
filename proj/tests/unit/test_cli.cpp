#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "emcg/io.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = emcg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli examples") {
  auto r = run({"member", R"({"rows":[[2,-1],[1,0]]})"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");

  r = run({"classify", "--family", "equal-product", "--p", "4", "--json"});
  CHECK(r.code == 0);
  CHECK(emcg::io::parse_json(r.out).at("total") == "D8xZ2");

  r = run({"eval-word", "V V V V"});
  CHECK(r.code == 0);
  CHECK(r.out == "[[1,0],[0,1]]\n");
  r = run({"--json", "eval-word", "V V V V"});
  CHECK(r.out == "{\"rows\":[[1,0],[0,1]]}\n");
}

TEST_CASE("cli subcommands") {
  CHECK(run({"arf", R"({"values":[1,1]})"}).out == "1\n");
  CHECK(run({"stabilizer", R"({"values":[0,0,0,0]})"}).out.rfind("order 72\n", 0) == 0);
  CHECK(run({"orbit", R"({"values":[0,0]})"}).out.rfind("size 3\n", 0) == 0);
  CHECK(run({"enumerate-sp", "--k", "2"}).out == "720\n");
  CHECK(run({"mod2", R"({"rows":[[0,-1],[1,0]]})"}).out == "VClass\n");
  CHECK(run({"decompose", R"({"rows":[[2,-1],[1,0]]})"}).out == "T V\n");
  auto r = run({"coset-enum", "gens: a,b,u; rels: a^2, b^2, u^2, [a,b], a u b^-1 u^-1", "--json"});
  CHECK(r.code == 0);
  CHECK(emcg::io::parse_json(r.out).at("index") == 8);
  CHECK(run({"isomorphic", "D8", "gens: a,b,u; rels: a^2, b^2, u^2, [a,b], a u b^-1 u^-1"}).out == "true\n");
  CHECK(run({"isomorphic", "D8", "Q8"}).out == "false\n");
  r = run({"build-omega", "--p", "3", "--json"});
  CHECK(r.code == 0);
  const auto omega = r.out;
  CHECK(emcg::io::parse_json(omega).at("determinant") == 1);
  CHECK(run({"induced-action", omega, "--p", "3"}).out == "[[0,-1],[1,0]]\n");
  CHECK(run({"build-omega", "--p", "4", "--variant", "prime", "--q", "6"}).code == 0);
  r = run({"classify", "--family", "unequal-product", "--p", "2", "--q", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("unknown") != std::string::npos);
  CHECK(run({"classify", "--family", "equal-product", "--p", "6", "--sequences", "--cross-validate"}).code == 0);
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).code == 2);
  auto r = run({"no-such-command"});
  CHECK(r.code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(run({"member", "{not json"}).code == 2);
  CHECK(run({"eval-word", "V X"}).code == 2);
  CHECK(run({"classify", "--family", "torus"}).code == 2);
  CHECK(run({"classify", "--family", "equal-product"}).code == 2);
  CHECK(run({"member", R"({"rows":[[2,0],[0,1]]})"}).code == 1);
  CHECK(run({"decompose", R"({"rows":[[1,1],[0,1]]})"}).code == 1);
  CHECK(run({"enumerate-sp", "--k", "4"}).code == 1);
  CHECK(run({"classify", "--family", "unknot", "--n", "3"}).code == 1);
  CHECK(run({"coset-enum", "gens: V,T; rels: V^4, V^2 T V^-2 T^-1", "--max-cosets", "500"}).code == 1);
  CHECK(run({"build-omega", "--p", "3", "--variant", "hat"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli JSON output round-trips") {
  auto r = run({"--json", "decompose", R"({"rows":[[2,-1],[1,0]]})"});
  const auto w = emcg::io::word_from_json(emcg::io::parse_json(r.out));
  CHECK(emcg::sl2z::format_word(w) == "T V");
  r = run({"--json", "classify", "--family", "adjacent-product", "--p", "14"});
  const auto c = emcg::io::classification_from_json(emcg::io::parse_json(r.out));
  CHECK(c == emcg::cls::classify(emcg::cls::AdjacentProduct{14}));
}

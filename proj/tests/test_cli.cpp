#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cayley/framework.hpp"
#include "cayley/z2wrz2.hpp"
#include "cli.hpp"

using namespace cayley;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("mul prints the product and its step count") {
  const Result r = run({"mul", "--group", "z2wrz2", "--nf", "C0", "--gen", "a"});
  CHECK(r.code == 0);
  const TapeRun lib = z2z2_apply(tokenize("C0", z2z2_alphabet()), Gen::a);
  CHECK(r.out == "0C0\nsteps " + std::to_string(lib.steps) + "\n");
}

TEST_CASE("mul output matches the library byte for byte on every group") {
  std::mt19937_64 rng(4);
  for (GroupId g : {GroupId::z2wrz2, GroupId::z2wrf2, GroupId::thompson_f}) {
    const Representation rep = make_representation(g);
    for (int t = 0; t < 20; ++t) {
      const Word nf = sample_nf(g, 40, rng);
      const Gen s = rep.gens[rng() % rep.gens.size()];
      const TapeRun lib = rep.apply(nf, s);
      const Result r = run({"mul", "--group", std::string(group_name(g)), "--nf", render(nf),
                            "--gen", std::string(gen_name(s))});
      CHECK(r.code == 0);
      CHECK(r.out == render(lib.output) + "\nsteps " + std::to_string(lib.steps) + "\n");
    }
  }
}

TEST_CASE("normalize and wp") {
  CHECK(run({"normalize", "--group", "z2wrf2", "--word", ""}).out == "B0\n");
  CHECK(run({"normalize", "--group", "thompson-f"}, "x0- x1-\n").out == "b##b\n");
  // [x0 x1^-1, x0^-1 x1 x0] written out letter by letter
  const Result r = run({"wp", "--group", "thompson-f", "--word",
                        "x1 x0- x0- x1- x0 x0 x1- x0- x1 x0"});
  CHECK(r.code == 0);
  CHECK(r.out == "trivial\n");
  CHECK(run({"wp", "--group", "z2wrz2", "--word", "c a c a-"}).out == "nontrivial\n");
}

TEST_CASE("exit codes") {
  CHECK(run({"mul", "--group", "z2wrz2", "--nf", "C0C0", "--gen", "a"}).code == 1);
  CHECK(run({"mul", "--group", "z2wrz2", "--nf", "C0", "--gen", "x0"}).code == 1);
  CHECK(run({"normalize", "--group", "thompson-f", "--word", "x0 x7"}).code == 1);
  CHECK(run({"normalize", "--word", "a"}).code == 64);
  CHECK(run({"normalize", "--group", "z9", "--word", "a"}).code == 64);
  CHECK(run({"frobnicate"}).code == 64);
  CHECK(run({}).code == 64);
  CHECK(run({"demo-nonqg", "--group", "thompson-f"}).code == 64);
  CHECK(run({"bench", "--group", "z2wrz2", "--gen", "a", "--sizes", "128,64"}).code == 64);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("JSON reports parse and follow the schema") {
  const Result b = run({"bench", "--group", "thompson-f", "--gen", "x0", "--sizes", "64,128,256",
                        "--samples", "2", "--seed", "9"});
  REQUIRE(b.code == 0);
  const auto j = nlohmann::json::parse(b.out);
  CHECK(j["group"] == "thompson-f");
  CHECK(j["gen"] == "x0");
  CHECK(j["sizes"].size() == 3);
  CHECK(j.contains("verdict"));

  const Result f = run({"fuzz", "--group", "thompson-f", "--trials", "50", "--max-len", "60",
                        "--seed", "42", "--drop-case-2.2.2b"});
  REQUIRE(f.code == 0);
  const auto fj = nlohmann::json::parse(f.out);
  CHECK(fj["pass"] == false);
  CHECK(fj["witness"]["word"].size() >= 1);

  const Result p = run({"probe", "--group", "z2wrf2", "--trials", "2", "--max-walk", "200",
                        "--checkpoints", "50,100,200"});
  REQUIRE(p.code == 0);
  CHECK(nlohmann::json::parse(p.out)["points"].size() == 3);
}

TEST_CASE("demo-nonqg prints a table and --out writes the same text") {
  const std::string path = "cli_test_demo.txt";
  const Result r = run({"demo-nonqg", "--group", "z2wrz2", "--ks", "1,3", "--out", path});
  REQUIRE(r.code == 0);
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  CHECK(s.str() == r.out);
  CHECK(r.out.find("word_len") != std::string::npos);
  std::remove(path.c_str());
}

#include <doctest.h>

#include <random>

#include "cayley/errors.hpp"
#include "cayley/framework.hpp"
#include "cayley/report_json.hpp"
#include "test_support.hpp"

using namespace cayley;
using cayley::testing::commutator;

namespace {

std::vector<Gen> word(std::string_view text) { return parse_gen_word(text); }

std::string nf_of(GroupId g, std::string_view text) {
  return render(word_to_nf(make_representation(g), word(text)).nf);
}

}  // namespace

TEST_CASE("word_to_nf examples") {
  CHECK(nf_of(GroupId::z2wrz2, "") == "C0");
  CHECK(nf_of(GroupId::thompson_f, "x0- x1-") == "b##b");
  CHECK(nf_of(GroupId::z2wrf2, "a a-") == "B0");
  CHECK_THROWS_AS(word_to_nf(make_representation(GroupId::thompson_f), word("a")), BadWord);
  CHECK_THROWS_AS(parse_gen_word("x2"), BadWord);
}

TEST_CASE("word problem examples") {
  const Representation z = make_representation(GroupId::z2wrz2);
  CHECK_FALSE(word_problem(z, word("c a c a-")));
  CHECK(word_problem(z, word("c c")));
  const Representation f = make_representation(GroupId::thompson_f);
  const std::vector<Gen> u = word("x0 x1-");
  const std::vector<Gen> r1 = commutator(u, word("x0- x1 x0"));
  const std::vector<Gen> r2 = commutator(u, word("x0- x0- x1 x0 x0"));
  CHECK(r1.size() == 10);
  CHECK(word_problem(f, r1));
  CHECK(word_problem(f, r2));
}

TEST_CASE("planted relators are trivial and a planted extra generator is not") {
  std::mt19937_64 rng(3);
  const Representation f = make_representation(GroupId::thompson_f);
  const Representation zf = make_representation(GroupId::z2wrf2);
  const std::vector<Gen> u = word("x0 x1-");
  const std::vector<std::vector<Gen>> f_relators = {commutator(u, word("x0- x1 x0")),
                                                    commutator(u, word("x0- x0- x1 x0 x0"))};
  const std::vector<std::vector<Gen>> zf_relators = {word("c c"), word("a a-"), word("b- b")};
  for (int t = 0; t < 30; ++t) {
    for (const auto& [rep, rels] : {std::pair{&f, &f_relators}, std::pair{&zf, &zf_relators}}) {
      std::vector<Gen> w(20);
      for (Gen& g : w) g = rep->gens[rng() % rep->gens.size()];
      std::vector<Gen> wi(w.rbegin(), w.rend());
      for (Gen& g : wi) g = inverse(g);
      const auto& rel = (*rels)[rng() % rels->size()];
      std::vector<Gen> planted = w;
      planted.insert(planted.begin() + static_cast<std::ptrdiff_t>(rng() % (w.size() + 1)),
                     rel.begin(), rel.end());
      planted.insert(planted.end(), wi.begin(), wi.end());
      CHECK(word_problem(*rep, planted));
      std::vector<Gen> extra = w;
      extra.push_back(rep->gens[0]);
      extra.insert(extra.end(), wi.begin(), wi.end());
      CHECK_FALSE(word_problem(*rep, extra));
    }
  }
}

TEST_CASE("word_to_nf agrees with folding the model and encoding") {
  std::mt19937_64 rng(8);
  for (GroupId g : {GroupId::z2wrz2, GroupId::z2wrf2}) {
    const Representation rep = make_representation(g);
    for (int t = 0; t < 200; ++t) {
      std::vector<Gen> w(rng() % 60);
      for (Gen& s : w) s = rep.gens[rng() % rep.gens.size()];
      Element e = rep.decode(rep.identity_nf);
      for (Gen s : w) e = rep.oracle_mul(e, s);
      REQUIRE(word_to_nf(rep, w).nf == *rep.encode(e));
    }
  }
}

TEST_CASE("differential fuzzing passes on all three programs") {
  const FuzzReport z = differential_fuzz(make_representation(GroupId::z2wrz2), 1000, 300, 42);
  CHECK(z.pass);
  const FuzzReport zf = differential_fuzz(make_representation(GroupId::z2wrf2), 300, 300, 42);
  CHECK(zf.pass);
  const FuzzReport f = differential_fuzz(make_representation(GroupId::thompson_f), 1000, 200, 42);
  CHECK(f.pass);
  for (const std::string& c : f_x1_inv_cases()) {
    INFO(c);
    CHECK(f.coverage.count("x1-:" + c) == 1);
  }
}

TEST_CASE("fuzzing catches the dropped-case mutant with a short witness") {
  const Representation mutant = make_representation(GroupId::thompson_f, {true});
  const FuzzReport r = differential_fuzz(mutant, 1000, 200, 42);
  REQUIRE_FALSE(r.pass);
  REQUIRE(r.witness);
  CHECK(r.witness->word.size() <= 12);
  // The witness replays: its last step runs Case 2.2.2(b) and disagrees.
  const Representation good = make_representation(GroupId::thompson_f);
  const std::vector<Gen> prefix(r.witness->word.begin(), r.witness->word.end() - 1);
  CHECK(word_to_nf(good, prefix).nf == r.witness->nf_before);
  const Gen last = r.witness->word.back();
  CHECK(good.apply(r.witness->nf_before, last).output != mutant.apply(r.witness->nf_before, last).output);
}

TEST_CASE("samplers hit the requested length") {
  std::mt19937_64 rng(1);
  for (GroupId g : {GroupId::z2wrz2, GroupId::z2wrf2, GroupId::thompson_f}) {
    const Representation rep = make_representation(g);
    for (std::size_t n : {64u, 512u, 4096u}) {
      const Word nf = sample_nf(g, n, rng);
      INFO(group_name(g) << " n=" << n << " got " << nf.size());
      CHECK(rep.validate(nf));
      CHECK(nf.size() >= n / 2);
      CHECK(nf.size() <= 3 * n);
    }
  }
}

TEST_CASE("linearity bench separates linear programs from a quadratic mutant") {
  const std::vector<std::size_t> sizes = {64, 128, 256, 512, 1024, 2048};
  const Representation z = make_representation(GroupId::z2wrz2);
  const LinearityReport ok = linearity_bench(z, Gen::a, sizes, 8, 5);
  CHECK(ok.verdict);
  CHECK(ok.slope < 1.2);
  const LinearityReport bad = linearity_bench(with_quadratic_mutant(z, Gen::a), Gen::a, sizes, 8, 5);
  CHECK_FALSE(bad.verdict);
  CHECK(bad.slope > 1.5);
  CHECK_THROWS_AS(linearity_bench(z, Gen::a, {128, 64}, 1, 1), InvalidInput);
}

TEST_CASE("JSON reports follow the declared schema and round-trip") {
  const LinearityReport r =
      linearity_bench(make_representation(GroupId::thompson_f), Gen::x1_inv, {64, 128, 256}, 3, 2);
  const nlohmann::json j = to_json(r);
  for (const char* key : {"group", "gen", "sizes", "verdict"}) CHECK(j.contains(key));
  CHECK(j["group"] == "thompson-f");
  CHECK(j["gen"] == "x1-");
  for (const auto& s : j["sizes"]) {
    CHECK(s.contains("n"));
    CHECK(s.contains("max_steps"));
    CHECK(s.contains("max_ratio"));
  }
  const LinearityReport back = linearity_from_json(nlohmann::json::parse(j.dump()));
  CHECK(to_json(back) == j);
}

TEST_CASE("quadratic profile and probes") {
  const auto rows =
      quadratic_profile(make_representation(GroupId::thompson_f), {32, 64, 128}, 2, 4);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) CHECK(row.max_steps > 0);
  const ProbeReport p =
      quasigeodesic_probe(make_representation(GroupId::z2wrf2), 5, 400, {100, 200, 400}, 6);
  REQUIRE(p.points.size() == 3);
  CHECK(p.max_ratio < 4);
  const auto fam = nonqg_family({2, 5});
  REQUIRE(fam.size() == 2);
  CHECK(fam[0].word_len == 9);
  CHECK(fam[1].ratio > fam[0].ratio);
}

TEST_CASE("group names") {
  CHECK(parse_group("thompson-f") == GroupId::thompson_f);
  CHECK(group_name(GroupId::z2wrf2) == "z2wrf2");
  CHECK_THROWS_AS(parse_group("z3"), InvalidInput);
}

#include <doctest.h>

#include <map>
#include <random>

#include "cayley/errors.hpp"
#include "cayley/z2wrf2.hpp"

using namespace cayley;

namespace {

Word w(std::string_view s) { return tokenize(s, z2f2_alphabet()); }

std::string apply(std::string_view nf, Gen g) { return render(z2f2_apply(w(nf), g).output); }

const Gen kGens[] = {Gen::a, Gen::a_inv, Gen::b, Gen::b_inv, Gen::c};

F2Word random_reduced(std::mt19937_64& rng, std::size_t max_len) {
  static const char kLetters[] = "aAbB";
  F2Word out;
  const std::size_t n = rng() % (max_len + 1);
  while (out.size() < n) out.mul(kLetters[rng() % 4]);
  return out;
}

LampConfigF2 random_config(std::mt19937_64& rng) {
  LampConfigF2 g;
  const int lamps = static_cast<int>(rng() % 9);
  for (int i = 0; i < lamps; ++i) g.lit.insert(random_reduced(rng, 12));
  g.pos = random_reduced(rng, 12);
  return g;
}

// The Fig. 3 element: lamplighter at b a b^-1, lamps read off the final string.
LampConfigF2 figure_element() { return z2f2_decode(w("11(1[1E01]D0A[E0(C1D1)])([1E0]D0[1E1])1")); }

}  // namespace

TEST_CASE("encode and decode examples") {
  CHECK(render(z2f2_encode({})) == "B0");
  CHECK(render(z2f2_encode({{}, F2Word("a")})) == "A0C0");
  CHECK(z2f2_decode(w("B0")) == LampConfigF2{});
  CHECK(z2f2_decode(w("B1")) == LampConfigF2{{F2Word()}, F2Word()});
  CHECK(z2f2_decode(w("A0C0")) == LampConfigF2{{}, F2Word("a")});
}

TEST_CASE("generator program examples") {
  CHECK(apply("B0", Gen::c) == "B1");
  CHECK(apply("A0C0", Gen::c) == "A0C1");
  CHECK(apply("B0", Gen::a) == "A0C0");
  CHECK(apply("A0C0", Gen::a_inv) == "B0");
  CHECK(apply("B0", Gen::b) == "(D0AC0)");
  CHECK(apply("(D0AC0)", Gen::b_inv) == "B0");
}

TEST_CASE("figure element decodes with the lamplighter at b a b^-1") {
  const LampConfigF2 g = figure_element();
  CHECK(g.pos == F2Word("baB"));
  CHECK(render(z2f2_encode(g)) == "11(1[1E01]D0A[E0(C1D1)])([1E0]D0[1E1])1");
}

TEST_CASE("iteration replay of the figure element") {
  const LampConfigF2 g = figure_element();
  CHECK(render(z2f2_encode(g, 1)) == "11D0AD01");
  CHECK(render(z2f2_encode(g, 2)) == "11(1E0D0AE0)(E0D0E1)1");
  CHECK(render(z2f2_encode(g, 3)) == "11(1[1E01]D0A[E0D1])([1E0]D0[1E1])1");
  CHECK(render(z2f2_encode(g, 4)) == "11(1[1E01]D0A[E0(C1D1)])([1E0]D0[1E1])1");
}

TEST_CASE("decode rejects malformed strings") {
  const char* bad[] = {"", "0", "A0", "C0", "B0B0", "0B0", "B00", "(D0AC0", "(D0AC0]",
                       "B0(D0C0)", "[E0B0]", "(B0)", "A0C0C1", "(D0B)"};
  for (const char* s : bad) {
    INFO(s);
    CHECK_THROWS_AS(z2f2_decode(w(s)), NotInLanguage);
  }
}

TEST_CASE("differential check against the oracle on random configurations") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10000; ++t) {
    const LampConfigF2 g = random_config(rng);
    const Word nf = z2f2_encode(g);
    REQUIRE(z2f2_decode(nf) == g);
    for (Gen s : kGens) {
      const TapeRun run = z2f2_apply(nf, s);
      INFO("nf=" << render(nf) << " gen=" << gen_name(s) << " branch=" << run.branch);
      REQUIRE(run.output == z2f2_encode(wreath_mul_gen(g, s)));
      REQUIRE(run.steps <= 20 * (nf.size() + 2) + 40);
    }
  }
}

TEST_CASE("random walks stay in the language and track the oracle") {
  std::mt19937_64 rng(11);
  for (int walk = 0; walk < 40; ++walk) {
    Word nf = w("B0");
    LampConfigF2 g;
    const int len = 1 + static_cast<int>(rng() % 500);
    for (int i = 0; i < len; ++i) {
      const Gen s = kGens[rng() % 5];
      nf = z2f2_apply(nf, s).output;
      g = wreath_mul_gen(g, s);
      REQUIRE_NOTHROW(z2f2_validate(nf));
      REQUIRE(z2f2_decode(nf) == g);
    }
  }
}

TEST_CASE("inverse pairs cancel on sampled normal forms") {
  std::mt19937_64 rng(13);
  const std::pair<Gen, Gen> pairs[] = {{Gen::a, Gen::a_inv}, {Gen::a_inv, Gen::a},
                                       {Gen::b, Gen::b_inv}, {Gen::b_inv, Gen::b}};
  for (int t = 0; t < 2000; ++t) {
    const Word nf = z2f2_encode(random_config(rng));
    for (auto [x, y] : pairs) REQUIRE(z2f2_apply(z2f2_apply(nf, x).output, y).output == nf);
    REQUIRE(z2f2_apply(z2f2_apply(nf, Gen::c).output, Gen::c).output == nf);
  }
}

TEST_CASE("mismatched brackets make the programs halt without valid output") {
  std::mt19937_64 rng(17);
  int mutated = 0;
  while (mutated < 2000) {
    Word nf = z2f2_encode(random_config(rng));
    std::vector<std::size_t> brackets;
    for (std::size_t i = 0; i < nf.size(); ++i)
      if (nf[i] == Sym::lparen || nf[i] == Sym::rparen || nf[i] == Sym::lbrack || nf[i] == Sym::rbrack)
        brackets.push_back(i);
    if (brackets.empty()) continue;
    const std::size_t i = brackets[rng() % brackets.size()];
    static const Sym kSwap[] = {Sym::lparen, Sym::rparen, Sym::lbrack, Sym::rbrack};
    Sym repl = kSwap[rng() % 4];
    if (repl == nf[i]) continue;
    nf[i] = repl;
    ++mutated;
    for (Gen s : {Gen::a, Gen::a_inv, Gen::b, Gen::b_inv}) {
      const TapeRun run = z2f2_apply(nf, s);
      INFO("nf=" << render(nf) << " gen=" << gen_name(s) << " branch=" << run.branch);
      CHECK_THROWS_AS(z2f2_validate(run.output), NotInLanguage);
    }
  }
}

TEST_CASE("walk length bounds normal form length") {
  std::mt19937_64 rng(19);
  double worst = 0;
  for (int walk = 0; walk < 20; ++walk) {
    Word nf = w("B0");
    const int n = 2000;
    for (int i = 0; i < n; ++i) nf = z2f2_apply(nf, kGens[rng() % 5]).output;
    worst = std::max(worst, static_cast<double>(nf.size()) / (n + 1));
  }
  CHECK(worst <= 4.0);
}

TEST_CASE("every branch of the programs is exercised") {
  std::mt19937_64 rng(23);
  std::map<std::string, int> seen;
  for (int t = 0; t < 3000; ++t) {
    const Word nf = z2f2_encode(random_config(rng));
    for (Gen s : kGens) {
      const std::string label = std::string(gen_name(s)) + ":" + z2f2_apply(nf, s).branch;
      ++seen[label];
    }
  }
  const char* expected[] = {"a:plain>toPlain", "a:plain>extend", "a:plain>toAnchorD",
                            "a:plain>toAnchorE", "a:plain>toIdentity", "a:anchorD>toPlain",
                            "a:anchorE>toPlain", "a:sprout", "a:collapse", "a:trimLead>toPlain",
                            "a-:plain>toPlain", "a-:plain>extend", "a-:plain>toAnchorD",
                            "a-:plain>toAnchorE", "a-:collapse", "a-:trimTrail>toPlain",
                            "a-:sprout", "b:plain>toPlain", "b:plain>extend", "b:plain>toAnchorD",
                            "b:plain>toAnchorE", "b:anchorD>toPlain", "b:anchorE>toPlain",
                            "b:sprout", "b:collapse", "b:trimLead>toPlain", "b-:plain>toPlain",
                            "b-:plain>extend", "b-:plain>toAnchorD", "b-:plain>toAnchorE",
                            "b-:anchorD>extend", "b-:anchorE>toPlain", "b-:sprout",
                            "b-:collapse", "b-:trimTrail>toPlain", "c:c"};
  for (const char* label : expected) {
    INFO(label);
    CHECK(seen[label] > 0);
  }
}

TEST_CASE("rendering separates tokens whose concatenation would re-tokenize") {
  CHECK(render(w("[E0 C0]")) == "[E0 C0]");
  CHECK(render(w("(D1 C0)")) == "(D1 C0)");
  CHECK(render(w("(D0A C0)")) == "(D0AC0)");
  std::mt19937_64 rng(29);
  for (int t = 0; t < 2000; ++t) {
    const Word nf = z2f2_encode(random_config(rng));
    REQUIRE(w(render(nf)) == nf);
  }
}

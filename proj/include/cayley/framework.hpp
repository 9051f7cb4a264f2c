#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cayley/generator.hpp"
#include "cayley/oracle.hpp"
#include "cayley/symbol.hpp"
#include "cayley/tape_run.hpp"
#include "cayley/thompson.hpp"

namespace cayley {

enum class GroupId { z2wrz2, z2wrf2, thompson_f };

std::string_view group_name(GroupId g);  // "z2wrz2", "z2wrf2", "thompson-f"
GroupId parse_group(std::string_view name);  // throws InvalidInput

using Element = std::variant<LampConfigZ2, LampConfigF2, DyadicPL>;

// A group together with its normal-form language, its generator programs and
// an independent algebraic model used as the reference.
struct Representation {
  GroupId id;
  std::vector<Gen> gens;  // closed under inverses
  Word identity_nf;
  const Alphabet* alphabet = nullptr;
  std::function<TapeRun(const Word&, Gen)> apply;
  std::function<bool(const Word&)> validate;
  std::function<Element(const Word&)> decode;
  std::function<Element(const Element&, Gen)> oracle_mul;
  std::function<bool(const Element&, const Element&)> oracle_eq;
  // Direct encoder from the model; absent for F.
  std::function<std::optional<Word>(const Element&)> encode;

  bool has_gen(Gen g) const;
  // Tokenizes and validates; throws NotInLanguage.
  Word parse_nf(std::string_view text) const;
};

Representation make_representation(GroupId g, FMutation mut = {});

// Replaces the program for gen with one that also sweeps the tape once per
// output cell, so its running time is quadratic in the input length.
Representation with_quadratic_mutant(Representation rep, Gen gen);

struct NfRun {
  Word nf;
  std::uint64_t steps = 0;
};

// Applies the letters one at a time starting from the identity normal form.
// Throws BadWord if a letter is not a generator of rep.
NfRun word_to_nf(const Representation& rep, std::span<const Gen> word);
bool word_problem(const Representation& rep, std::span<const Gen> word);

// ---- differential fuzzing ---------------------------------------------------

struct FuzzWitness {
  std::vector<Gen> word;  // shortest failing walk found; its last letter fails
  Word nf_before;
  Word nf_after;
  std::string check;  // "validate", "psi", "inverse" or "exception: ..."
};

struct FuzzReport {
  GroupId group;
  std::uint64_t trials = 0;
  std::uint64_t samples = 0;
  bool pass = true;
  std::optional<FuzzWitness> witness;
  // "<gen>:<branch>" -> count, over every program run of the corpus.
  std::map<std::string, std::uint64_t> coverage;
};

// Random walks of length 1..max_len from the identity, checking after every
// step that the output is in the language, decodes to the model product and
// is undone by the inverse generator. Deterministic per seed.
FuzzReport differential_fuzz(const Representation& rep, std::uint64_t trials,
                             std::uint64_t max_len, std::uint64_t seed);

// ---- linearity ----------------------------------------------------------------

struct SizeStat {
  std::size_t n = 0;  // target input length
  std::uint64_t max_steps = 0;
  double max_ratio = 0;  // max over samples of steps / |input|
};

struct LinearityReport {
  GroupId group;
  Gen gen;
  std::vector<SizeStat> sizes;
  double slope = 0;  // least-squares slope of log max_steps against log n
  bool verdict = false;
};

// Random normal form of length close to n (never shorter than n / 2).
Word sample_nf(GroupId g, std::size_t n, std::mt19937_64& rng);

// Verdict: max_ratio at the largest size is at most 1.25 times the value at
// the median size.
LinearityReport linearity_bench(const Representation& rep, Gen gen,
                                const std::vector<std::size_t>& sizes,
                                std::size_t samples_per_size, std::uint64_t seed);

// ---- quadratic normal-form computation -----------------------------------------

struct QuadraticStat {
  std::size_t n = 0;  // word length
  std::uint64_t max_steps = 0;
  double ratio = 0;  // max_steps / n^2
};

std::vector<QuadraticStat> quadratic_profile(const Representation& rep,
                                             const std::vector<std::size_t>& lengths,
                                             std::size_t samples, std::uint64_t seed);

// ---- quasigeodesic probes -----------------------------------------------------------

struct ProbePoint {
  std::size_t n = 0;  // walk length
  double max_ratio = 0;  // max over trials of |nf| / (n + 1)
};

struct ProbeReport {
  GroupId group;
  std::vector<ProbePoint> points;
  double max_ratio = 0;
};

// Random walks of length max_walk, recording |nf| / (n + 1) at each checkpoint.
ProbeReport quasigeodesic_probe(const Representation& rep, std::uint64_t trials,
                                std::size_t max_walk, const std::vector<std::size_t>& checkpoints,
                                std::uint64_t seed);

struct NonQgRow {
  std::int64_t k = 0;
  std::size_t word_len = 0;  // a^k b^k c b^-k a^-k
  std::size_t nf_len = 0;
  double ratio = 0;  // nf_len / (word_len + 1)
};

// Z2 wr Z2 elements with one lamp at (k, k) and the lamplighter at the origin.
std::vector<NonQgRow> nonqg_family(const std::vector<std::int64_t>& ks);

}  // namespace cayley

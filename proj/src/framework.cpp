#include "cayley/framework.hpp"

#include <algorithm>
#include <cmath>

#include "cayley/errors.hpp"
#include "cayley/spiral.hpp"
#include "cayley/tape.hpp"
#include "cayley/z2wrf2.hpp"
#include "cayley/z2wrz2.hpp"

namespace cayley {

std::string_view group_name(GroupId g) {
  switch (g) {
    case GroupId::z2wrz2: return "z2wrz2";
    case GroupId::z2wrf2: return "z2wrf2";
    case GroupId::thompson_f: return "thompson-f";
  }
  return "?";
}

GroupId parse_group(std::string_view name) {
  for (GroupId g : {GroupId::z2wrz2, GroupId::z2wrf2, GroupId::thompson_f})
    if (group_name(g) == name) return g;
  throw InvalidInput("unknown group '" + std::string(name) + "'");
}

bool Representation::has_gen(Gen g) const {
  return std::find(gens.begin(), gens.end(), g) != gens.end();
}

Word Representation::parse_nf(std::string_view text) const {
  Word nf = tokenize(text, *alphabet);
  if (!validate(nf)) throw NotInLanguage("'" + std::string(text) + "' is not a normal form of " +
                                         std::string(group_name(id)));
  return nf;
}

namespace {

template <class Fn>
std::function<bool(const Word&)> validator(Fn check) {
  return [check](const Word& nf) {
    try {
      check(nf);
      return true;
    } catch (const NotInLanguage&) {
      return false;
    }
  };
}

}  // namespace

Representation make_representation(GroupId g, FMutation mut) {
  Representation rep;
  rep.id = g;
  switch (g) {
    case GroupId::z2wrz2:
      rep.gens = {Gen::a, Gen::a_inv, Gen::b, Gen::b_inv, Gen::c};
      rep.alphabet = &z2z2_alphabet();
      rep.identity_nf = tokenize("C0", *rep.alphabet);
      rep.apply = [](const Word& nf, Gen s) { return z2z2_apply(nf, s); };
      rep.validate = validator([](const Word& nf) { z2z2_validate(nf); });
      rep.decode = [](const Word& nf) -> Element { return z2z2_decode(nf); };
      rep.oracle_mul = [](const Element& e, Gen s) -> Element {
        return wreath_mul_gen(std::get<LampConfigZ2>(e), s);
      };
      rep.encode = [](const Element& e) -> std::optional<Word> {
        return z2z2_encode(std::get<LampConfigZ2>(e));
      };
      break;
    case GroupId::z2wrf2:
      rep.gens = {Gen::a, Gen::a_inv, Gen::b, Gen::b_inv, Gen::c};
      rep.alphabet = &z2f2_alphabet();
      rep.identity_nf = tokenize("B0", *rep.alphabet);
      rep.apply = [](const Word& nf, Gen s) { return z2f2_apply(nf, s); };
      rep.validate = validator([](const Word& nf) { z2f2_validate(nf); });
      rep.decode = [](const Word& nf) -> Element { return z2f2_decode(nf); };
      rep.oracle_mul = [](const Element& e, Gen s) -> Element {
        return wreath_mul_gen(std::get<LampConfigF2>(e), s);
      };
      rep.encode = [](const Element& e) -> std::optional<Word> {
        return z2f2_encode(std::get<LampConfigF2>(e));
      };
      break;
    case GroupId::thompson_f:
      rep.gens = {Gen::x0, Gen::x0_inv, Gen::x1, Gen::x1_inv};
      rep.alphabet = &thompson_alphabet();
      rep.identity_nf = {};
      rep.apply = [mut](const Word& nf, Gen s) { return f_apply(nf, s, nullptr, mut); };
      rep.validate = validator([](const Word& nf) { f_parse(nf); });
      rep.decode = [](const Word& nf) -> Element { return pl_eval_normalform(render(nf)); };
      rep.oracle_mul = [](const Element& e, Gen s) -> Element {
        return pl_compose(std::get<DyadicPL>(e), pl_generator(s));
      };
      rep.encode = [](const Element&) -> std::optional<Word> { return std::nullopt; };
      break;
  }
  rep.oracle_eq = [](const Element& x, const Element& y) { return x == y; };
  return rep;
}

Representation with_quadratic_mutant(Representation rep, Gen gen) {
  auto inner = rep.apply;
  rep.apply = [inner, gen](const Word& nf, Gen s) {
    TapeRun run = inner(nf, s);
    if (s != gen) return run;
    TapeSet ts(run.output, 1);
    for (std::size_t i = 1; i <= run.output.size(); ++i) {
      for (std::size_t k = 0; k < i; ++k) ts.right(0);
      for (std::size_t k = 0; k < i; ++k) ts.left(0);
    }
    run.steps += ts.steps();
    return run;
  };
  return rep;
}

NfRun word_to_nf(const Representation& rep, std::span<const Gen> word) {
  for (Gen g : word)
    if (!rep.has_gen(g))
      throw BadWord("generator " + std::string(gen_name(g)) + " is not in " +
                    std::string(group_name(rep.id)));
  NfRun out{rep.identity_nf, 0};
  for (Gen g : word) {
    TapeRun run = rep.apply(out.nf, g);
    out.nf = std::move(run.output);
    out.steps += run.steps;
  }
  return out;
}

bool word_problem(const Representation& rep, std::span<const Gen> word) {
  return word_to_nf(rep, word).nf == rep.identity_nf;
}

// ---- differential fuzzing ----------------------------------------------------------

namespace {

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

std::string coverage_key(Gen g, const TapeRun& run) {
  return std::string(gen_name(g)) + ":" + run.branch;
}

// Replays word from the identity and returns the first failed check.
std::optional<FuzzWitness> check_walk(const Representation& rep, const std::vector<Gen>& word,
                                      std::map<std::string, std::uint64_t>* coverage,
                                      std::uint64_t* samples) {
  Word nf = rep.identity_nf;
  Element elem = rep.decode(nf);
  for (std::size_t i = 0; i < word.size(); ++i) {
    const Gen g = word[i];
    FuzzWitness w{{word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i) + 1}, nf, {}, {}};
    try {
      TapeRun run = rep.apply(nf, g);
      if (coverage) ++(*coverage)[coverage_key(g, run)];
      w.nf_after = run.output;
      if (!rep.validate(run.output)) {
        w.check = "validate";
        return w;
      }
      Element expected = rep.oracle_mul(elem, g);
      if (!rep.oracle_eq(rep.decode(run.output), expected)) {
        w.check = "psi";
        return w;
      }
      TapeRun back = rep.apply(run.output, inverse(g));
      if (coverage) ++(*coverage)[coverage_key(inverse(g), back)];
      if (back.output != nf) {
        w.check = "inverse";
        return w;
      }
      nf = std::move(run.output);
      elem = std::move(expected);
    } catch (const std::exception& e) {
      w.check = std::string("exception: ") + e.what();
      return w;
    }
    if (samples) ++*samples;
  }
  return std::nullopt;
}

// Shrinks a failing walk by deleting chunks of halving size while it still fails.
FuzzWitness minimize(const Representation& rep, FuzzWitness w) {
  std::vector<Gen> word = w.word;
  for (std::size_t chunk = std::max<std::size_t>(1, word.size() / 2);; chunk /= 2) {
    bool removed = true;
    while (removed) {
      removed = false;
      for (std::size_t at = 0; at + chunk <= word.size(); at += chunk) {
        std::vector<Gen> candidate = word;
        candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(at),
                        candidate.begin() + static_cast<std::ptrdiff_t>(at + chunk));
        if (auto f = check_walk(rep, candidate, nullptr, nullptr)) {
          word = f->word;
          w = *f;
          removed = true;
          break;
        }
      }
    }
    if (chunk == 1) break;
  }
  return w;
}

}  // namespace

FuzzReport differential_fuzz(const Representation& rep, std::uint64_t trials,
                             std::uint64_t max_len, std::uint64_t seed) {
  FuzzReport report;
  report.group = rep.id;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng = trial_rng(seed, t);
    const std::uint64_t len = 1 + rng() % max_len;
    std::vector<Gen> word(len);
    for (Gen& g : word) g = rep.gens[rng() % rep.gens.size()];
    ++report.trials;
    if (auto f = check_walk(rep, word, &report.coverage, &report.samples)) {
      report.pass = false;
      report.witness = minimize(rep, *f);
      break;
    }
  }
  return report;
}

// ---- samplers and linearity ----------------------------------------------------

namespace {

F2Word random_f2(std::mt19937_64& rng, std::size_t max_len) {
  static constexpr char kLetters[] = "aAbB";
  F2Word w;
  const std::size_t len = rng() % (max_len + 1);
  while (w.size() < len) w.mul(kLetters[rng() % 4]);
  return w;
}

Word sample_z2z2(std::size_t n, std::mt19937_64& rng) {
  // Spiral indices start at 1 for the origin; the normal form has one token
  // per index up to the largest index in use.
  const std::uint64_t top = std::max<std::size_t>(n, 1);
  auto pick = [&] { return spiral_point(static_cast<std::int64_t>(1 + rng() % top)); };
  LampConfigZ2 g;
  g.pos = pick();
  if (spiral_index(g.pos) != static_cast<std::int64_t>(top))
    g.lit.insert(spiral_point(static_cast<std::int64_t>(top)));
  for (std::size_t i = 0; i < n / 8; ++i) g.lit.insert(pick());
  return z2z2_encode(g);
}

Word sample_z2f2(std::size_t n, std::mt19937_64& rng) {
  const auto depth = static_cast<std::size_t>(2 * std::ceil(std::log2(std::max<std::size_t>(n, 2))));
  LampConfigF2 g;
  g.pos = random_f2(rng, depth);
  Word nf = z2f2_encode(g);
  std::size_t batch = 1;
  while (nf.size() < n) {
    for (std::size_t i = 0; i < batch; ++i) g.lit.insert(random_f2(rng, depth));
    nf = z2f2_encode(g);
    batch = std::max<std::size_t>(1, g.lit.size() / 2);
    if (nf.size() * 2 > n) batch = std::max<std::size_t>(1, batch / 4);
  }
  return nf;
}

Word sample_f(std::size_t n, std::mt19937_64& rng) {
  ExpSeq e;
  std::size_t len = 0;
  while (len < n || e.r.empty()) {
    if (!e.r.empty()) ++len;  // '#'
    e.r.push_back(rng() % 3 == 0 ? 0 : rng() % 4);
    e.s.push_back(rng() % 3 == 0 ? 0 : rng() % 4);
    len += e.r.back() + e.s.back();
  }
  // Repair the two normal-form conditions.
  const std::size_t m = e.r.size() - 1;
  if (e.r[m] == 0 && e.s[m] == 0) e.s[m] = 1;
  if (e.r[m] > 0 && e.s[m] > 0) e.r[m] = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (e.r[i] > 0 && e.s[i] > 0 && e.r[i + 1] == 0 && e.s[i + 1] == 0) {
      if (i + 1 == m) e.s[i + 1] = 1;
      else e.r[i + 1] = 1;
    }
  f_validate(e);
  return f_serialize(e);
}

}  // namespace

Word sample_nf(GroupId g, std::size_t n, std::mt19937_64& rng) {
  switch (g) {
    case GroupId::z2wrz2: return sample_z2z2(n, rng);
    case GroupId::z2wrf2: return sample_z2f2(n, rng);
    case GroupId::thompson_f: return sample_f(n, rng);
  }
  return {};
}

LinearityReport linearity_bench(const Representation& rep, Gen gen,
                                const std::vector<std::size_t>& sizes,
                                std::size_t samples_per_size, std::uint64_t seed) {
  if (!std::is_sorted(sizes.begin(), sizes.end()) ||
      std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end() || sizes.empty())
    throw InvalidInput("sizes must be strictly increasing and nonempty");
  if (!rep.has_gen(gen))
    throw BadWord("generator " + std::string(gen_name(gen)) + " is not in " +
                  std::string(group_name(rep.id)));
  LinearityReport report;
  report.group = rep.id;
  report.gen = gen;
  std::mt19937_64 rng(seed);
  for (std::size_t n : sizes) {
    SizeStat st;
    st.n = n;
    for (std::size_t k = 0; k < samples_per_size; ++k) {
      const Word nf = sample_nf(rep.id, n, rng);
      const TapeRun run = rep.apply(nf, gen);
      st.max_steps = std::max(st.max_steps, run.steps);
      st.max_ratio = std::max(st.max_ratio, static_cast<double>(run.steps) /
                                                static_cast<double>(std::max<std::size_t>(1, nf.size())));
    }
    report.sizes.push_back(st);
  }
  // Least-squares slope in log-log coordinates.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(report.sizes.size());
  for (const SizeStat& st : report.sizes) {
    const double x = std::log(static_cast<double>(st.n));
    const double y = std::log(static_cast<double>(std::max<std::uint64_t>(1, st.max_steps)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = m * sxx - sx * sx;
  report.slope = denom > 0 ? (m * sxy - sx * sy) / denom : 0;
  const SizeStat& median = report.sizes[(report.sizes.size() - 1) / 2];
  report.verdict = report.sizes.back().max_ratio <= 1.25 * median.max_ratio;
  return report;
}

std::vector<QuadraticStat> quadratic_profile(const Representation& rep,
                                             const std::vector<std::size_t>& lengths,
                                             std::size_t samples, std::uint64_t seed) {
  std::vector<QuadraticStat> rows;
  std::mt19937_64 rng(seed);
  for (std::size_t n : lengths) {
    QuadraticStat row;
    row.n = n;
    for (std::size_t k = 0; k < samples; ++k) {
      std::vector<Gen> word(n);
      for (Gen& g : word) g = rep.gens[rng() % rep.gens.size()];
      row.max_steps = std::max(row.max_steps, word_to_nf(rep, word).steps);
    }
    row.ratio = static_cast<double>(row.max_steps) / (static_cast<double>(n) * static_cast<double>(n));
    rows.push_back(row);
  }
  return rows;
}

ProbeReport quasigeodesic_probe(const Representation& rep, std::uint64_t trials,
                                std::size_t max_walk, const std::vector<std::size_t>& checkpoints,
                                std::uint64_t seed) {
  ProbeReport report;
  report.group = rep.id;
  for (std::size_t c : checkpoints)
    if (c <= max_walk) report.points.push_back({c, 0});
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng = trial_rng(seed, t);
    Word nf = rep.identity_nf;
    std::size_t next = 0;
    for (std::size_t n = 1; n <= max_walk; ++n) {
      nf = rep.apply(nf, rep.gens[rng() % rep.gens.size()]).output;
      const double ratio = static_cast<double>(nf.size()) / static_cast<double>(n + 1);
      report.max_ratio = std::max(report.max_ratio, ratio);
      while (next < report.points.size() && report.points[next].n == n) {
        report.points[next].max_ratio = std::max(report.points[next].max_ratio, ratio);
        ++next;
      }
    }
  }
  return report;
}

std::vector<NonQgRow> nonqg_family(const std::vector<std::int64_t>& ks) {
  const Representation rep = make_representation(GroupId::z2wrz2);
  std::vector<NonQgRow> rows;
  for (std::int64_t k : ks) {
    std::vector<Gen> word;
    word.insert(word.end(), static_cast<std::size_t>(k), Gen::a);
    word.insert(word.end(), static_cast<std::size_t>(k), Gen::b);
    word.push_back(Gen::c);
    word.insert(word.end(), static_cast<std::size_t>(k), Gen::b_inv);
    word.insert(word.end(), static_cast<std::size_t>(k), Gen::a_inv);
    NonQgRow row;
    row.k = k;
    row.word_len = word.size();
    row.nf_len = word_to_nf(rep, word).nf.size();
    row.ratio = static_cast<double>(row.nf_len) / static_cast<double>(row.word_len + 1);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cayley

#pragma once

// Helpers shared by the test programs: word evaluation and random samplers.

#include <random>
#include <vector>

#include "cayley/oracle.hpp"
#include "cayley/thompson_nf.hpp"

namespace cayley::testing {

inline DyadicPL eval_word(const std::vector<Gen>& w) {
  DyadicPL acc;
  for (Gen g : w) acc = pl_compose(acc, pl_generator(g));
  return acc;
}

inline std::vector<Gen> inverse_word(std::vector<Gen> w) {
  std::vector<Gen> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

inline std::vector<Gen> concat(std::initializer_list<std::vector<Gen>> parts) {
  std::vector<Gen> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// [x, y] = x^-1 y^-1 x y
inline std::vector<Gen> commutator(const std::vector<Gen>& x, const std::vector<Gen>& y) {
  return concat({inverse_word(x), inverse_word(y), x, y});
}

// Random valid exponent sequence with M <= max_m and exponents <= max_e.
inline ExpSeq random_expseq(std::mt19937_64& rng, std::size_t max_m, std::size_t max_e) {
  for (;;) {
    ExpSeq e;
    const std::size_t m = rng() % (max_m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
      e.r.push_back(rng() % 3 == 0 ? 0 : rng() % (max_e + 1));
      e.s.push_back(rng() % 3 == 0 ? 0 : rng() % (max_e + 1));
    }
    if (rng() % 2) e.r[m] = 0; else e.s[m] = 0;
    try {
      f_validate(e);
      return e;
    } catch (...) {
    }
  }
}

}  // namespace cayley::testing

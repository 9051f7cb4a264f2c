#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/symbol.hpp"

namespace cayley {

// Exponent data of an infinite normal form
//   x0^{r0} x1^{r1} ... xM^{rM} xM^{-sM} ... x1^{-s1} x0^{-s0}.
// The identity is the empty sequence (M undefined).
struct ExpSeq {
  std::vector<std::size_t> r;
  std::vector<std::size_t> s;

  bool is_identity() const { return r.empty(); }
  std::size_t M() const { return r.size() - 1; }
  bool operator==(const ExpSeq&) const = default;
};

const Alphabet& thompson_alphabet();  // {a, b, #}

// Parses a^{r0} b^{s0} # ... # a^{rM} b^{sM}; throws NotInLanguage naming the
// violated condition.
ExpSeq f_parse(const Word& u);
ExpSeq f_parse(std::string_view text);

// Exact inverse of f_parse (does not validate).
Word f_serialize(const ExpSeq& e);
std::string f_render(const ExpSeq& e);

// Throws NotInLanguage if e violates the normal-form conditions.
void f_validate(const ExpSeq& e);

}  // namespace cayley

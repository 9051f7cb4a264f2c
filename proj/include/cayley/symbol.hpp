#pragma once

#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace cayley {

// One global tape alphabet shared by every group. Each representation
// declares which subset is its input alphabet.
enum class Sym : std::uint8_t {
  start,
  blank,
  // wreath products
  zero,
  one,
  c0,
  c1,
  d0,
  d1,
  e0,
  e1,
  lparen,
  rparen,
  lbrack,
  rbrack,
  d0a,
  d1a,
  d0b,
  d1b,
  d0c,
  d1c,
  e0c,
  e1c,
  a0,
  a1,
  b0,
  b1,
  // Thompson's group
  a,
  b,
  hash,
  // auxiliary work symbols (never part of a normal form)
  turn,
  marked_lparen,
  marked_lbrack,
  marked_rparen,
  marked_rbrack,
  mark,
  count_  // number of symbols, keep last
};

inline constexpr std::size_t kSymCount = static_cast<std::size_t>(Sym::count_);

using Word = std::vector<Sym>;

// ASCII rendering of one symbol ("D0A", "E1C", "#", ...).
std::string_view sym_text(Sym s);

class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::initializer_list<Sym> syms);

  bool contains(Sym s) const { return bits_.test(static_cast<std::size_t>(s)); }
  std::vector<Sym> symbols() const;

 private:
  std::bitset<kSymCount> bits_;
};

// Concatenated rendering of a token sequence ("0C0", "a#b"). A space is
// inserted where plain concatenation would re-tokenize differently
// ("E0 C0" rather than "E0C0", which reads as E0C then 0).
std::string render(const Word& w);

// Maximal-munch tokenizer over the given alphabet; whitespace separates tokens
// and is otherwise ignored. Throws NotInLanguage on unknown text.
Word tokenize(std::string_view text, const Alphabet& sigma);

}  // namespace cayley

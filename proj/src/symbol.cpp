#include "cayley/symbol.hpp"

#include <array>
#include <cctype>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

constexpr std::array<std::string_view, kSymCount> kText = {
    "^",   "_",   "0",   "1",   "C0",  "C1",  "D0",  "D1",  "E0",
    "E1",  "(",   ")",   "[",   "]",   "D0A", "D1A", "D0B", "D1B",
    "D0C", "D1C", "E0C", "E1C", "A0",  "A1",  "B0",  "B1",  "a",
    "b",   "#",   "T",   "(*",  "[*",  ")*",  "]*",  "*"};

}  // namespace

std::string_view sym_text(Sym s) { return kText[static_cast<std::size_t>(s)]; }

Alphabet::Alphabet(std::initializer_list<Sym> syms) {
  for (Sym s : syms) bits_.set(static_cast<std::size_t>(s));
}

std::vector<Sym> Alphabet::symbols() const {
  std::vector<Sym> out;
  for (std::size_t i = 0; i < kSymCount; ++i)
    if (bits_.test(i)) out.push_back(static_cast<Sym>(i));
  return out;
}

namespace {

// True if some token is longer than prev and a prefix of prev followed by
// next, so that maximal munch would not split the concatenation at the joint.
bool joint_is_ambiguous(Sym prev, Sym next) {
  const std::string_view p = sym_text(prev);
  const std::string_view n = sym_text(next);
  for (std::size_t i = 0; i < static_cast<std::size_t>(Sym::count_); ++i) {
    const std::string_view t = sym_text(static_cast<Sym>(i));
    if (t.size() <= p.size() || t.size() > p.size() + n.size()) continue;
    if (t.substr(0, p.size()) == p && t.substr(p.size()) == n.substr(0, t.size() - p.size()))
      return true;
  }
  return false;
}

}  // namespace

std::string render(const Word& w) {
  constexpr std::size_t kN = static_cast<std::size_t>(Sym::count_);
  static const auto ambiguous = [] {
    std::array<std::array<bool, kN>, kN> t{};
    for (std::size_t i = 0; i < kN; ++i)
      for (std::size_t j = 0; j < kN; ++j)
        t[i][j] = joint_is_ambiguous(static_cast<Sym>(i), static_cast<Sym>(j));
    return t;
  }();
  std::string out;
  out.reserve(w.size() * 2);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && ambiguous[static_cast<std::size_t>(w[i - 1])][static_cast<std::size_t>(w[i])])
      out += ' ';
    out += sym_text(w[i]);
  }
  return out;
}

Word tokenize(std::string_view text, const Alphabet& sigma) {
  const std::vector<Sym> syms = sigma.symbols();
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t best_len = 0;
    Sym best = Sym::blank;
    for (Sym s : syms) {
      std::string_view t = sym_text(s);
      if (t.size() > best_len && text.substr(i, t.size()) == t) {
        best_len = t.size();
        best = s;
      }
    }
    if (best_len == 0)
      throw NotInLanguage("unknown token at offset " + std::to_string(i) + ": '" +
                          std::string(text.substr(i, 4)) + "'");
    out.push_back(best);
    i += best_len;
  }
  return out;
}

}  // namespace cayley

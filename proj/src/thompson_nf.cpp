#include "cayley/thompson_nf.hpp"

#include "cayley/errors.hpp"

namespace cayley {

const Alphabet& thompson_alphabet() {
  static const Alphabet sigma{Sym::a, Sym::b, Sym::hash};
  return sigma;
}

void f_validate(const ExpSeq& e) {
  if (e.r.size() != e.s.size()) throw NotInLanguage("exponent sequences differ in length");
  if (e.is_identity()) return;
  const std::size_t m = e.M();
  if ((e.r[m] != 0) == (e.s[m] != 0))
    throw NotInLanguage("exactly one of r_M, s_M must be nonzero");
  for (std::size_t i = 0; i < m; ++i)
    if (e.r[i] > 0 && e.s[i] > 0 && e.r[i + 1] + e.s[i + 1] == 0)
      throw NotInLanguage("block " + std::to_string(i) +
                          " has both a and b but block " + std::to_string(i + 1) +
                          " is empty");
}

ExpSeq f_parse(const Word& u) {
  ExpSeq e;
  if (u.empty()) return e;
  e.r.push_back(0);
  e.s.push_back(0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    switch (u[i]) {
      case Sym::a:
        if (e.s.back() != 0)
          throw NotInLanguage("block " + std::to_string(e.r.size() - 1) + " has a after b");
        ++e.r.back();
        break;
      case Sym::b: ++e.s.back(); break;
      case Sym::hash:
        e.r.push_back(0);
        e.s.push_back(0);
        break;
      default:
        throw NotInLanguage("symbol '" + std::string(sym_text(u[i])) + "' is not a, b or #");
    }
  }
  f_validate(e);
  return e;
}

ExpSeq f_parse(std::string_view text) { return f_parse(tokenize(text, thompson_alphabet())); }

Word f_serialize(const ExpSeq& e) {
  Word w;
  for (std::size_t i = 0; i < e.r.size(); ++i) {
    if (i > 0) w.push_back(Sym::hash);
    w.insert(w.end(), e.r[i], Sym::a);
    w.insert(w.end(), e.s[i], Sym::b);
  }
  return w;
}

std::string f_render(const ExpSeq& e) { return render(f_serialize(e)); }

}  // namespace cayley

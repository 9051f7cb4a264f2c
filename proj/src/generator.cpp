#include "cayley/generator.hpp"

#include <sstream>
#include <string>

#include "cayley/errors.hpp"

namespace cayley {

Gen inverse(Gen g) {
  switch (g) {
    case Gen::a: return Gen::a_inv;
    case Gen::a_inv: return Gen::a;
    case Gen::b: return Gen::b_inv;
    case Gen::b_inv: return Gen::b;
    case Gen::c: return Gen::c;
    case Gen::x0: return Gen::x0_inv;
    case Gen::x0_inv: return Gen::x0;
    case Gen::x1: return Gen::x1_inv;
    case Gen::x1_inv: return Gen::x1;
  }
  return g;
}

std::string_view gen_name(Gen g) {
  switch (g) {
    case Gen::a: return "a";
    case Gen::a_inv: return "a-";
    case Gen::b: return "b";
    case Gen::b_inv: return "b-";
    case Gen::c: return "c";
    case Gen::x0: return "x0";
    case Gen::x0_inv: return "x0-";
    case Gen::x1: return "x1";
    case Gen::x1_inv: return "x1-";
  }
  return "?";
}

Gen parse_gen(std::string_view token) {
  for (Gen g : {Gen::a, Gen::a_inv, Gen::b, Gen::b_inv, Gen::c, Gen::x0, Gen::x0_inv,
                Gen::x1, Gen::x1_inv})
    if (gen_name(g) == token) return g;
  throw BadWord("unknown generator '" + std::string(token) + "'");
}

std::vector<Gen> parse_gen_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Gen> out;
  std::string tok;
  while (in >> tok) out.push_back(parse_gen(tok));
  return out;
}

}  // namespace cayley

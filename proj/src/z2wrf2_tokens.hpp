#pragma once

// Token classes of the Z2 wr F2 alphabet.

#include "cayley/symbol.hpp"

namespace cayley::z2f2 {

inline Sym plain(bool lit, bool z) {
  return z ? (lit ? Sym::c1 : Sym::c0) : (lit ? Sym::one : Sym::zero);
}
inline Sym d_plain(bool lit) { return lit ? Sym::d1 : Sym::d0; }
inline Sym d_a(bool lit) { return lit ? Sym::d1a : Sym::d0a; }
inline Sym d_b(bool lit) { return lit ? Sym::d1b : Sym::d0b; }
inline Sym d_c(bool lit) { return lit ? Sym::d1c : Sym::d0c; }
inline Sym e_plain(bool lit) { return lit ? Sym::e1 : Sym::e0; }
inline Sym e_c(bool lit) { return lit ? Sym::e1c : Sym::e0c; }

inline bool is_d_class(Sym s) {
  switch (s) {
    case Sym::d0: case Sym::d1: case Sym::d0a: case Sym::d1a:
    case Sym::d0b: case Sym::d1b: case Sym::d0c: case Sym::d1c:
      return true;
    default:
      return false;
  }
}

inline bool is_e_class(Sym s) {
  return s == Sym::e0 || s == Sym::e1 || s == Sym::e0c || s == Sym::e1c;
}

// Lamp state encoded by a token (its trailing digit).
inline bool lamp_of(Sym s) {
  switch (s) {
    case Sym::one: case Sym::c1: case Sym::d1: case Sym::e1: case Sym::d1a:
    case Sym::d1b: case Sym::d1c: case Sym::e1c: case Sym::a1: case Sym::b1:
      return true;
    default:
      return false;
  }
}

// C-class and B-class tokens: the lamplighter stands here.
inline bool marks_lamplighter(Sym s) {
  switch (s) {
    case Sym::c0: case Sym::c1: case Sym::d0c: case Sym::d1c: case Sym::e0c:
    case Sym::e1c: case Sym::b0: case Sym::b1: case Sym::d0b: case Sym::d1b:
      return true;
    default:
      return false;
  }
}

// Same token class with the lamp bit flipped (the c generator).
inline Sym toggled(Sym s) {
  switch (s) {
    case Sym::c0: return Sym::c1;
    case Sym::c1: return Sym::c0;
    case Sym::d0c: return Sym::d1c;
    case Sym::d1c: return Sym::d0c;
    case Sym::e0c: return Sym::e1c;
    case Sym::e1c: return Sym::e0c;
    case Sym::d0b: return Sym::d1b;
    case Sym::d1b: return Sym::d0b;
    case Sym::b0: return Sym::b1;
    case Sym::b1: return Sym::b0;
    default: return s;
  }
}

}  // namespace cayley::z2f2

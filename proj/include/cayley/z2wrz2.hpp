#pragma once

#include <iosfwd>

#include "cayley/oracle.hpp"
#include "cayley/spiral.hpp"
#include "cayley/tape_run.hpp"

namespace cayley {

// Normal forms of Z2 wr Z^2: token k (1-based) describes the lamp at
// spiral_point(k); exactly one token carries the lamplighter (C0/C1); the
// string stops at the last lit lamp or the lamplighter, whichever is later.

const Alphabet& z2z2_alphabet();  // {0, 1, C0, C1}

void z2z2_validate(const Word& nf);  // throws NotInLanguage
Word z2z2_encode(const LampConfigZ2& g);
LampConfigZ2 z2z2_decode(const Word& nf);

// Two-tape program for a, a-, b, b- and one-tape program for c. Total on
// every input; correct on normal forms.
TapeRun z2z2_apply(const Word& nf, Gen g, std::ostream* trace = nullptr);

}  // namespace cayley

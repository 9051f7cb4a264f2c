#pragma once

#include <iosfwd>

#include "cayley/oracle.hpp"
#include "cayley/tape_run.hpp"

namespace cayley {

// Recursive bracketed normal forms of Z2 wr F2 over a 24-token alphabet.
// Horizontal lines (a-cosets) are the top level and the '[' groups;
// vertical lines (b-cosets) are the '(' groups. Each group encloses its
// anchor token (the pivot): a D-class token for '(' groups and an E-class
// token for '[' groups.

const Alphabet& z2f2_alphabet();

// Normal form of g. With max_iterations > 0 the recursion stops after that
// many iterations, leaving unexpanded D/E tokens bare (iteration 1 is the
// top-level line).
Word z2f2_encode(const LampConfigF2& g, int max_iterations = 0);

// Inverse of encode; throws NotInLanguage naming the first violation.
LampConfigF2 z2f2_decode(const Word& nf);
void z2f2_validate(const Word& nf);

// Two-tape programs for a, a-, b, b- and the one-tape program for c.
TapeRun z2f2_apply(const Word& nf, Gen g, std::ostream* trace = nullptr);

}  // namespace cayley

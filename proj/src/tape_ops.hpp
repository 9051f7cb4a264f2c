#pragma once

// Tape subroutines shared by the generator programs.

#include <array>
#include <cstddef>
#include <initializer_list>

#include "cayley/tape.hpp"

namespace cayley::detail {

// Track of tape t used for a temporary position mark.
inline constexpr unsigned kMarkTrack = kTracks - 1;

// Inserts syms before the cell under the head, shifting the non-blank suffix
// right by syms.size() (at most 4). The head ends on the first inserted cell.
void insert_here(TapeSet& ts, std::size_t t, std::initializer_list<Sym> syms);

// Removes k cells starting at the head, shifting the non-blank suffix left.
// The head ends on the same cell, which now holds what followed.
void erase_here(TapeSet& ts, std::size_t t, std::size_t k);

// Walks left until the given track reads mark, then clears the mark.
void return_to_mark(TapeSet& ts, std::size_t t, unsigned track);

// Signals that a program halts early because its input is not well formed.
struct Halt {};

}  // namespace cayley::detail

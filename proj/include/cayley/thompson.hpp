#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cayley/generator.hpp"
#include "cayley/tape_run.hpp"
#include "cayley/thompson_nf.hpp"

namespace cayley {

// Index at which x1^-1 settles when pushed through the negative tail of a
// normal form with s0 > 0, and whether it lies beyond every negative index.
struct RResult {
  std::uint64_t R = 0;
  bool case_flag = false;
  bool operator==(const RResult&) const = default;
};

// Runs the two-tape R subroutine; requires s0 > 0 (throws InvalidInput).
RResult f_compute_R(const Word& u);

// Fault injection switches for harness self-tests.
struct FMutation {
  bool drop_case_2_2_2b = false;  // x1^-1 falls through to the next case
};

// Branch labels of the x1^-1 program, in case order:
// 1.1 1.2 1.3a 1.3b 1.3c 2.1a 2.1b 2.1c1 2.1c2 2.1c3 2.2.1 2.2.2a 2.2.2b 2.2.2c
const std::vector<std::string>& f_x1_inv_cases();

// Right multiplication of a normal form by x0^{+-1} or x1^{+-1} on two tapes.
// Throws NotInLanguage if u is not a normal form. The branch of an x1^-1 run
// is its case label; an x1 run reports the label of the case it undoes.
TapeRun f_apply(const Word& u, Gen g, std::ostream* trace = nullptr, FMutation mut = {});

}  // namespace cayley

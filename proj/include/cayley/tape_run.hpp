#pragma once

#include <cstdint>
#include <string>

#include "cayley/generator.hpp"
#include "cayley/symbol.hpp"

namespace cayley {

// Result of running one generator program: the position-faithful output,
// the exact step count and a label naming the case branch that fired.
struct TapeRun {
  Word output;
  std::uint64_t steps = 0;
  std::string branch;
};

// Evidence record for one run, used by the benchmarks and the CLI.
struct StepReport {
  std::size_t input_len = 0;
  std::uint64_t steps = 0;
  Gen gen = Gen::a;
  std::string group;
};

}  // namespace cayley

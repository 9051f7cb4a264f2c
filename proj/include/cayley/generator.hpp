#pragma once

#include <string_view>
#include <vector>

namespace cayley {

// Semigroup generators of all three groups. a, b, c belong to the wreath
// products; x0, x1 to Thompson's group F.
enum class Gen { a, a_inv, b, b_inv, c, x0, x0_inv, x1, x1_inv };

Gen inverse(Gen g);

// CLI spelling: a a- b b- c x0 x0- x1 x1-.
std::string_view gen_name(Gen g);
Gen parse_gen(std::string_view token);  // throws BadWord

// Whitespace separated generator tokens.
std::vector<Gen> parse_gen_word(std::string_view text);

}  // namespace cayley

#pragma once

#include <cstdint>
#include <string_view>

#include "cayley/oracle.hpp"

namespace cayley {

// Counter-clockwise square spiral t: {1,2,...} -> Z^2 with t(1) = (0,0),
// t(2) = (1,0), t(3) = (1,1). Ring j >= 1 holds the 8j indices
// (2j-1)^2 + 1 ... (2j+1)^2 and starts at (j, 1-j).

enum class Region { O, L1, L2, L3, L4, D1, D2, D3, D4 };

std::string_view region_name(Region r);

Region classify(Z2Point p);

// Preconditions k >= 1 (std::domain_error otherwise).
Z2Point spiral_point(std::int64_t k);
std::int64_t spiral_index(Z2Point p);

// Number of completed turns before index k: the j with k_j <= k < k_{j+1},
// k_j = spiral_index((j+1, -j)); 0 below k_1 = 10.
std::int64_t turn_count(std::int64_t k);

enum class Direction { plus_a, minus_a, plus_b, minus_b };

// Index of the neighbor of t(k) in direction dir via the region/turn-count
// jump table.
std::int64_t neighbor_index(std::int64_t k, Direction dir);

// The jump t(k) -> t(k') as k' = k + sign * (coef * i + constant) where i is
// the turn count of k and coef is 0 or 8.
struct Jump {
  int sign;
  int coef;
  int constant;
};
Jump jump_for(Region r, Direction dir);

}  // namespace cayley

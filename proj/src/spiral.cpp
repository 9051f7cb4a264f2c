#include "cayley/spiral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace cayley {

std::string_view region_name(Region r) {
  switch (r) {
    case Region::O: return "O";
    case Region::L1: return "L1";
    case Region::L2: return "L2";
    case Region::L3: return "L3";
    case Region::L4: return "L4";
    case Region::D1: return "D1";
    case Region::D2: return "D2";
    case Region::D3: return "D3";
    case Region::D4: return "D4";
  }
  return "?";
}

Region classify(Z2Point p) {
  const std::int64_t x = p.x, y = p.y;
  if (x == 0 && y == 0) return Region::O;
  if (x > 0 && y == 1 - x) return Region::L1;
  if (x > 0 && y == x) return Region::L2;
  if (x < 0 && y == -x) return Region::L3;
  if (x < 0 && y == x) return Region::L4;
  if (x > 1 && 1 - x < y && y < x) return Region::D1;
  if (y > 0 && -y < x && x < y) return Region::D2;
  if (x < 0 && x < y && y < -x) return Region::D3;
  if (y < 0 && y < x && x < 1 - y) return Region::D4;
  throw std::logic_error("point not covered by the region partition");
}

Z2Point spiral_point(std::int64_t k) {
  if (k < 1) throw std::domain_error("spiral index must be positive");
  if (k == 1) return {0, 0};
  // ring j: (2j-1)^2 < k <= (2j+1)^2
  auto j = static_cast<std::int64_t>((std::sqrt(static_cast<long double>(k - 1)) + 1) / 2);
  while ((2 * j + 1) * (2 * j + 1) < k) ++j;
  while (j > 1 && (2 * j - 1) * (2 * j - 1) >= k) --j;
  const std::int64_t q = k - ((2 * j - 1) * (2 * j - 1) + 1);
  if (q < 2 * j) return {j, 1 - j + q};
  if (q < 4 * j) return {3 * j - 1 - q, j};
  if (q < 6 * j) return {-j, 5 * j - 1 - q};
  return {q - 7 * j + 1, -j};
}

std::int64_t spiral_index(Z2Point p) {
  const std::int64_t x = p.x, y = p.y;
  const std::int64_t j = std::max(std::llabs(x), std::llabs(y));
  if (j == 0) return 1;
  std::int64_t q;
  if (x == j && y > -j)
    q = y + j - 1;
  else if (y == j && x < j)
    q = 3 * j - 1 - x;
  else if (x == -j && y < j)
    q = 5 * j - 1 - y;
  else
    q = x + 7 * j - 1;
  return (2 * j - 1) * (2 * j - 1) + 1 + q;
}

std::int64_t turn_count(std::int64_t k) {
  if (k < 1) throw std::domain_error("spiral index must be positive");
  if (k == 1) return 0;
  const Z2Point p = spiral_point(k);
  const std::int64_t j = std::max(std::llabs(p.x), std::llabs(p.y));
  return j - 1;
}

Jump jump_for(Region r, Direction dir) {
  using R = Region;
  switch (dir) {
    case Direction::plus_a:
      switch (r) {
        case R::O: return {1, 0, 1};
        case R::L1: case R::D1: case R::L2: return {1, 8, 9};
        case R::D2: case R::L3: return {-1, 0, 1};
        case R::D3: return {-1, 8, 5};
        case R::L4: case R::D4: return {1, 0, 1};
      }
      break;
    case Direction::minus_a:
      switch (r) {
        case R::O: return {1, 0, 5};
        case R::L1: return {-1, 0, 1};
        case R::D1: return {-1, 8, 1};
        case R::L2: case R::D2: return {1, 0, 1};
        case R::L3: case R::D3: case R::L4: return {1, 8, 13};
        case R::D4: return {-1, 0, 1};
      }
      break;
    case Direction::plus_b:
      switch (r) {
        case R::O: return {1, 0, 3};
        case R::L1: case R::D1: return {1, 0, 1};
        case R::L2: case R::D2: case R::L3: return {1, 8, 11};
        case R::D3: case R::L4: return {-1, 0, 1};
        case R::D4: return {-1, 8, 7};
      }
      break;
    case Direction::minus_b:
      switch (r) {
        case R::O: return {1, 0, 7};
        case R::L1: return {1, 8, 7};
        case R::D1: case R::L2: return {-1, 0, 1};
        case R::D2: return {-1, 8, 3};
        case R::L3: case R::D3: return {1, 0, 1};
        case R::L4: case R::D4: return {1, 8, 15};
      }
      break;
  }
  throw std::logic_error("unhandled region/direction");
}

std::int64_t neighbor_index(std::int64_t k, Direction dir) {
  const Jump j = jump_for(classify(spiral_point(k)), dir);
  const std::int64_t out = k + j.sign * (j.coef * turn_count(k) + j.constant);
  if (out < 1) throw std::logic_error("neighbor index below 1");
  return out;
}

}  // namespace cayley

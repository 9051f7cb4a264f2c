#include <doctest.h>

#include <map>
#include <vector>

#include "cayley/spiral.hpp"

using namespace cayley;

namespace {

// Brute-force spiral: runs of length 1,1,2,2,3,3,... heading E, N, W, S.
std::vector<Z2Point> walk(std::size_t n) {
  std::vector<Z2Point> pts{{0, 0}};
  const std::int64_t dx[] = {1, 0, -1, 0}, dy[] = {0, 1, 0, -1};
  Z2Point p{0, 0};
  for (std::int64_t run = 1, dir = 0; pts.size() < n; ++dir) {
    for (std::int64_t s = 0; s < run && pts.size() < n; ++s) {
      p.x += dx[dir % 4];
      p.y += dy[dir % 4];
      pts.push_back(p);
    }
    if (dir % 2 == 1) ++run;
  }
  return pts;  // pts[k-1] = t(k)
}

int matching_regions(std::int64_t x, std::int64_t y) {
  int n = 0;
  n += x == 0 && y == 0;
  n += x > 0 && y == -(x - 1);
  n += x > 0 && y == x;
  // l3 = {(-t, t) : t > 0}, l4 = {(-t, -t) : t > 0}
  n += x < 0 && y == -x;
  n += x < 0 && y == x;
  n += -(x - 1) < y && y < x && x > 1;
  n += -y < x && x < y && y > 0;
  n += x < y && y < -x && x < 0;
  n += y < x && x < -y + 1 && y < 0;
  return n;
}

Z2Point step(Z2Point p, Direction d) {
  switch (d) {
    case Direction::plus_a: return {p.x + 1, p.y};
    case Direction::minus_a: return {p.x - 1, p.y};
    case Direction::plus_b: return {p.x, p.y + 1};
    case Direction::minus_b: return {p.x, p.y - 1};
  }
  return p;
}

}  // namespace

TEST_CASE("region examples") {
  CHECK(classify({0, 0}) == Region::O);
  CHECK(classify({2, -1}) == Region::L1);
  CHECK(classify({1, -1}) == Region::D4);
  CHECK(classify({1, 0}) == Region::L1);
  CHECK(classify({-1, 0}) == Region::D3);
}

TEST_CASE("regions partition the plane") {
  for (std::int64_t x = -200; x <= 200; ++x)
    for (std::int64_t y = -200; y <= 200; ++y) {
      REQUIRE(matching_regions(x, y) == 1);
      classify({x, y});
    }
}

TEST_CASE("spiral point and index examples") {
  CHECK(spiral_point(1) == Z2Point{0, 0});
  CHECK(spiral_point(2) == Z2Point{1, 0});
  CHECK(spiral_point(3) == Z2Point{1, 1});
  CHECK(spiral_point(10) == Z2Point{2, -1});
  CHECK(spiral_point(23) == Z2Point{0, -2});
  CHECK(spiral_point(27) == Z2Point{3, -1});
  CHECK(spiral_index({0, 0}) == 1);
  CHECK(spiral_index({2, -1}) == 10);
  CHECK(spiral_index({-1, 0}) == 6);
  CHECK_THROWS(spiral_point(0));
}

TEST_CASE("first ring follows the region sequence O, L1, L2, D2, L3, D3, L4, D4, D4, L1") {
  const Region expect[] = {Region::O,  Region::L1, Region::L2, Region::D2, Region::L3,
                           Region::D3, Region::L4, Region::D4, Region::D4, Region::L1};
  for (std::int64_t k = 1; k <= 10; ++k) CHECK(classify(spiral_point(k)) == expect[k - 1]);
}

TEST_CASE("turn count") {
  CHECK(turn_count(1) == 0);
  CHECK(turn_count(9) == 0);
  CHECK(turn_count(10) == 1);
  CHECK(turn_count(25) == 1);
  CHECK(turn_count(26) == 2);
  // definition through k_j = index of (j+1, -j)
  for (std::int64_t j = 1; j < 50; ++j) {
    const std::int64_t kj = spiral_index({j + 1, -j});
    CHECK(turn_count(kj) == j);
    CHECK(turn_count(kj - 1) == j - 1);
  }
}

TEST_CASE("closed forms agree with the walker up to 10^6") {
  const std::size_t n = 1000000;
  const auto pts = walk(n);
  for (std::size_t k = 1; k <= n; ++k) {
    REQUIRE(spiral_point(static_cast<std::int64_t>(k)) == pts[k - 1]);
    REQUIRE(spiral_index(pts[k - 1]) == static_cast<std::int64_t>(k));
  }
}

TEST_CASE("jump formulas are sound for k up to 10^5 in all four directions") {
  const std::size_t n = 200000;
  const auto pts = walk(n);
  std::map<Z2Point, std::int64_t> index;
  for (std::size_t k = 1; k <= n; ++k) index[pts[k - 1]] = static_cast<std::int64_t>(k);
  const Direction dirs[] = {Direction::plus_a, Direction::minus_a, Direction::plus_b,
                            Direction::minus_b};
  std::size_t mismatches = 0;
  for (std::int64_t k = 1; k <= 100000; ++k)
    for (Direction d : dirs)
      mismatches += neighbor_index(k, d) != index.at(step(pts[k - 1], d));
  CHECK(mismatches == 0);
  CHECK(neighbor_index(7, Direction::plus_a) == 8);
  CHECK(neighbor_index(6, Direction::plus_a) == 1);
  CHECK(neighbor_index(10, Direction::plus_a) == 27);
}

TEST_CASE("region runs along the spiral match the turn count") {
  // From L1 the next 2i indices are in D1 then L2; from L2, 2i+1 in D2 then
  // L3; from L3, 2i+1 in D3 then L4; from L4, 2i+2 in D4 then L1.
  const std::pair<Region, Region> runs[] = {{Region::L1, Region::D1},
                                           {Region::L2, Region::D2},
                                           {Region::L3, Region::D3},
                                           {Region::L4, Region::D4}};
  const Region next[] = {Region::L2, Region::L3, Region::L4, Region::L1};
  const std::int64_t extra[] = {0, 1, 1, 2};
  for (std::int64_t k = 2; k <= 100000; ++k) {
    const Region r = classify(spiral_point(k));
    for (int s = 0; s < 4; ++s) {
      if (r != runs[s].first) continue;
      const std::int64_t len = 2 * turn_count(k) + extra[s];
      for (std::int64_t m = k + 1; m <= k + len; ++m)
        REQUIRE(classify(spiral_point(m)) == runs[s].second);
      REQUIRE(classify(spiral_point(k + len + 1)) == next[s]);
    }
  }
}

#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cayley/dyadic.hpp"
#include "cayley/generator.hpp"

namespace cayley {

// ---- Z2 wr Z^2 ----------------------------------------------------------

struct Z2Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  auto operator<=>(const Z2Point&) const = default;
};

struct LampConfigZ2 {
  std::set<Z2Point> lit;
  Z2Point pos;
  bool operator==(const LampConfigZ2&) const = default;
};

// ---- Z2 wr F2 ------------------------------------------------------------

// Freely reduced word over a, A = a^-1, b, B = b^-1.
class F2Word {
 public:
  F2Word() = default;
  // Reduces the given letters; throws std::invalid_argument on other characters.
  explicit F2Word(std::string_view letters);

  const std::string& letters() const { return w_; }
  std::size_t size() const { return w_.size(); }
  bool empty() const { return w_.empty(); }
  char back() const { return w_.back(); }

  // Right multiplication by one letter with cancellation.
  F2Word& mul(char letter);

  auto operator<=>(const F2Word&) const = default;

  static char inverse_letter(char c);

 private:
  std::string w_;
};

struct LampConfigF2 {
  std::set<F2Word> lit;
  F2Word pos;
  bool operator==(const LampConfigF2&) const = default;
};

LampConfigZ2 wreath_mul_gen(LampConfigZ2 g, Gen s);
LampConfigF2 wreath_mul_gen(LampConfigF2 g, Gen s);

// ---- Thompson's group F ---------------------------------------------------

// Piecewise-linear homeomorphism of [0,1] with dyadic breakpoints and slopes
// that are powers of two, kept canonical (no two adjacent segments share a
// slope).
class DyadicPL {
 public:
  DyadicPL();  // identity

  // Validates and canonicalizes; throws std::invalid_argument.
  static DyadicPL from_breakpoints(const std::vector<std::pair<Dyadic, Dyadic>>& pts);

  const std::vector<Dyadic>& xs() const { return xs_; }
  const std::vector<Dyadic>& ys() const { return ys_; }
  // log2 of the slope of segment k (between breakpoints k and k+1).
  const std::vector<std::int64_t>& slopes() const { return slopes_; }
  std::size_t breakpoint_count() const { return xs_.size(); }

  Dyadic operator()(const Dyadic& x) const;
  DyadicPL inverse() const;
  bool is_identity() const { return xs_.size() == 2; }
  bool operator==(const DyadicPL& o) const {
    return slopes_ == o.slopes_ && xs_ == o.xs_ && ys_ == o.ys_;
  }

  std::string str() const;

 private:
  friend DyadicPL pl_compose(const DyadicPL& f, const DyadicPL& g);
  void push(const Dyadic& x, const Dyadic& y, std::int64_t slope_before);

  std::vector<Dyadic> xs_, ys_;
  std::vector<std::int64_t> slopes_;
};

// x -> f(g(x)). As group elements, the product f·g under right actions
// written as maps composed right to left: psi(w s) = psi(w) ∘ psi(s).
DyadicPL pl_compose(const DyadicPL& f, const DyadicPL& g);

// x0 or x1 (sign +1) or their inverses (sign -1).
enum class ThompsonGen { x0, x1 };
const DyadicPL& pl_generator(ThompsonGen which, int sign);
const DyadicPL& pl_generator(Gen g);  // g in x0, x0-, x1, x1-

// x_i for i >= 0 with x_{i+1} = x0^{-i} x1 x0^{i}, i >= 1 (cached).
const DyadicPL& pl_x(std::size_t i);

// Group element of an L-infinity normal form; throws NotInLanguage.
DyadicPL pl_eval_normalform(std::string_view u);

}  // namespace cayley

#include "cayley/oracle.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>

#include "cayley/errors.hpp"
#include "cayley/thompson_nf.hpp"

namespace cayley {

// ---- wreath products ---------------------------------------------------------

F2Word::F2Word(std::string_view letters) {
  for (char c : letters) mul(c);
}

char F2Word::inverse_letter(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    case 'B': return 'b';
    default: throw std::invalid_argument(std::string("not a free-group letter: ") + c);
  }
}

F2Word& F2Word::mul(char letter) {
  char inv = inverse_letter(letter);
  if (!w_.empty() && w_.back() == inv)
    w_.pop_back();
  else
    w_.push_back(letter);
  return *this;
}

namespace {

template <class Config, class Key>
void toggle(Config& g, const Key& k) {
  auto it = g.lit.find(k);
  if (it == g.lit.end())
    g.lit.insert(k);
  else
    g.lit.erase(it);
}

}  // namespace

LampConfigZ2 wreath_mul_gen(LampConfigZ2 g, Gen s) {
  switch (s) {
    case Gen::a: ++g.pos.x; break;
    case Gen::a_inv: --g.pos.x; break;
    case Gen::b: ++g.pos.y; break;
    case Gen::b_inv: --g.pos.y; break;
    case Gen::c: toggle(g, g.pos); break;
    default: throw BadWord("generator " + std::string(gen_name(s)) + " is not in Z2 wr Z2");
  }
  return g;
}

LampConfigF2 wreath_mul_gen(LampConfigF2 g, Gen s) {
  switch (s) {
    case Gen::a: g.pos.mul('a'); break;
    case Gen::a_inv: g.pos.mul('A'); break;
    case Gen::b: g.pos.mul('b'); break;
    case Gen::b_inv: g.pos.mul('B'); break;
    case Gen::c: toggle(g, g.pos); break;
    default: throw BadWord("generator " + std::string(gen_name(s)) + " is not in Z2 wr F2");
  }
  return g;
}

// ---- dyadic PL maps ------------------------------------------------------------

DyadicPL::DyadicPL() : xs_{Dyadic(0), Dyadic(1)}, ys_{Dyadic(0), Dyadic(1)}, slopes_{0} {}

void DyadicPL::push(const Dyadic& x, const Dyadic& y, std::int64_t slope_before) {
  if (!slopes_.empty() && slopes_.back() == slope_before) {
    xs_.back() = x;
    ys_.back() = y;
    return;
  }
  slopes_.push_back(slope_before);
  xs_.push_back(x);
  ys_.push_back(y);
}

DyadicPL DyadicPL::from_breakpoints(const std::vector<std::pair<Dyadic, Dyadic>>& pts) {
  if (pts.size() < 2 || pts.front() != std::pair<Dyadic, Dyadic>(0, 0) ||
      pts.back() != std::pair<Dyadic, Dyadic>(1, 1))
    throw std::invalid_argument("breakpoints must run from (0,0) to (1,1)");
  DyadicPL f;
  f.xs_ = {pts[0].first};
  f.ys_ = {pts[0].second};
  f.slopes_.clear();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Dyadic dx = pts[i].first - pts[i - 1].first;
    Dyadic dy = pts[i].second - pts[i - 1].second;
    if (dx <= Dyadic(0) || dy <= Dyadic(0))
      throw std::invalid_argument("breakpoints must be strictly increasing");
    std::int64_t k;
    try {
      k = log2_ratio(dx, dy);
    } catch (const std::domain_error&) {
      throw std::invalid_argument("segment slope is not a power of two");
    }
    f.push(pts[i].first, pts[i].second, k);
  }
  return f;
}

Dyadic DyadicPL::operator()(const Dyadic& x) const {
  if (x < Dyadic(0) || x > Dyadic(1)) throw std::domain_error("argument outside [0,1]");
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t k = it == xs_.end() ? xs_.size() - 2 : static_cast<std::size_t>(it - xs_.begin()) - 1;
  return ys_[k] + (x - xs_[k]).scaled(slopes_[k]);
}

DyadicPL DyadicPL::inverse() const {
  DyadicPL g;
  g.xs_ = ys_;
  g.ys_ = xs_;
  g.slopes_.resize(slopes_.size());
  std::transform(slopes_.begin(), slopes_.end(), g.slopes_.begin(),
                 [](std::int64_t k) { return -k; });
  return g;
}

std::string DyadicPL::str() const {
  std::string s;
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (i) s += ' ';
    s += '(' + xs_[i].str() + ',' + ys_[i].str() + ')';
  }
  return s;
}

DyadicPL pl_compose(const DyadicPL& f, const DyadicPL& g) {
  DyadicPL h;
  h.xs_ = {Dyadic(0)};
  h.ys_ = {Dyadic(0)};
  h.slopes_.clear();
  h.xs_.reserve(f.xs_.size() + g.xs_.size());
  h.ys_.reserve(f.xs_.size() + g.xs_.size());
  std::size_t j = 1;  // next breakpoint of f strictly right of the current point
  for (std::size_t i = 0; i + 1 < g.xs_.size(); ++i) {
    const Dyadic& seg_end = g.ys_[i + 1];
    while (f.xs_[j] < seg_end) {
      Dyadic x = g.xs_[i] + (f.xs_[j] - g.ys_[i]).scaled(-g.slopes_[i]);
      h.push(x, f.ys_[j], g.slopes_[i] + f.slopes_[j - 1]);
      ++j;
    }
    std::int64_t slope = g.slopes_[i] + f.slopes_[j - 1];
    if (f.xs_[j] == seg_end) {
      h.push(g.xs_[i + 1], f.ys_[j], slope);
      ++j;
    } else {
      h.push(g.xs_[i + 1], f.ys_[j - 1] + (seg_end - f.xs_[j - 1]).scaled(f.slopes_[j - 1]),
             slope);
    }
  }
  return h;
}

const DyadicPL& pl_generator(ThompsonGen which, int sign) {
  static const DyadicPL x0 = DyadicPL::from_breakpoints(
      {{0, 0}, {Dyadic(1, 1), Dyadic(1, 2)}, {Dyadic(3, 2), Dyadic(1, 1)}, {1, 1}});
  static const DyadicPL x1 = DyadicPL::from_breakpoints({{0, 0},
                                                         {Dyadic(1, 1), Dyadic(1, 1)},
                                                         {Dyadic(3, 2), Dyadic(5, 3)},
                                                         {Dyadic(7, 3), Dyadic(3, 2)},
                                                         {1, 1}});
  static const DyadicPL x0_inv = x0.inverse();
  static const DyadicPL x1_inv = x1.inverse();
  if (which == ThompsonGen::x0) return sign > 0 ? x0 : x0_inv;
  return sign > 0 ? x1 : x1_inv;
}

const DyadicPL& pl_generator(Gen g) {
  switch (g) {
    case Gen::x0: return pl_generator(ThompsonGen::x0, 1);
    case Gen::x0_inv: return pl_generator(ThompsonGen::x0, -1);
    case Gen::x1: return pl_generator(ThompsonGen::x1, 1);
    case Gen::x1_inv: return pl_generator(ThompsonGen::x1, -1);
    default: throw BadWord("generator " + std::string(gen_name(g)) + " is not in F");
  }
}

const DyadicPL& pl_x(std::size_t i) {
  static std::mutex mu;
  static std::deque<DyadicPL> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) {
    cache.push_back(pl_generator(ThompsonGen::x0, 1));
    cache.push_back(pl_generator(ThompsonGen::x1, 1));
  }
  while (cache.size() <= i) {
    // x_{k+1} = x0^{-1} x_k x0 for k >= 1
    const DyadicPL& prev = cache.back();
    cache.push_back(pl_compose(pl_compose(pl_generator(ThompsonGen::x0, -1), prev),
                               pl_generator(ThompsonGen::x0, 1)));
  }
  return cache[i];
}

namespace {

// Product of factors[lo, hi) by balanced halving, so each breakpoint takes
// part in O(log n) compositions instead of O(n).
DyadicPL balanced_product(const std::vector<const DyadicPL*>& factors, std::size_t lo,
                          std::size_t hi) {
  if (hi - lo == 1) return *factors[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return pl_compose(balanced_product(factors, lo, mid), balanced_product(factors, mid, hi));
}

}  // namespace

DyadicPL pl_eval_normalform(std::string_view u) {
  const ExpSeq e = f_parse(u);
  if (e.is_identity()) return DyadicPL();
  std::vector<const DyadicPL*> factors;
  auto times = [&factors](ThompsonGen g, int sign, std::size_t n) {
    const DyadicPL& f = pl_generator(g, sign);
    factors.insert(factors.end(), n, &f);
  };
  // x_i = x0^{-(i-1)} x1 x0^{i-1}; adjacent conjugators telescope, giving
  // x0^{r0} x1^{r1} x0^-1 x1^{r2} ... x0^-1 x1^{rM} x1^{-sM} x0 ... x0 x1^{-s1} x0^{-s0}.
  const std::size_t m = e.M();
  times(ThompsonGen::x0, 1, e.r[0]);
  for (std::size_t i = 1; i <= m; ++i) {
    if (i > 1) times(ThompsonGen::x0, -1, 1);
    times(ThompsonGen::x1, 1, e.r[i]);
  }
  for (std::size_t i = m; i >= 1; --i) {
    times(ThompsonGen::x1, -1, e.s[i]);
    if (i > 1) times(ThompsonGen::x0, 1, 1);
  }
  times(ThompsonGen::x0, -1, e.s[0]);
  if (factors.empty()) return DyadicPL();
  return balanced_product(factors, 0, factors.size());
}

}  // namespace cayley

#include "cayley/z2wrz2.hpp"

#include <algorithm>

#include "cayley/errors.hpp"
#include "tape_ops.hpp"

namespace cayley {

const Alphabet& z2z2_alphabet() {
  static const Alphabet sigma{Sym::zero, Sym::one, Sym::c0, Sym::c1};
  return sigma;
}

namespace {

bool is_c(Sym s) { return s == Sym::c0 || s == Sym::c1; }

}  // namespace

void z2z2_validate(const Word& nf) {
  std::size_t markers = 0;
  for (Sym s : nf) {
    if (!z2z2_alphabet().contains(s))
      throw NotInLanguage("symbol '" + std::string(sym_text(s)) + "' is not 0, 1, C0 or C1");
    if (is_c(s)) ++markers;
  }
  if (markers != 1)
    throw NotInLanguage("expected exactly one lamplighter token, found " + std::to_string(markers));
  if (nf.back() == Sym::zero) throw NotInLanguage("trailing 0");
}

Word z2z2_encode(const LampConfigZ2& g) {
  const std::int64_t r = spiral_index(g.pos);
  std::int64_t m = 0;
  for (const Z2Point& p : g.lit) m = std::max(m, spiral_index(p));
  Word w(static_cast<std::size_t>(std::max(m, r)), Sym::zero);
  for (const Z2Point& p : g.lit) w[static_cast<std::size_t>(spiral_index(p) - 1)] = Sym::one;
  Sym& at = w[static_cast<std::size_t>(r - 1)];
  at = at == Sym::one ? Sym::c1 : Sym::c0;
  return w;
}

LampConfigZ2 z2z2_decode(const Word& nf) {
  z2z2_validate(nf);
  LampConfigZ2 g;
  for (std::size_t k = 0; k < nf.size(); ++k) {
    const auto idx = static_cast<std::int64_t>(k + 1);
    if (nf[k] == Sym::one || nf[k] == Sym::c1) g.lit.insert(spiral_point(idx));
    if (is_c(nf[k])) g.pos = spiral_point(idx);
  }
  return g;
}

namespace {

constexpr std::size_t kIo = 0;     // input/output tape
constexpr std::size_t kTurns = 1;  // unary turn counter T^i

class Z2Z2Machine {
 public:
  explicit Z2Z2Machine(TapeSet& ts) : ts_(ts) {}

  // Locates the lamplighter token, leaving tape 1 as ⊞T^i with the head on
  // the first blank. Returns the region of the lamplighter.
  Region locate() {
    static constexpr Region kFirstRing[] = {Region::L1, Region::L2, Region::D2, Region::L3,
                                            Region::D3, Region::L4, Region::D4, Region::D4};
    ts_.right(kTurns);  // home of the counter: the cell after the last T
    if (advance(Region::O)) return s_;
    for (Region r : kFirstRing)
      if (advance(r)) return s_;
    for (;;) {
      bool found = advance(Region::L1);
      ts_.write(kTurns, Sym::turn);
      ts_.right(kTurns);
      if (found) return s_;
      if (sweep(2, [&] { return advance(Region::D1); })) return s_;
      if (advance(Region::L2)) return s_;
      if (sweep(1, [&] { return advance(Region::D2); })) return s_;
      if (advance(Region::L3)) return s_;
      if (sweep(1, [&] { return advance(Region::D3); })) return s_;
      if (advance(Region::L4)) return s_;
      if (sweep(0, [&] { return advance(Region::D4); })) return s_;
    }
  }

  // Moves the lamplighter mark by sign * (coef * i + constant) cells.
  void move_mark(const Jump& j) {
    const int total_const = j.constant;
    int extra;
    int skip = 0;
    if (j.coef == 0) {
      extra = total_const - 1;
    } else {
      // 4 sweeps pair (2i + 2 - skip) moves each: 8i + 4(2 - skip).
      skip = std::max(0, 2 - (total_const - 1) / 4);
      extra = total_const - 1 - 4 * (2 - skip);
    }
    if (j.sign > 0) {
      depart_right();
      if (j.coef != 0)
        for (int s = 0; s < 4; ++s) sweep(skip, [&] { step_right(); return false; });
      for (int e = 0; e < extra; ++e) step_right();
      arrive_right();
    } else {
      depart_left();
      if (j.coef != 0)
        for (int s = 0; s < 4; ++s) sweep(skip, [&] { step_left(); return false; });
      for (int e = 0; e < extra; ++e) step_left();
      arrive_left();
    }
  }

 private:
  // Reads the next input symbol as a member of region r. True when it is the
  // lamplighter token.
  bool advance(Region r) {
    ts_.right(kIo);
    Sym s = ts_.read(kIo);
    s_ = r;
    if (s == Sym::blank) throw detail::Halt{};
    return is_c(s);
  }

  // Round trip of the counter head (home -> ⊞ -> home): 2i + 2 moves. Every
  // move after the first `skip` is paired with one call of body; if body
  // returns true the head is sent home early.
  template <class Body>
  bool sweep(int skip, Body body) {
    int moves = 0;
    auto paired = [&]() -> bool { return ++moves > skip && body(); };
    do {
      ts_.left(kTurns);
      if (paired()) return go_home();
    } while (ts_.read(kTurns) != Sym::start);
    do {
      ts_.right(kTurns);
      if (paired()) return go_home();
    } while (ts_.read(kTurns) != Sym::blank);
    return false;
  }

  bool go_home() {
    while (ts_.read(kTurns) != Sym::blank) ts_.right(kTurns);
    return true;
  }

  void depart_right() {
    Sym s = ts_.read(kIo);
    ts_.write(kIo, s == Sym::c1 ? Sym::one : Sym::zero);
  }
  void step_right() {
    ts_.right(kIo);
    if (ts_.read(kIo) == Sym::blank) ts_.write(kIo, Sym::zero);
  }
  void arrive_right() {
    ts_.right(kIo);
    ts_.write(kIo, ts_.read(kIo) == Sym::one ? Sym::c1 : Sym::c0);
  }

  // A trailing C0 leaves a run of zeros behind it; they are erased while
  // walking left until the first 1.
  void depart_left() {
    Sym s = ts_.read(kIo);
    if (s == Sym::c1) {
      erase_ = false;
      ts_.write(kIo, Sym::one);
      return;
    }
    ts_.right(kIo);
    erase_ = ts_.read(kIo) == Sym::blank;
    ts_.left(kIo);
    ts_.write(kIo, erase_ ? Sym::blank : Sym::zero);
  }
  void step_left() {
    ts_.left(kIo);
    Sym s = ts_.read(kIo);
    if (!erase_) return;
    if (s == Sym::zero)
      ts_.write(kIo, Sym::blank);
    else if (s == Sym::one)
      erase_ = false;
  }
  void arrive_left() {
    ts_.left(kIo);
    Sym s = ts_.read(kIo);
    if (s == Sym::start) throw detail::Halt{};
    ts_.write(kIo, s == Sym::one ? Sym::c1 : Sym::c0);
  }

  TapeSet& ts_;
  Region s_ = Region::O;
  bool erase_ = false;
};

Direction direction_of(Gen g) {
  switch (g) {
    case Gen::a: return Direction::plus_a;
    case Gen::a_inv: return Direction::minus_a;
    case Gen::b: return Direction::plus_b;
    case Gen::b_inv: return Direction::minus_b;
    default: throw BadWord("generator " + std::string(gen_name(g)) + " is not in Z2 wr Z2");
  }
}

void toggle_program(TapeSet& ts) {
  for (;;) {
    ts.right(kIo);
    Sym s = ts.read(kIo);
    if (s == Sym::blank) return;
    if (is_c(s)) {
      ts.write(kIo, s == Sym::c0 ? Sym::c1 : Sym::c0);
      return;
    }
  }
}

}  // namespace

TapeRun z2z2_apply(const Word& nf, Gen g, std::ostream* trace) {
  TapeRun run;
  if (g == Gen::c) {
    TapeSet ts(nf, 1);
    ts.set_trace(trace);
    toggle_program(ts);
    run.output = read_output(ts, z2z2_alphabet());
    run.steps = ts.steps();
    run.branch = "c";
    return run;
  }
  const Direction dir = direction_of(g);
  TapeSet ts(nf, 2);
  ts.set_trace(trace);
  Z2Z2Machine m(ts);
  try {
    const Region r = m.locate();
    const Jump j = jump_for(r, dir);
    run.branch = std::string(region_name(r));
    m.move_mark(j);
  } catch (const detail::Halt&) {
    run.branch = "halt";
  }
  run.output = read_output(ts, z2z2_alphabet());
  run.steps = ts.steps();
  return run;
}

}  // namespace cayley

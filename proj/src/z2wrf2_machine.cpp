#include "cayley/errors.hpp"
#include "cayley/z2wrf2.hpp"
#include "tape_ops.hpp"
#include "z2wrf2_tokens.hpp"

namespace cayley {

namespace {

using namespace z2f2;
using detail::Halt;

constexpr std::size_t kIo = 0;
constexpr std::size_t kStack = 1;  // bracket stack

bool is_opener(Sym s) { return s == Sym::lparen || s == Sym::lbrack; }
bool is_closer(Sym s) { return s == Sym::rparen || s == Sym::rbrack; }

Sym marked(Sym s) {
  switch (s) {
    case Sym::lparen: return Sym::marked_lparen;
    case Sym::lbrack: return Sym::marked_lbrack;
    case Sym::rparen: return Sym::marked_rparen;
    case Sym::rbrack: return Sym::marked_rbrack;
    default: return s;
  }
}

Sym unmarked(Sym s) {
  switch (s) {
    case Sym::marked_lparen: return Sym::lparen;
    case Sym::marked_lbrack: return Sym::lbrack;
    case Sym::marked_rparen: return Sym::rparen;
    case Sym::marked_rbrack: return Sym::rbrack;
    default: return s;
  }
}

bool is_marked(Sym s) { return unmarked(s) != s; }

Sym partner(Sym s) {
  switch (s) {
    case Sym::lparen: return Sym::rparen;
    case Sym::rparen: return Sym::lparen;
    case Sym::lbrack: return Sym::rbrack;
    case Sym::rbrack: return Sym::lbrack;
    default: return s;
  }
}

// Unexpanded anchor of a '(' group on arrival of the lamplighter.
Sym d_arrive(Sym q) {
  switch (q) {
    case Sym::d0: return Sym::d0c;
    case Sym::d1: return Sym::d1c;
    case Sym::d0a: return Sym::d0b;
    case Sym::d1a: return Sym::d1b;
    default: throw Halt{};
  }
}

// Anchor of a '(' group when the lamplighter leaves it.
Sym d_depart(Sym q) { return q == Sym::d0c ? Sym::d0 : q == Sym::d1c ? Sym::d1 : q == Sym::d0b ? Sym::d0a : Sym::d1a; }

Sym e_arrive(Sym q) {
  if (q == Sym::e0) return Sym::e0c;
  if (q == Sym::e1) return Sym::e1c;
  throw Halt{};
}

// Plain token left behind by the lamplighter.
Sym plain_depart(Sym s) {
  switch (s) {
    case Sym::c0: return Sym::zero;
    case Sym::c1: return Sym::one;
    case Sym::b0: return Sym::a0;
    case Sym::b1: return Sym::a1;
    default: throw Halt{};
  }
}

class Z2F2Machine {
 public:
  Z2F2Machine(TapeSet& ts, std::string& branch) : ts_(ts), branch_(branch) {}

  // Scans to the lamplighter token keeping the bracket stack on tape 1.
  // Returns the token; the stack top is the innermost enclosing bracket.
  Sym locate() {
    for (;;) {
      ts_.right(kIo);
      Sym s = ts_.read(kIo);
      if (s == Sym::blank) throw Halt{};
      if (marks_lamplighter(s)) return s;
      track(s);
    }
  }

  void mul_a(Sym s) {
    if (s == Sym::d0c || s == Sym::d1c || s == Sym::d0b || s == Sym::d1b) {
      require_top(Sym::lparen);
      note("anchorD");
      ts_.write(kIo, d_depart(s));
      skip_to_group_end();
      ts_.right(kIo);
      arrive_horizontal_right();
      return;
    }
    if (s == Sym::e0c || s == Sym::e1c) {
      note("anchorE");
      ts_.write(kIo, s == Sym::e0c ? Sym::e0 : Sym::e1);
      ts_.right(kIo);
      arrive_horizontal_right();
      return;
    }
    const Sym p = ts_.read(kStack);
    if (p == Sym::lparen) {
      // vertical position: a new '[' group opens here
      if (s != Sym::c0 && s != Sym::c1) throw Halt{};
      note("sprout");
      ts_.write(kIo, Sym::lbrack);
      ts_.right(kIo);
      detail::insert_here(ts_, kIo, {e_plain(s == Sym::c1), Sym::c0, Sym::rbrack});
      return;
    }
    if (p != Sym::lbrack && p != Sym::start) throw Halt{};
    if (s == Sym::c0) {
      ts_.left(kIo);
      const Sym t = ts_.read(kIo);
      ts_.right(kIo);
      if (t == Sym::lbrack) {
        if (collapse_forward(e_class_plain_to_c, Sym::rbrack)) return;
        note("trimLead");
        detail::erase_here(ts_, kIo, 1);
        arrive_horizontal_right();
        return;
      }
      if (t == Sym::start) {
        note("trimLead");
        detail::erase_here(ts_, kIo, 1);
        arrive_horizontal_right();
        return;
      }
    }
    note("plain");
    ts_.write(kIo, plain_depart(s));
    ts_.right(kIo);
    arrive_horizontal_right();
  }

  void mul_a_inv(Sym s) {
    if (s == Sym::d0c || s == Sym::d1c || s == Sym::d0b || s == Sym::d1b) {
      require_top(Sym::lparen);
      note("anchorD");
      ts_.write(kIo, d_depart(s));
      back_to_group_start();
      ts_.left(kIo);
      arrive_horizontal_left();
      return;
    }
    if (s == Sym::e0c || s == Sym::e1c) {
      note("anchorE");
      ts_.write(kIo, s == Sym::e0c ? Sym::e0 : Sym::e1);
      ts_.left(kIo);
      arrive_horizontal_left();
      return;
    }
    const Sym p = ts_.read(kStack);
    if (p == Sym::lparen) {
      if (s != Sym::c0 && s != Sym::c1) throw Halt{};
      note("sprout");
      ts_.write(kIo, Sym::lbrack);
      ts_.right(kIo);
      detail::insert_here(ts_, kIo, {Sym::c0, e_plain(s == Sym::c1), Sym::rbrack});
      return;
    }
    if (p != Sym::lbrack && p != Sym::start) throw Halt{};
    if (s == Sym::c0) {
      ts_.right(kIo);
      const Sym n = ts_.read(kIo);
      ts_.left(kIo);
      if (n == Sym::rbrack) {
        if (collapse_backward(e_class_plain_to_c, Sym::lbrack)) return;
        note("trimTrail");
        detail::erase_here(ts_, kIo, 1);
        ts_.left(kIo);
        arrive_horizontal_left();
        return;
      }
      if (n == Sym::blank) {
        note("trimTrail");
        ts_.write(kIo, Sym::blank);
        ts_.left(kIo);
        arrive_horizontal_left();
        return;
      }
    }
    note("plain");
    ts_.write(kIo, plain_depart(s));
    ts_.left(kIo);
    arrive_horizontal_left();
  }

  void mul_b(Sym s) {
    if (s == Sym::d0c || s == Sym::d1c || s == Sym::d0b || s == Sym::d1b) {
      require_top(Sym::lparen);
      note("anchorD");
      ts_.write(kIo, d_depart(s));
      ts_.right(kIo);
      arrive_vertical_up();
      return;
    }
    if (s == Sym::e0c || s == Sym::e1c) {
      require_top(Sym::lbrack);
      note("anchorE");
      ts_.write(kIo, s == Sym::e0c ? Sym::e0 : Sym::e1);
      skip_to_group_end();
      ts_.right(kIo);
      arrive_vertical_up();
      return;
    }
    const Sym p = ts_.read(kStack);
    if (p == Sym::lparen) {
      if (s == Sym::c0) {
        ts_.left(kIo);
        const Sym t = ts_.read(kIo);
        ts_.right(kIo);
        if (t == Sym::lparen) {
          if (collapse_forward(d_class_plain_to_c, Sym::rparen)) return;
          note("trimLead");
          detail::erase_here(ts_, kIo, 1);
          arrive_vertical_up();
          return;
        }
      }
      note("plain");
      ts_.write(kIo, plain_depart(s));
      ts_.right(kIo);
      arrive_vertical_up();
      return;
    }
    if (p != Sym::lbrack && p != Sym::start) throw Halt{};
    note("sprout");
    ts_.write(kIo, Sym::lparen);
    ts_.right(kIo);
    detail::insert_here(ts_, kIo, {sprout_anchor(s), Sym::c0, Sym::rparen});
  }

  void mul_b_inv(Sym s) {
    if (s == Sym::d0c || s == Sym::d1c || s == Sym::d0b || s == Sym::d1b) {
      require_top(Sym::lparen);
      note("anchorD");
      ts_.write(kIo, d_depart(s));
      ts_.left(kIo);
      arrive_vertical_down();
      return;
    }
    if (s == Sym::e0c || s == Sym::e1c) {
      require_top(Sym::lbrack);
      note("anchorE");
      ts_.write(kIo, s == Sym::e0c ? Sym::e0 : Sym::e1);
      back_to_group_start();
      ts_.left(kIo);
      arrive_vertical_down();
      return;
    }
    const Sym p = ts_.read(kStack);
    if (p == Sym::lparen) {
      if (s == Sym::c0) {
        ts_.right(kIo);
        const Sym n = ts_.read(kIo);
        ts_.left(kIo);
        if (n == Sym::rparen) {
          if (collapse_backward(d_class_plain_to_c, Sym::lparen)) return;
          note("trimTrail");
          detail::erase_here(ts_, kIo, 1);
          ts_.left(kIo);
          arrive_vertical_down();
          return;
        }
      }
      note("plain");
      ts_.write(kIo, plain_depart(s));
      ts_.left(kIo);
      arrive_vertical_down();
      return;
    }
    if (p != Sym::lbrack && p != Sym::start) throw Halt{};
    note("sprout");
    ts_.write(kIo, Sym::lparen);
    ts_.right(kIo);
    detail::insert_here(ts_, kIo, {Sym::c0, sprout_anchor(s), Sym::rparen});
  }

 private:
  void note(const char* what) {
    if (!branch_.empty()) branch_ += '>';
    branch_ += what;
  }

  // Bracket bookkeeping for one scanned symbol.
  void track(Sym s) {
    if (is_opener(s)) {
      ts_.right(kStack);
      ts_.write(kStack, s);
    } else if (is_closer(s)) {
      if (unmarked(ts_.read(kStack)) != partner(s)) throw Halt{};
      ts_.write(kStack, Sym::blank);
      ts_.left(kStack);
    }
  }

  void require_top(Sym open) {
    if (ts_.read(kStack) != open) throw Halt{};
  }

  // The horizontal C/B token becomes the anchor of a new '(' group.
  static Sym sprout_anchor(Sym s) {
    switch (s) {
      case Sym::c0: return Sym::d0;
      case Sym::c1: return Sym::d1;
      case Sym::b0: return Sym::d0a;
      case Sym::b1: return Sym::d1a;
      default: throw Halt{};
    }
  }

  static Sym e_class_plain_to_c(Sym q) {
    if (q == Sym::e0) return Sym::c0;
    if (q == Sym::e1) return Sym::c1;
    return Sym::blank;
  }
  static Sym d_class_plain_to_c(Sym q) {
    switch (q) {
      case Sym::d0: return Sym::c0;
      case Sym::d1: return Sym::c1;
      case Sym::d0a: return Sym::b0;
      case Sym::d1a: return Sym::b1;
      default: return Sym::blank;
    }
  }

  // Head on a C0 directly after an opening bracket. If the group reads
  // "<open> C0 Q close_expected", it collapses to the single token to_c(Q).
  template <class ToC>
  bool collapse_forward(ToC to_c, Sym close_expected) {
    ts_.right(kIo);
    const Sym q = ts_.read(kIo);
    ts_.right(kIo);
    const Sym close = ts_.read(kIo);
    ts_.left(kIo);
    ts_.left(kIo);
    const Sym c = to_c(q);
    if (c == Sym::blank || close != close_expected) return false;
    note("collapse");
    ts_.left(kIo);
    ts_.write(kIo, c);
    ts_.right(kIo);
    detail::erase_here(ts_, kIo, 3);
    return true;
  }

  // Head on a C0 directly before a closing bracket. If the group reads
  // "open Q C0 <close>", it collapses to to_c(Q).
  template <class ToC>
  bool collapse_backward(ToC to_c, Sym open) {
    ts_.left(kIo);
    const Sym q = ts_.read(kIo);
    ts_.left(kIo);
    const Sym o = ts_.read(kIo);
    const Sym c = to_c(q);
    if (c == Sym::blank || o != open) {
      ts_.right(kIo);
      ts_.right(kIo);
      return false;
    }
    note("collapse");
    ts_.write(kIo, c);
    ts_.right(kIo);
    detail::erase_here(ts_, kIo, 3);
    return true;
  }

  // Head on an anchor whose group opener is the stack top; moves to the
  // group's closing bracket and pops the opener.
  void skip_to_group_end() {
    ts_.write(kStack, marked(ts_.read(kStack)));
    for (;;) {
      ts_.right(kIo);
      const Sym s = ts_.read(kIo);
      if (s == Sym::blank) throw Halt{};
      if (is_closer(s)) {
        const Sym top = ts_.read(kStack);
        if (unmarked(top) != partner(s)) throw Halt{};
        ts_.write(kStack, Sym::blank);
        ts_.left(kStack);
        if (is_marked(top)) return;
      } else if (is_opener(s)) {
        ts_.right(kStack);
        ts_.write(kStack, s);
      }
    }
  }

  // Head on an anchor whose group opener is the stack top; moves left to the
  // opening bracket and pops it. Closers met on the way are pushed.
  void back_to_group_start() {
    ts_.write(kStack, marked(ts_.read(kStack)));
    for (;;) {
      ts_.left(kIo);
      const Sym s = ts_.read(kIo);
      if (s == Sym::start) throw Halt{};
      if (is_opener(s)) {
        const Sym top = ts_.read(kStack);
        if (unmarked(top) == s && is_marked(top)) {
          ts_.write(kStack, Sym::blank);
          ts_.left(kStack);
          return;
        }
        if (top != partner(s)) throw Halt{};
        ts_.write(kStack, Sym::blank);
        ts_.left(kStack);
      } else if (is_closer(s)) {
        ts_.right(kStack);
        ts_.write(kStack, s);
      }
    }
  }

  // Head on an opening bracket; returns with the head on the group's anchor.
  Sym find_anchor_forward() {
    const Sym open = ts_.read(kIo);
    const bool paren = open == Sym::lparen;
    ts_.right(kStack);
    ts_.write(kStack, marked(open));
    for (;;) {
      ts_.right(kIo);
      const Sym s = ts_.read(kIo);
      if (s == Sym::blank) throw Halt{};
      const Sym top = ts_.read(kStack);
      if (is_marked(top) && (paren ? is_d_class(s) : is_e_class(s))) return s;
      if (is_opener(s)) {
        ts_.right(kStack);
        ts_.write(kStack, s);
      } else if (is_closer(s)) {
        if (is_marked(top) || top != partner(s)) throw Halt{};
        ts_.write(kStack, Sym::blank);
        ts_.left(kStack);
      }
    }
  }

  // Head on a closing bracket; returns with the head on the group's anchor.
  Sym find_anchor_backward() {
    const Sym close = ts_.read(kIo);
    const bool paren = close == Sym::rparen;
    ts_.right(kStack);
    ts_.write(kStack, marked(close));
    for (;;) {
      ts_.left(kIo);
      const Sym s = ts_.read(kIo);
      if (s == Sym::start) throw Halt{};
      const Sym top = ts_.read(kStack);
      if (is_marked(top) && (paren ? is_d_class(s) : is_e_class(s))) return s;
      if (is_closer(s)) {
        ts_.right(kStack);
        ts_.write(kStack, s);
      } else if (is_opener(s)) {
        if (is_marked(top) || top != partner(s)) throw Halt{};
        ts_.write(kStack, Sym::blank);
        ts_.left(kStack);
      }
    }
  }

  // The lamplighter enters the a-line position under the head from the left.
  void arrive_horizontal_right() {
    const Sym s = ts_.read(kIo);
    switch (s) {
      case Sym::zero: case Sym::one:
        note("toPlain");
        ts_.write(kIo, s == Sym::one ? Sym::c1 : Sym::c0);
        return;
      case Sym::a0: case Sym::a1:
        note("toIdentity");
        ts_.write(kIo, s == Sym::a1 ? Sym::b1 : Sym::b0);
        return;
      case Sym::e0: case Sym::e1:
        note("toAnchorE");
        ts_.write(kIo, e_arrive(s));
        return;
      case Sym::blank:
        note("extend");
        ts_.write(kIo, Sym::c0);
        return;
      case Sym::lparen:
        note("toAnchorD");
        ts_.write(kIo, d_arrive(find_anchor_forward()));
        return;
      case Sym::rbrack:
        note("extend");
        detail::insert_here(ts_, kIo, {Sym::c0});
        return;
      default: throw Halt{};
    }
  }

  // The lamplighter enters the a-line position under the head from the right.
  void arrive_horizontal_left() {
    const Sym t = ts_.read(kIo);
    switch (t) {
      case Sym::zero: case Sym::one:
        note("toPlain");
        ts_.write(kIo, t == Sym::one ? Sym::c1 : Sym::c0);
        return;
      case Sym::a0: case Sym::a1:
        note("toIdentity");
        ts_.write(kIo, t == Sym::a1 ? Sym::b1 : Sym::b0);
        return;
      case Sym::e0: case Sym::e1:
        note("toAnchorE");
        ts_.write(kIo, e_arrive(t));
        return;
      case Sym::start: case Sym::lbrack:
        note("extend");
        ts_.right(kIo);
        detail::insert_here(ts_, kIo, {Sym::c0});
        return;
      case Sym::rparen:
        note("toAnchorD");
        ts_.write(kIo, d_arrive(find_anchor_backward()));
        return;
      default: throw Halt{};
    }
  }

  // The lamplighter enters the b-line position under the head from below.
  void arrive_vertical_up() {
    const Sym s = ts_.read(kIo);
    switch (s) {
      case Sym::zero: case Sym::one:
        note("toPlain");
        ts_.write(kIo, s == Sym::one ? Sym::c1 : Sym::c0);
        return;
      case Sym::d0: case Sym::d1: case Sym::d0a: case Sym::d1a:
        note("toAnchorD");
        ts_.write(kIo, d_arrive(s));
        return;
      case Sym::lbrack:
        note("toAnchorE");
        ts_.write(kIo, e_arrive(find_anchor_forward()));
        return;
      case Sym::rparen:
        note("extend");
        detail::insert_here(ts_, kIo, {Sym::c0});
        return;
      default: throw Halt{};
    }
  }

  // The lamplighter enters the b-line position under the head from above.
  void arrive_vertical_down() {
    const Sym t = ts_.read(kIo);
    switch (t) {
      case Sym::zero: case Sym::one:
        note("toPlain");
        ts_.write(kIo, t == Sym::one ? Sym::c1 : Sym::c0);
        return;
      case Sym::d0: case Sym::d1: case Sym::d0a: case Sym::d1a:
        note("toAnchorD");
        ts_.write(kIo, d_arrive(t));
        return;
      case Sym::rbrack:
        note("toAnchorE");
        ts_.write(kIo, e_arrive(find_anchor_backward()));
        return;
      case Sym::lparen:
        note("extend");
        ts_.right(kIo);
        detail::insert_here(ts_, kIo, {Sym::c0});
        return;
      default: throw Halt{};
    }
  }

  TapeSet& ts_;
  std::string& branch_;
};

void toggle_program(TapeSet& ts) {
  for (;;) {
    ts.right(kIo);
    const Sym s = ts.read(kIo);
    if (s == Sym::blank) return;
    if (marks_lamplighter(s)) {
      ts.write(kIo, toggled(s));
      return;
    }
  }
}

}  // namespace

TapeRun z2f2_apply(const Word& nf, Gen g, std::ostream* trace) {
  TapeRun run;
  if (g == Gen::c) {
    TapeSet ts(nf, 1);
    ts.set_trace(trace);
    toggle_program(ts);
    run.output = read_output(ts, z2f2_alphabet());
    run.steps = ts.steps();
    run.branch = "c";
    return run;
  }
  if (g != Gen::a && g != Gen::a_inv && g != Gen::b && g != Gen::b_inv)
    throw BadWord("generator " + std::string(gen_name(g)) + " is not in Z2 wr F2");
  TapeSet ts(nf, 2);
  ts.set_trace(trace);
  Z2F2Machine m(ts, run.branch);
  try {
    const Sym s = m.locate();
    switch (g) {
      case Gen::a: m.mul_a(s); break;
      case Gen::a_inv: m.mul_a_inv(s); break;
      case Gen::b: m.mul_b(s); break;
      default: m.mul_b_inv(s); break;
    }
  } catch (const Halt&) {
    run.branch = "halt";
  }
  run.output = read_output(ts, z2f2_alphabet());
  run.steps = ts.steps();
  return run;
}

}  // namespace cayley

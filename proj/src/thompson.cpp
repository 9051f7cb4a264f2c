#include "cayley/thompson.hpp"

#include <algorithm>
#include <functional>

#include "cayley/errors.hpp"
#include "tape_ops.hpp"

namespace cayley {

namespace {

constexpr std::size_t kIo = 0;
constexpr std::size_t kAux = 1;
// Tracks of the auxiliary tape.
constexpr unsigned kRTrack = 0;     // b^R
constexpr unsigned kMTrack = 1;     // #^M
constexpr unsigned kCopyTrack = 2;  // stored copy of the input of x1

class FMachine {
 public:
  FMachine(TapeSet& ts, FMutation mut) : ts_(ts), mut_(mut) {}

  // Finite-automaton membership test for the normal-form language; leaves
  // the head of tape 0 on the start marker.
  bool in_language() {
    bool nonempty = false, has_a = false, has_b = false, need_next = false, ok = true;
    for (;;) {
      ts_.right(kIo);
      const Sym s = ts_.read(kIo);
      if (s == Sym::a) {
        if (has_b) ok = false;
        has_a = true;
      } else if (s == Sym::b) {
        has_b = true;
      } else if (s == Sym::hash) {
        if (need_next && !has_a && !has_b) ok = false;
        need_next = has_a && has_b;
        has_a = has_b = false;
      } else if (s == Sym::blank) {
        if (nonempty && has_a == has_b) ok = false;
        break;
      } else {
        ok = false;
        break;
      }
      nonempty = true;
      if (!ok) break;
    }
    rewind(kIo);
    return ok;
  }

  void require_language() {
    if (!in_language()) throw NotInLanguage("not a normal form of F");
  }

  RResult compute_R() {
    rewind(kIo);
    rewind(kAux);
    // Stage 1: the leading 1 of R.
    ts_.right(kIo);
    ts_.right(kAux);
    ts_.write(kAux, Sym::b, kRTrack);
    // Stage 2: b pushes, # pops, until the input ends or the stack empties.
    bool stop1 = false;
    for (;;) {
      const Sym s = ts_.read(kIo);
      if (s == Sym::blank) {
        stop1 = true;
        break;
      }
      if (ts_.read(kAux, kRTrack) == Sym::start) break;
      if (s == Sym::b) {
        ts_.right(kAux);
        ts_.write(kAux, Sym::b, kRTrack);
      } else if (s == Sym::hash) {
        ts_.write(kAux, Sym::blank, kRTrack);
        ts_.left(kAux);
      }
      ts_.right(kIo);
    }
    // Stage 3: CASE holds unless another b follows.
    bool case_flag = true;
    if (!stop1) {
      for (;;) {
        const Sym s = ts_.read(kIo);
        if (s == Sym::blank) break;
        if (s == Sym::b) {
          case_flag = false;
          break;
        }
        ts_.right(kIo);
      }
    }
    // Stage 4: clear the stack.
    while (ts_.read(kAux, kRTrack) != Sym::start) {
      ts_.write(kAux, Sym::blank, kRTrack);
      ts_.left(kAux);
    }
    // Stage 5: count b's leftwards, plus one for the leading term when CASE.
    std::uint64_t r = 0;
    if (case_flag) {
      ts_.right(kAux);
      ts_.write(kAux, Sym::b, kRTrack);
      ++r;
      ts_.left(kIo);
    }
    for (;;) {
      const Sym s = ts_.read(kIo);
      if (s == Sym::start) break;
      if (s == Sym::b) {
        ts_.right(kAux);
        ts_.write(kAux, Sym::b, kRTrack);
        ++r;
      }
      ts_.left(kIo);
    }
    rewind(kAux);
    return {r, case_flag};
  }

  // Right multiplication by x1^-1 of the normal form on tape 0, tracks of
  // tape 1 clear. Returns the case label.
  std::string x1_inv_core() {
    rewind(kIo);
    rewind(kAux);
    const bool case2 = s0_positive();
    bool case_flag = true;
    if (case2) {
      case_flag = compute_R().case_flag;
    } else {
      ts_.right(kAux);
      ts_.write(kAux, Sym::b, kRTrack);
      ts_.left(kAux);
    }
    auto pick = [&](const char* c1, const char* c21, const char* c22) -> std::string {
      const char* label = !case2 ? c1 : case_flag ? c21 : c22;
      if (label == nullptr) throw NoCaseMatched("x1^-1 reached an impossible branch");
      return label;
    };
    if (!seek_hash(0, true)) {
      // R > M: append #^{R-M} b.
      const std::string label = pick("1.1", "2.1a", nullptr);
      for (;;) {
        ts_.right(kAux);
        if (ts_.read(kAux, kRTrack) != Sym::b) break;
        ts_.write(kIo, Sym::hash);
        ts_.right(kIo);
      }
      ts_.write(kIo, Sym::b);
      return label;
    }
    // Head on the R-th #; scan block R.
    ts_.right(kIo);
    bool has_a = false, has_b = false;
    Sym end;
    for (;;) {
      end = ts_.read(kIo);
      if (end == Sym::a) has_a = true;
      else if (end == Sym::b) has_b = true;
      else break;
      ts_.right(kIo);
    }
    if (has_b) {
      const std::string label = pick("1.2", nullptr, "2.2.2a");
      put_b_here(end);
      return label;
    }
    if (!has_a) {
      const std::string label = pick("1.2", "2.1c1", "2.2.2c");
      put_b_here(end);
      return label;
    }
    if (end == Sym::blank) {
      // R = M: drop the last a, and the trailing #'s if the block empties.
      ts_.left(kIo);
      ts_.left(kIo);
      const bool single = ts_.read(kIo) != Sym::a;
      ts_.right(kIo);
      ts_.write(kIo, Sym::blank);
      if (single) {
        ts_.left(kIo);
        while (ts_.read(kIo) == Sym::hash) {
          ts_.write(kIo, Sym::blank);
          ts_.left(kIo);
        }
      }
      return pick(single ? "1.3b" : "1.3a", "2.1b", nullptr);
    }
    ts_.right(kIo);
    const bool next_empty = ts_.read(kIo) == Sym::hash;
    ts_.left(kIo);
    if (!next_empty) {
      std::string label = pick("1.2", "2.1c2", "2.2.2b");
      if (!(mut_.drop_case_2_2_2b && label == "2.2.2b")) {
        detail::insert_here(ts_, kIo, {Sym::b});
        return label;
      }
    }
    // Block R+1 is empty: x_R^{r} x_R^{-1} cancels one power and the
    // indices above R drop by one.
    ts_.left(kIo);
    detail::erase_here(ts_, kIo, 2);
    return pick("1.3c", "2.1c3", "2.2.1");
  }

  std::string x1_inv() {
    require_language();
    return x1_inv_core();
  }

  std::string x0_inv() {
    require_language();
    ts_.right(kIo);
    bool r0 = false;
    while (ts_.read(kIo) == Sym::a) {
      r0 = true;
      ts_.right(kIo);
    }
    Sym s = ts_.read(kIo);
    if (s == Sym::b) {
      while (s == Sym::b) {
        ts_.right(kIo);
        s = ts_.read(kIo);
      }
      put_b_here(s);
      return "s0>0";
    }
    if (s == Sym::blank) {
      if (!r0) {
        ts_.write(kIo, Sym::b);
        return "identity";
      }
      ts_.left(kIo);
      ts_.write(kIo, Sym::blank);
      return "power";
    }
    if (r0) {
      ts_.right(kIo);
      const bool block1_empty = ts_.read(kIo) == Sym::hash;
      ts_.left(kIo);
      if (block1_empty) {
        // x0^{r0} eta x0^-1 = x0^{r0-1} eta' with every index of eta lowered.
        ts_.left(kIo);
        detail::erase_here(ts_, kIo, 2);
        return "shift";
      }
    }
    put_b_here(s);
    return "s0=0";
  }

  std::string x0() {
    require_language();
    ts_.right(kIo);
    while (ts_.read(kIo) == Sym::a) ts_.right(kIo);
    const Sym s = ts_.read(kIo);
    if (s == Sym::b) {
      detail::erase_here(ts_, kIo, 1);
      return "s0>0";
    }
    if (s == Sym::blank) {
      ts_.write(kIo, Sym::a);
      return "power";
    }
    // x0^{r0} eta x0 = x0^{r0+1} eta' with every index of eta raised.
    detail::insert_here(ts_, kIo, {Sym::a, Sym::hash});
    return "shift";
  }

  // Guess and check: each candidate rebuilds u from v by undoing one case
  // of x1^-1; u is accepted when it is a normal form, x1^-1 maps it back to
  // v, and the case it takes is one the candidate undoes.
  std::string x1() {
    require_language();
    copy_input();
    struct Candidate {
      std::vector<std::string> cases;
      std::function<bool()> undo;
    };
    const std::vector<Candidate> candidates = {
        {{"1.1"}, [&] { return undo_append_hash_b(); }},
        {{"1.2"}, [&] { return with_unit_R([&] { return undo_insert_b_in_block(false); }); }},
        {{"1.3a"}, [&] { return undo_append_a(false); }},
        {{"1.3b"}, [&] { return undo_append_hash_a(); }},
        {{"1.3c"}, [&] { return with_unit_R([&] { return undo_insert_a_hash(); }); }},
        {{"2.1a"}, [&] { return undo_append_hash_b(); }},
        {{"2.1b"}, [&] { return with_R_of_v([&] { return undo_append_a(true); }); }},
        {{"2.1c1", "2.1c2"}, [&] { return undo_last_b(); }},
        {{"2.1c3", "2.2.1"}, [&] { return with_R_of_v([&] { return undo_insert_a_hash(); }); }},
        {{"2.2.2a"}, [&] { return with_R_of_v([&] { return undo_insert_b_in_block(false); }); }},
        {{"2.2.2b", "2.2.2c"}, [&] { return with_R_of_v([&] { return undo_insert_b_in_block(true); }); }},
    };
    for (const Candidate& c : candidates) {
      restore_input();
      if (!c.undo()) continue;
      clear_aux(kRTrack, kMTrack);
      if (!in_language()) continue;
      const std::string label = x1_inv_core();
      if (!matches_copy()) continue;
      if (std::find(c.cases.begin(), c.cases.end(), label) == c.cases.end()) continue;
      restore_input();
      clear_aux(kRTrack, kMTrack);
      c.undo();
      return label;
    }
    throw NoCaseMatched("no case of x1^-1 produces this normal form");
  }

 private:
  void rewind(std::size_t t) {
    while (ts_.read(t) != Sym::start) ts_.left(t);
  }

  bool s0_positive() {
    rewind(kIo);
    ts_.right(kIo);
    while (ts_.read(kIo) == Sym::a) ts_.right(kIo);
    const bool yes = ts_.read(kIo) == Sym::b;
    rewind(kIo);
    return yes;
  }

  // Writes b at the end of a block whose terminator is under the head.
  void put_b_here(Sym end) {
    if (end == Sym::blank) ts_.write(kIo, Sym::b);
    else detail::insert_here(ts_, kIo, {Sym::b});
  }

  // Moves tape 0 from the start to the (R + extra)-th #, counting against
  // b^R on tape 1 and recording #^M alongside. On failure tape 0 rests on
  // the first blank and tape 1 on the M-th cell.
  bool seek_hash(int extra, bool record_m) {
    rewind(kIo);
    rewind(kAux);
    for (;;) {
      ts_.right(kIo);
      const Sym s = ts_.read(kIo);
      if (s == Sym::blank) return false;
      if (s != Sym::hash) continue;
      ts_.right(kAux);
      if (record_m) ts_.write(kAux, Sym::hash, kMTrack);
      if (extra == 1) {
        if (ts_.read(kAux, kRTrack) == Sym::blank) return true;
      } else {
        ts_.right(kAux);
        const Sym next = ts_.read(kAux, kRTrack);
        ts_.left(kAux);
        if (next == Sym::blank) return true;
      }
    }
  }

  void clear_aux(unsigned t1, unsigned t2) {
    rewind(kAux);
    for (;;) {
      ts_.right(kAux);
      const bool x = ts_.read(kAux, t1) != Sym::blank;
      const bool y = ts_.read(kAux, t2) != Sym::blank;
      if (!x && !y) break;
      if (x) ts_.write(kAux, Sym::blank, t1);
      if (y) ts_.write(kAux, Sym::blank, t2);
    }
    rewind(kAux);
  }

  void copy_input() {
    rewind(kIo);
    rewind(kAux);
    for (;;) {
      ts_.right(kIo);
      ts_.right(kAux);
      const Sym s = ts_.read(kIo);
      if (s == Sym::blank) break;
      ts_.write(kAux, s, kCopyTrack);
    }
    rewind(kIo);
    rewind(kAux);
  }

  void restore_input() {
    rewind(kIo);
    rewind(kAux);
    for (;;) {
      ts_.right(kIo);
      ts_.right(kAux);
      const Sym want = ts_.read(kAux, kCopyTrack);
      const Sym have = ts_.read(kIo);
      if (want == Sym::blank && have == Sym::blank) break;
      if (want != have) ts_.write(kIo, want);
    }
    rewind(kIo);
    rewind(kAux);
  }

  bool matches_copy() {
    rewind(kIo);
    rewind(kAux);
    bool same = true;
    for (;;) {
      ts_.right(kIo);
      ts_.right(kAux);
      const Sym want = ts_.read(kAux, kCopyTrack);
      const Sym have = ts_.read(kIo);
      if (want != have) {
        same = false;
        break;
      }
      if (want == Sym::blank) break;
    }
    rewind(kIo);
    rewind(kAux);
    return same;
  }

  // Leaves the head of tape 0 on the last symbol; false on empty input.
  bool to_last() {
    rewind(kIo);
    ts_.right(kIo);
    if (ts_.read(kIo) == Sym::blank) return false;
    while (ts_.read(kIo) != Sym::blank) ts_.right(kIo);
    ts_.left(kIo);
    return true;
  }

  // Leaves the head of tape 0 on the first blank.
  void to_end() {
    rewind(kIo);
    ts_.right(kIo);
    while (ts_.read(kIo) != Sym::blank) ts_.right(kIo);
  }

  bool with_unit_R(const std::function<bool()>& body) {
    clear_aux(kRTrack, kMTrack);
    ts_.right(kAux);
    ts_.write(kAux, Sym::b, kRTrack);
    rewind(kAux);
    return body();
  }

  bool with_R_of_v(const std::function<bool()>& body) {
    clear_aux(kRTrack, kMTrack);
    if (!s0_positive()) return false;
    compute_R();
    return body();
  }

  // Inverse of appending #^k b: drop the final b and the #'s before it.
  bool undo_append_hash_b() {
    if (!to_last() || ts_.read(kIo) != Sym::b) return false;
    ts_.write(kIo, Sym::blank);
    ts_.left(kIo);
    if (ts_.read(kIo) != Sym::hash) return false;
    while (ts_.read(kIo) == Sym::hash) {
      ts_.write(kIo, Sym::blank);
      ts_.left(kIo);
    }
    return true;
  }

  // Inverse of dropping the last a. With pad, first restores the #'s that
  // bring the number of #'s up to R.
  bool undo_append_a(bool pad) {
    if (!pad) {
      to_end();
      ts_.write(kIo, Sym::a);
      return true;
    }
    if (seek_hash(1, false)) return false;  // R < M'
    for (;;) {
      ts_.right(kAux);
      if (ts_.read(kAux, kRTrack) != Sym::b) break;
      ts_.write(kIo, Sym::hash);
      ts_.right(kIo);
    }
    ts_.write(kIo, Sym::a);
    return true;
  }

  bool undo_append_hash_a() {
    to_end();
    ts_.write(kIo, Sym::hash);
    ts_.right(kIo);
    ts_.write(kIo, Sym::a);
    return true;
  }

  // Inverse of deleting "a#" before the (R+1)-th #.
  bool undo_insert_a_hash() {
    if (!seek_hash(1, false)) return false;
    detail::insert_here(ts_, kIo, {Sym::a, Sym::hash});
    return true;
  }

  // Removes one b from block R: the first one (at_end false) or the one
  // directly before the (R+1)-th # (at_end true).
  bool undo_insert_b_in_block(bool at_end) {
    if (at_end) {
      if (!seek_hash(1, false)) return false;
      ts_.left(kIo);
      if (ts_.read(kIo) != Sym::b) return false;
      detail::erase_here(ts_, kIo, 1);
      return true;
    }
    if (!seek_hash(0, false)) return false;
    for (;;) {
      ts_.right(kIo);
      const Sym s = ts_.read(kIo);
      if (s == Sym::b) break;
      if (s != Sym::a) return false;
    }
    detail::erase_here(ts_, kIo, 1);
    return true;
  }

  bool undo_last_b() {
    if (!to_last()) return false;
    while (ts_.read(kIo) != Sym::b) {
      if (ts_.read(kIo) == Sym::start) return false;
      ts_.left(kIo);
    }
    detail::erase_here(ts_, kIo, 1);
    return true;
  }

  TapeSet& ts_;
  FMutation mut_;
};

}  // namespace

const std::vector<std::string>& f_x1_inv_cases() {
  static const std::vector<std::string> cases = {"1.1",   "1.2",   "1.3a",  "1.3b",  "1.3c",
                                                 "2.1a",  "2.1b",  "2.1c1", "2.1c2", "2.1c3",
                                                 "2.2.1", "2.2.2a", "2.2.2b", "2.2.2c"};
  return cases;
}

RResult f_compute_R(const Word& u) {
  // The subroutine only needs the a/b/# shape and a b in block 0.
  auto first = std::find_if(u.begin(), u.end(), [](Sym s) { return s != Sym::a; });
  if (first == u.end() || *first != Sym::b) throw InvalidInput("R is defined only when s0 > 0");
  for (Sym s : u)
    if (!thompson_alphabet().contains(s)) throw InvalidInput("symbol outside {a, b, #}");
  TapeSet ts(u, 2);
  FMachine m(ts, {});
  return m.compute_R();
}

TapeRun f_apply(const Word& u, Gen g, std::ostream* trace, FMutation mut) {
  TapeSet ts(u, 2);
  ts.set_trace(trace);
  FMachine m(ts, mut);
  TapeRun run;
  switch (g) {
    case Gen::x0: run.branch = m.x0(); break;
    case Gen::x0_inv: run.branch = m.x0_inv(); break;
    case Gen::x1: run.branch = m.x1(); break;
    case Gen::x1_inv: run.branch = m.x1_inv(); break;
    default: throw BadWord("generator " + std::string(gen_name(g)) + " is not in F");
  }
  run.output = read_output(ts, thompson_alphabet());
  run.steps = ts.steps();
  return run;
}

}  // namespace cayley

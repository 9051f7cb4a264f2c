#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cayley/errors.hpp"
#include "cayley/symbol.hpp"

namespace cayley {

// Each cell carries a few parallel tracks. A multi-track cell is one symbol
// of a product alphabet, so several tracks on one tape still count as one
// tape (the convolution encoding of auxiliary data).
inline constexpr unsigned kTracks = 4;
using Cell = std::array<Sym, kTracks>;

class Tape {
 public:
  Tape();

  Sym at(std::size_t i, unsigned track = 0) const {
    return i < cells_.size() ? cells_[i][track] : Sym::blank;
  }
  std::size_t head() const { return head_; }
  // Number of cells ever written, including cell 0.
  std::size_t frontier() const { return cells_.size(); }

 private:
  friend class TapeSet;
  void put(std::size_t i, unsigned track, Sym s);

  std::vector<Cell> cells_;
  std::size_t head_ = 0;
};

struct Action {
  enum class Kind : std::uint8_t { read, write, left, right };
  Kind kind = Kind::read;
  Sym sym = Sym::blank;
  unsigned track = 0;

  static Action Read(unsigned track = 0) { return {Kind::read, Sym::blank, track}; }
  static Action Write(Sym s, unsigned track = 0) { return {Kind::write, s, track}; }
  static Action Left() { return {Kind::left, Sym::blank, 0}; }
  static Action Right() { return {Kind::right, Sym::blank, 0}; }
};

// k semi-infinite tapes with a shared step counter. Every primitive costs
// exactly one step; finite control held by the caller is free.
class TapeSet {
 public:
  // Tape 0 receives ⊞·input; the rest hold ⊞ only. Heads start on cell 0.
  TapeSet(std::span<const Sym> input, std::size_t k);

  std::size_t size() const { return tapes_.size(); }
  std::uint64_t steps() const { return steps_; }
  const Tape& tape(std::size_t i) const { return tapes_.at(i); }

  Sym prim(std::size_t t, Action a);

  Sym read(std::size_t t, unsigned track = 0) {
    ++steps_;
    Tape& tp = tapes_[t];
    Sym s = tp.at(tp.head_, track);
    if (trace_) log(t, "read", s, track);
    return s;
  }
  void write(std::size_t t, Sym s, unsigned track = 0) {
    ++steps_;
    Tape& tp = tapes_[t];
    if (tp.head_ == 0) fault(t, "write over the start marker");
    tp.put(tp.head_, track, s);
    if (trace_) log(t, "write", s, track);
  }
  void left(std::size_t t) {
    ++steps_;
    Tape& tp = tapes_[t];
    if (tp.head_ == 0) fault(t, "move left of the start marker");
    --tp.head_;
    if (trace_) log(t, "left", Sym::blank, 0);
  }
  void right(std::size_t t) {
    ++steps_;
    ++tapes_[t].head_;
    if (trace_) log(t, "right", Sym::blank, 0);
  }

  // CSV trace lines `step#,tape#,action,symbol,head`; nullptr disables.
  void set_trace(std::ostream* out) { trace_ = out; }

 private:
  [[noreturn]] void fault(std::size_t t, const char* what) const;
  void log(std::size_t t, const char* action, Sym s, unsigned track) const;

  std::vector<Tape> tapes_;
  std::uint64_t steps_ = 0;
  std::ostream* trace_ = nullptr;
};

inline TapeSet init_tapes(std::span<const Sym> input, std::size_t k) {
  return TapeSet(input, k);
}

// Tape 0 after ⊞ up to, excluding, the first ⊡. Not counted as steps.
// Throws OutputFault if the prefix leaves sigma.
Word read_output(const TapeSet& ts, const Alphabet& sigma);

}  // namespace cayley

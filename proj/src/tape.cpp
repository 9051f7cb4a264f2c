#include "cayley/tape.hpp"

#include <ostream>

namespace cayley {

namespace {

Cell blank_cell() {
  Cell c;
  c.fill(Sym::blank);
  return c;
}

}  // namespace

Tape::Tape() {
  Cell c = blank_cell();
  c.fill(Sym::start);
  cells_.push_back(c);
}

void Tape::put(std::size_t i, unsigned track, Sym s) {
  if (i >= cells_.size()) cells_.resize(i + 1, blank_cell());
  cells_[i][track] = s;
}

TapeSet::TapeSet(std::span<const Sym> input, std::size_t k) {
  if (k == 0) throw std::invalid_argument("a tape set needs at least one tape");
  for (Sym s : input)
    if (s == Sym::start || s == Sym::blank)
      throw InvalidInput("input contains a reserved symbol");
  tapes_.resize(k);
  Tape& t0 = tapes_[0];
  t0.cells_.reserve(input.size() + 8);
  for (std::size_t i = 0; i < input.size(); ++i) t0.put(i + 1, 0, input[i]);
}

Sym TapeSet::prim(std::size_t t, Action a) {
  if (t >= tapes_.size()) throw std::out_of_range("tape index");
  switch (a.kind) {
    case Action::Kind::read: return read(t, a.track);
    case Action::Kind::write: write(t, a.sym, a.track); return a.sym;
    case Action::Kind::left: left(t); break;
    case Action::Kind::right: right(t); break;
  }
  return tapes_[t].at(tapes_[t].head_, 0);
}

void TapeSet::fault(std::size_t t, const char* what) const {
  throw TapeFault(std::string(what) + " on tape " + std::to_string(t) + " at step " +
                  std::to_string(steps_));
}

void TapeSet::log(std::size_t t, const char* action, Sym s, unsigned track) const {
  *trace_ << steps_ << ',' << t << ',' << action;
  if (track != 0) *trace_ << '@' << track;
  *trace_ << ',' << sym_text(s) << ',' << tapes_[t].head_ << '\n';
}

Word read_output(const TapeSet& ts, const Alphabet& sigma) {
  const Tape& t = ts.tape(0);
  Word out;
  for (std::size_t i = 1;; ++i) {
    Sym s = t.at(i);
    if (s == Sym::blank) break;
    if (!sigma.contains(s))
      throw OutputFault("output symbol '" + std::string(sym_text(s)) + "' at cell " +
                        std::to_string(i) + " is outside the alphabet");
    out.push_back(s);
  }
  return out;
}

}  // namespace cayley

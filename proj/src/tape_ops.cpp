#include "tape_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace cayley::detail {

void return_to_mark(TapeSet& ts, std::size_t t, unsigned track) {
  while (ts.read(t, track) != Sym::mark) ts.left(t);
  ts.write(t, Sym::blank, track);
}

void insert_here(TapeSet& ts, std::size_t t, std::initializer_list<Sym> syms) {
  constexpr std::size_t kMax = 4;
  if (syms.size() == 0 || syms.size() > kMax) throw std::invalid_argument("insert size");
  ts.write(t, Sym::mark, kMarkTrack);
  // Rotating buffer of the symbols still to be written.
  std::array<Sym, kMax> buf{};
  const std::size_t k = syms.size();
  std::copy(syms.begin(), syms.end(), buf.begin());
  std::size_t front = 0;
  std::size_t pending_nonblank = k;
  for (;;) {
    Sym x = ts.read(t);
    Sym out = buf[front];
    if (out != Sym::blank) --pending_nonblank;
    ts.write(t, out);
    buf[front] = x;
    if (x != Sym::blank) ++pending_nonblank;
    front = (front + 1) % k;
    if (pending_nonblank == 0) break;
    ts.right(t);
  }
  return_to_mark(ts, t, kMarkTrack);
}

void erase_here(TapeSet& ts, std::size_t t, std::size_t k) {
  if (k == 0) return;
  ts.write(t, Sym::mark, kMarkTrack);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) ts.right(t);
    Sym y = ts.read(t);
    for (std::size_t i = 0; i < k; ++i) ts.left(t);
    ts.write(t, y);
    if (y == Sym::blank) {
      for (std::size_t i = 1; i < k; ++i) {
        ts.right(t);
        ts.write(t, Sym::blank);
      }
      break;
    }
    ts.right(t);
  }
  return_to_mark(ts, t, kMarkTrack);
}

}  // namespace cayley::detail

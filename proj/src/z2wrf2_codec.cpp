#include <array>
#include <optional>

#include "cayley/errors.hpp"
#include "cayley/z2wrf2.hpp"
#include "z2wrf2_tokens.hpp"

namespace cayley {

const Alphabet& z2f2_alphabet() {
  static const Alphabet sigma{Sym::zero, Sym::one, Sym::d0,  Sym::d1,  Sym::e0,  Sym::e1,
                              Sym::lparen, Sym::rparen, Sym::lbrack, Sym::rbrack, Sym::d0a, Sym::d1a,
                              Sym::d0b, Sym::d1b, Sym::d0c, Sym::d1c, Sym::e0c, Sym::e1c,
                              Sym::a0,  Sym::a1,  Sym::b0,  Sym::b1,  Sym::c0,  Sym::c1};
  return sigma;
}

namespace {

using namespace z2f2;

// Prefix trie of the lit points and the lamplighter.
class Trie {
 public:
  struct Node {
    std::array<int, 4> child{-1, -1, -1, -1};  // a, A, b, B
    bool lit = false;
    bool z = false;
  };

  explicit Trie(const LampConfigF2& g) {
    nodes_.emplace_back();
    for (const F2Word& w : g.lit) nodes_[insert(w)].lit = true;
    nodes_[insert(g.pos)].z = true;
  }

  const Node& at(int n) const { return nodes_[static_cast<std::size_t>(n)]; }
  int child(int n, char letter) const { return at(n).child[slot(letter)]; }
  bool has_vertical(int n) const { return child(n, 'b') >= 0 || child(n, 'B') >= 0; }
  bool has_horizontal(int n) const { return child(n, 'a') >= 0 || child(n, 'A') >= 0; }

  // Nodes n·x, n·x^2, ... while they exist in the trie.
  std::vector<int> chain(int n, char letter) const {
    std::vector<int> out;
    for (int c = child(n, letter); c >= 0; c = child(c, letter)) out.push_back(c);
    return out;
  }

 private:
  static std::size_t slot(char c) {
    switch (c) {
      case 'a': return 0;
      case 'A': return 1;
      case 'b': return 2;
      default: return 3;
    }
  }
  int insert(const F2Word& w) {
    int n = 0;
    for (char c : w.letters()) {
      int& next = nodes_[static_cast<std::size_t>(n)].child[slot(c)];
      if (next < 0) {
        next = static_cast<int>(nodes_.size());
        nodes_.emplace_back();  // invalidates `next`; re-read below
        n = nodes_[static_cast<std::size_t>(n)].child[slot(c)];
      } else {
        n = next;
      }
    }
    return n;
  }

  std::vector<Node> nodes_;
};

class Encoder {
 public:
  Encoder(const LampConfigF2& g, int max_iterations) : trie_(g), max_(max_iterations) {}

  Word run() {
    // Top level: the a-line through e, scanned left to right.
    auto neg = trie_.chain(0, 'A');
    auto pos = trie_.chain(0, 'a');
    for (auto it = neg.rbegin(); it != neg.rend(); ++it) horizontal_item(*it, 1);
    horizontal_item(0, 1);
    for (int n : pos) horizontal_item(n, 1);
    return std::move(out_);
  }

 private:
  bool expand(int iteration) const { return max_ == 0 || iteration <= max_; }

  // Position s on an a-line; it is the identity only at the root.
  void horizontal_item(int s, int iteration) {
    const auto& node = trie_.at(s);
    const bool e = s == 0;
    if (trie_.has_vertical(s)) {
      Sym tok = e ? (node.z ? d_b(node.lit) : d_a(node.lit))
                  : (node.z ? d_c(node.lit) : d_plain(node.lit));
      if (!expand(iteration + 1)) {
        out_.push_back(tok);
        return;
      }
      out_.push_back(Sym::lparen);
      auto neg = trie_.chain(s, 'B');
      for (auto it = neg.rbegin(); it != neg.rend(); ++it) vertical_item(*it, iteration + 1);
      out_.push_back(tok);
      for (int n : trie_.chain(s, 'b')) vertical_item(n, iteration + 1);
      out_.push_back(Sym::rparen);
      return;
    }
    if (e)
      out_.push_back(node.z ? (node.lit ? Sym::b1 : Sym::b0) : (node.lit ? Sym::a1 : Sym::a0));
    else
      out_.push_back(plain(node.lit, node.z));
  }

  // Position t on a b-line (never the identity).
  void vertical_item(int t, int iteration) {
    const auto& node = trie_.at(t);
    if (trie_.has_horizontal(t)) {
      Sym tok = node.z ? e_c(node.lit) : e_plain(node.lit);
      if (!expand(iteration + 1)) {
        out_.push_back(tok);
        return;
      }
      out_.push_back(Sym::lbrack);
      auto neg = trie_.chain(t, 'A');
      for (auto it = neg.rbegin(); it != neg.rend(); ++it) horizontal_item(*it, iteration + 1);
      out_.push_back(tok);
      for (int n : trie_.chain(t, 'a')) horizontal_item(n, iteration + 1);
      out_.push_back(Sym::rbrack);
      return;
    }
    out_.push_back(plain(node.lit, node.z));
  }

  Trie trie_;
  int max_;
  Word out_;
};

// ---- decoding ------------------------------------------------------------------

struct Group;

struct Item {
  Sym tok = Sym::zero;  // the pivot token when group >= 0
  int group = -1;
};

struct Group {
  bool paren = true;  // '(' group (vertical) or '[' group (horizontal)
  std::vector<Item> items;
  std::size_t pivot = 0;
};

class Decoder {
 public:
  explicit Decoder(const Word& w) : w_(w) {}

  LampConfigF2 run() {
    std::vector<Item> top;
    while (i_ < w_.size()) {
      Sym s = w_[i_];
      if (s == Sym::lparen) {
        top.push_back(parse_group(true));
      } else if (s == Sym::zero || s == Sym::one || s == Sym::c0 || s == Sym::c1 ||
                 s == Sym::a0 || s == Sym::a1 || s == Sym::b0 || s == Sym::b1) {
        top.push_back({s, -1});
        ++i_;
      } else {
        fail("token " + std::string(sym_text(s)) + " is not allowed at top level");
      }
    }
    std::optional<std::size_t> anchor;
    for (std::size_t k = 0; k < top.size(); ++k) {
      if (is_anchor(top[k].tok)) {
        if (anchor) fail("more than one identity anchor");
        anchor = k;
      }
    }
    if (!anchor) fail("no identity anchor (A/B-class token)");
    for (std::size_t k = 0; k < top.size(); ++k) {
      F2Word s;
      const long off = static_cast<long>(k) - static_cast<long>(*anchor);
      for (long j = 0; j < std::abs(off); ++j) s.mul(off < 0 ? 'A' : 'a');
      place(top[k], s, true);
    }
    if (!have_z_) fail("no lamplighter marker");
    return g_;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw NotInLanguage(why + " (token " + std::to_string(i_) + ")");
  }

  static bool is_anchor(Sym s) {
    return s == Sym::a0 || s == Sym::a1 || s == Sym::b0 || s == Sym::b1 || s == Sym::d0a ||
           s == Sym::d1a || s == Sym::d0b || s == Sym::d1b;
  }

  // Parses a group starting at the opening bracket under i_.
  Item parse_group(bool paren) {
    const Sym close = paren ? Sym::rparen : Sym::rbrack;
    Group grp;
    grp.paren = paren;
    std::optional<std::size_t> pivot;
    ++i_;
    for (;;) {
      if (i_ >= w_.size()) fail("unclosed bracket");
      Sym s = w_[i_];
      if (s == close) {
        ++i_;
        break;
      }
      if (s == Sym::zero || s == Sym::one || s == Sym::c0 || s == Sym::c1) {
        grp.items.push_back({s, -1});
        ++i_;
      } else if (s == (paren ? Sym::lbrack : Sym::lparen)) {
        grp.items.push_back(parse_group(!paren));
      } else if (paren ? is_d_class(s) : is_e_class(s)) {
        if (pivot) fail("group with two pivots");
        pivot = grp.items.size();
        grp.items.push_back({s, -1});
        ++i_;
      } else {
        fail("token " + std::string(sym_text(s)) + " is not allowed inside a " +
             (paren ? "'(' group" : "'[' group"));
      }
    }
    if (!pivot) fail("group without pivot");
    grp.pivot = *pivot;
    const Sym tok = grp.items[*pivot].tok;
    groups_.push_back(std::move(grp));
    return {tok, static_cast<int>(groups_.size()) - 1};
  }

  void record(Sym tok, const F2Word& s) {
    if (lamp_of(tok)) g_.lit.insert(s);
    if (marks_lamplighter(tok)) {
      if (have_z_) fail("more than one lamplighter marker");
      have_z_ = true;
      g_.pos = s;
    }
  }

  void place(const Item& it, const F2Word& s, bool top_level) {
    if (!top_level && is_anchor(it.tok)) fail("identity anchor inside a nested group");
    record(it.tok, s);
    if (it.group < 0) return;
    const Group& grp = groups_[static_cast<std::size_t>(it.group)];
    const char up = grp.paren ? 'b' : 'a';
    const char down = grp.paren ? 'B' : 'A';
    for (std::size_t k = 0; k < grp.items.size(); ++k) {
      if (k == grp.pivot) continue;
      F2Word t = s;
      const long off = static_cast<long>(k) - static_cast<long>(grp.pivot);
      for (long j = 0; j < std::abs(off); ++j) t.mul(off < 0 ? down : up);
      place(grp.items[k], t, false);
    }
  }

  const Word& w_;
  std::size_t i_ = 0;
  std::vector<Group> groups_;
  LampConfigF2 g_;
  bool have_z_ = false;
};

}  // namespace

Word z2f2_encode(const LampConfigF2& g, int max_iterations) {
  return Encoder(g, max_iterations).run();
}

LampConfigF2 z2f2_decode(const Word& nf) {
  LampConfigF2 g = Decoder(nf).run();
  const Word again = z2f2_encode(g);
  if (again != nf) throw NotInLanguage("not canonical: the element's normal form is " + render(again));
  return g;
}

void z2f2_validate(const Word& nf) { z2f2_decode(nf); }

}  // namespace cayley

#pragma once

// Positive Boolean transition formulas over (move, state) atoms, with
// minimal-satisfying-set enumeration.

#include <cstdint>
#include <string>
#include <vector>

namespace btl {

enum class MoveKind : std::uint8_t {
  Child,      // explicit child index (nonsymmetric), 1-based
  SomeChild,  // diamond
  EveryChild, // box
  Parent,     // -1
  Stay,       // 0
  Root        // root self-loop, only applicable at the root
};

struct Move {
  MoveKind kind = MoveKind::Stay;
  std::uint32_t child = 0;  // for Child

  friend bool operator==(const Move& a, const Move& b) {
    return a.kind == b.kind && a.child == b.child;
  }
  friend bool operator<(const Move& a, const Move& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.child < b.child;
  }
};

struct BAtom {
  Move move;
  std::uint32_t state = 0;

  friend bool operator==(const BAtom& a, const BAtom& b) {
    return a.move == b.move && a.state == b.state;
  }
  friend bool operator<(const BAtom& a, const BAtom& b) {
    if (!(a.move == b.move)) return a.move < b.move;
    return a.state < b.state;
  }
};

using BId = std::uint32_t;

enum class BKind : std::uint8_t { True, False, And, Or, Atom };

struct BNode {
  BKind kind;
  BId a = 0, b = 0;
  BAtom atom;
};

// Interning pool with constant folding (And/Or absorb True/False).
class BPool {
public:
  BPool() {
    true_ = add({BKind::True, 0, 0, {}});
    false_ = add({BKind::False, 0, 0, {}});
  }
  BId mk_true() const { return true_; }
  BId mk_false() const { return false_; }
  BId mk_atom(Move m, std::uint32_t state) { return add({BKind::Atom, 0, 0, {m, state}}); }
  BId mk_and(BId a, BId b) {
    if (a == false_ || b == false_) return false_;
    if (a == true_) return b;
    if (b == true_) return a;
    return add({BKind::And, a, b, {}});
  }
  BId mk_or(BId a, BId b) {
    if (a == true_ || b == true_) return true_;
    if (a == false_) return b;
    if (b == false_) return a;
    return add({BKind::Or, a, b, {}});
  }
  const BNode& node(BId id) const { return nodes_[id]; }
  std::size_t size() const { return nodes_.size(); }

private:
  BId add(BNode n) {
    nodes_.push_back(n);
    return static_cast<BId>(nodes_.size() - 1);
  }
  std::vector<BNode> nodes_;
  BId true_, false_;
};

// Exactly the subset-minimal satisfying sets, deduplicated, canonically
// ordered.  True yields { {} }; False yields {}.
std::vector<std::vector<BAtom>> satisfying_sets(const BPool& pool, BId f);

// All atoms occurring in the formula.
std::vector<BAtom> atoms_of(const BPool& pool, BId f);

// S-expression rendering, e.g. (or (atom some-child q1) (and ...)).
std::string to_sexpr(const BPool& pool, BId f,
                     const std::vector<std::string>& state_names);

}  // namespace btl

#pragma once

// ============================================================================
// formula.hpp — state/path formula AST with hash-consing
// ============================================================================
//
// Core constructors mirror the branching-time grammar
//
//   state:  true | p | f & f | !f | E psi | N f
//   path:   f | psi & psi | psi | psi | !psi | X f | f U f | Finf f | Y f | f S f
//
// plus a path-level disjunction node.  The disjunction is needed because
// duals switch & and |, and the normal form keeps Boolean path combinations
// in negation normal form; neither is representable with & and ! alone.
//
// The arena interns every node, so structural equality is id equality and
// formula sets are integer sets.  A few canonicalizations are applied at
// construction time (they are all semantic identities):
//
//   !!f = f                      N commutes with !:  !N f = N !f
//   path !! , De Morgan over path &/| (path formulas are NNF at the
//   Boolean level by construction; ! survives only on temporal atoms)
//   !(state embed) = embed of !  E(state embed) = embed
//   E !Y f = !E Y f,  E !(f S g) = !E(f S g)   (past formulas are
//   path-independent, so path negation commutes with E)
//   path combinations whose operands are all state embeds collapse to a
//   state-level combination.
//
// ============================================================================

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace btl {

using StateId = std::uint32_t;
using PathId = std::uint32_t;

enum class StateKind : std::uint8_t { True, Prop, And, Not, Exists, Now };
enum class PathKind : std::uint8_t {
  State,      // embedded state formula
  PAnd,
  POr,
  PNot,       // only over temporal atoms after canonicalization
  Next,       // X f
  Until,      // f U g
  InfOften,   // Finf f
  Yesterday,  // Y f
  Since       // f S g
};

struct StateNode {
  StateKind kind;
  // And: a,b state ids. Not/Now: a state id. Exists: a path id. Prop: a prop index.
  std::uint32_t a = 0;
  std::uint32_t b = 0;
};

struct PathNode {
  PathKind kind;
  // State: a state id. PAnd/POr/PNot: path ids. Next/InfOften/Yesterday: a state id.
  // Until/Since: a,b state ids.
  std::uint32_t a = 0;
  std::uint32_t b = 0;
};

class parse_error : public std::runtime_error {
public:
  parse_error(std::string msg, std::size_t pos)
      : std::runtime_error(std::move(msg)), position(pos) {}
  std::size_t position;
};

class FormulaArena {
public:
  FormulaArena() { true_id_ = intern_state({StateKind::True, 0, 0}); }

  // -- proposition table -----------------------------------------------------
  std::uint32_t prop_index(std::string_view name) {
    auto it = prop_lookup_.find(std::string(name));
    if (it != prop_lookup_.end()) return it->second;
    std::uint32_t idx = static_cast<std::uint32_t>(prop_names_.size());
    prop_names_.emplace_back(name);
    prop_lookup_.emplace(prop_names_.back(), idx);
    return idx;
  }
  bool has_prop(std::string_view name) const {
    return prop_lookup_.count(std::string(name)) != 0;
  }
  const std::string& prop_name(std::uint32_t idx) const { return prop_names_.at(idx); }
  std::size_t prop_count() const { return prop_names_.size(); }

  // -- state constructors ----------------------------------------------------
  StateId mk_true() const { return true_id_; }
  StateId mk_false() { return mk_not(true_id_); }

  StateId mk_prop(std::string_view name) {
    return intern_state({StateKind::Prop, prop_index(name), 0});
  }
  StateId mk_prop_idx(std::uint32_t idx) { return intern_state({StateKind::Prop, idx, 0}); }

  StateId mk_and(StateId a, StateId b) { return intern_state({StateKind::And, a, b}); }

  StateId mk_not(StateId s) {
    const StateNode& n = state(s);
    if (n.kind == StateKind::Not) return n.a;
    if (n.kind == StateKind::Now) return intern_state({StateKind::Now, mk_not(n.a), 0});
    return intern_state({StateKind::Not, s, 0});
  }

  StateId mk_or(StateId a, StateId b) { return mk_not(mk_and(mk_not(a), mk_not(b))); }
  StateId mk_implies(StateId a, StateId b) { return mk_not(mk_and(a, mk_not(b))); }
  StateId mk_iff(StateId a, StateId b) {
    return mk_and(mk_implies(a, b), mk_implies(b, a));
  }

  StateId mk_exists(PathId p) {
    const PathNode& n = path(p);
    if (n.kind == PathKind::State) return n.a;
    return intern_state({StateKind::Exists, p, 0});
  }

  StateId mk_now(StateId s) { return intern_state({StateKind::Now, s, 0}); }

  // derived state-level operators
  StateId mk_forall(PathId p) { return mk_not(mk_exists(mk_pnot(p))); }
  StateId mk_EX(StateId s) { return mk_exists(mk_next(s)); }
  StateId mk_EF(StateId s) { return mk_exists(mk_until(mk_true(), s)); }
  StateId mk_EG(StateId s) { return mk_exists(mk_pnot(mk_until(mk_true(), mk_not(s)))); }
  StateId mk_AX(StateId s) { return mk_forall(mk_next(s)); }
  StateId mk_AF(StateId s) { return mk_forall(mk_until(mk_true(), s)); }
  StateId mk_AG(StateId s) { return mk_not(mk_EF(mk_not(s))); }
  StateId mk_EU(StateId a, StateId b) { return mk_exists(mk_until(a, b)); }
  StateId mk_AU(StateId a, StateId b) { return mk_forall(mk_until(a, b)); }
  StateId mk_Y(StateId s) { return intern_state({StateKind::Exists, raw_yesterday(s), 0}); }
  StateId mk_ES(StateId a, StateId b) {
    return intern_state({StateKind::Exists, raw_since(a, b), 0});
  }
  StateId mk_P(StateId s) { return mk_ES(mk_true(), s); }
  StateId mk_H(StateId s) { return mk_not(mk_P(mk_not(s))); }

  // -- path constructors -----------------------------------------------------
  PathId mk_embed(StateId s) { return intern_path({PathKind::State, s, 0}); }

  PathId mk_pand(PathId a, PathId b) {
    a = fold_independent(a);
    b = fold_independent(b);
    if (path(a).kind == PathKind::State && path(b).kind == PathKind::State)
      return mk_embed(mk_and(path(a).a, path(b).a));
    return intern_path({PathKind::PAnd, a, b});
  }

  PathId mk_por(PathId a, PathId b) {
    a = fold_independent(a);
    b = fold_independent(b);
    if (path(a).kind == PathKind::State && path(b).kind == PathKind::State)
      return mk_embed(mk_or(path(a).a, path(b).a));
    return intern_path({PathKind::POr, a, b});
  }

  PathId mk_pnot(PathId p) {
    p = fold_independent(p);
    const PathNode& n = path(p);
    switch (n.kind) {
      case PathKind::State: return mk_embed(mk_not(n.a));
      case PathKind::PNot: return n.a;
      case PathKind::PAnd: return mk_por(mk_pnot(n.a), mk_pnot(n.b));
      case PathKind::POr: return mk_pand(mk_pnot(n.a), mk_pnot(n.b));
      default: return intern_path({PathKind::PNot, p, 0});
    }
  }

  PathId mk_next(StateId s) { return intern_path({PathKind::Next, s, 0}); }
  PathId mk_until(StateId a, StateId b) { return intern_path({PathKind::Until, a, b}); }
  PathId mk_infoften(StateId s) { return intern_path({PathKind::InfOften, s, 0}); }

  // Past atoms are path independent, so as path formulas they canonicalize to
  // embeds of their implicitly quantified state forms.  The raw nodes exist
  // only as the immediate argument of an Exists (built by mk_Y / mk_ES).
  PathId mk_yesterday(StateId s) { return mk_embed(mk_Y(s)); }
  PathId mk_since(StateId a, StateId b) { return mk_embed(mk_ES(a, b)); }
  PathId raw_yesterday(StateId s) { return intern_path({PathKind::Yesterday, s, 0}); }
  PathId raw_since(StateId a, StateId b) { return intern_path({PathKind::Since, a, b}); }

  PathId mk_F(StateId s) { return mk_until(mk_true(), s); }
  PathId mk_G(StateId s) { return mk_pnot(mk_until(mk_true(), mk_not(s))); }
  PathId mk_Ginf(StateId s) { return mk_pnot(mk_infoften(mk_not(s))); }
  PathId mk_Ppath(StateId s) { return mk_since(mk_true(), s); }
  PathId mk_Hpath(StateId s) { return mk_pnot(mk_since(mk_true(), mk_not(s))); }

  // -- access ------------------------------------------------------------------
  const StateNode& state(StateId id) const { return state_nodes_[id]; }
  const PathNode& path(PathId id) const { return path_nodes_[id]; }
  std::size_t state_count() const { return state_nodes_.size(); }

  bool is_false(StateId s) const {
    const StateNode& n = state(s);
    return n.kind == StateKind::Not && n.a == true_id_;
  }
  bool is_true(StateId s) const { return s == true_id_; }

private:
  // Past atoms are path independent (every path through x shares the prefix
  // up to x), so inside Boolean path combinations they canonicalize to state
  // embeds carrying the implicit quantifier.
  PathId fold_independent(PathId p) {
    const PathNode& n = path(p);
    switch (n.kind) {
      case PathKind::Yesterday:
      case PathKind::Since:
        return mk_embed(intern_state({StateKind::Exists, p, 0}));
      case PathKind::PNot: {
        PathId sub = fold_independent(n.a);
        if (path(sub).kind == PathKind::State)
          return mk_embed(mk_not(path(sub).a));
        return p;
      }
      default:
        return p;
    }
  }

  struct Key {
    std::uint8_t kind;
    std::uint32_t a, b;
    bool operator==(const Key& o) const { return kind == o.kind && a == o.a && b == o.b; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = k.kind;
      h = h * 1000003u ^ k.a;
      h = h * 1000003u ^ k.b;
      return h;
    }
  };

  StateId intern_state(StateNode n) {
    Key k{static_cast<std::uint8_t>(n.kind), n.a, n.b};
    auto it = state_lookup_.find(k);
    if (it != state_lookup_.end()) return it->second;
    StateId id = static_cast<StateId>(state_nodes_.size());
    state_nodes_.push_back(n);
    state_lookup_.emplace(k, id);
    return id;
  }
  PathId intern_path(PathNode n) {
    Key k{static_cast<std::uint8_t>(n.kind), n.a, n.b};
    auto it = path_lookup_.find(k);
    if (it != path_lookup_.end()) return it->second;
    PathId id = static_cast<PathId>(path_nodes_.size());
    path_nodes_.push_back(n);
    path_lookup_.emplace(k, id);
    return id;
  }

  std::vector<StateNode> state_nodes_;
  std::vector<PathNode> path_nodes_;
  std::unordered_map<Key, StateId, KeyHash> state_lookup_;
  std::unordered_map<Key, PathId, KeyHash> path_lookup_;
  std::vector<std::string> prop_names_;
  std::unordered_map<std::string, std::uint32_t> prop_lookup_;
  StateId true_id_;
};

// -- parsing / printing --------------------------------------------------------

// Parses against a declared proposition alphabet; undeclared symbols are errors.
StateId parse_formula(FormulaArena& arena, std::string_view text,
                      const std::vector<std::string>& alphabet);

// Formula file: first line "props: p q r", rest is the formula.
struct FormulaFile {
  std::vector<std::string> props;
  StateId formula;
};
FormulaFile parse_formula_file(FormulaArena& arena, std::string_view content);

std::string print_formula(const FormulaArena& arena, StateId f);
std::string print_path_formula(const FormulaArena& arena, PathId p);

// -- structural operations -------------------------------------------------------

// Node count of the formula tree (shared subterms counted once per occurrence).
std::size_t formula_size(const FormulaArena& arena, StateId f);
std::size_t path_size(const FormulaArena& arena, PathId p);

// Dual: switch & and |, negate all other maximal subformulas, identify !! with
// identity.  Involution on canonical path formulas.
PathId dual(FormulaArena& arena, PathId p);

// Fisher-Ladner style closure: f, subformulas, single negations, and the
// (EX E Finf g) & g companion of every Finf g subterm.
std::vector<StateId> closure(FormulaArena& arena, StateId f);

// List of state subformulas (no negations, no companions).
std::vector<StateId> state_subformulas(const FormulaArena& arena, StateId f);

// -- fragment classification ------------------------------------------------------

struct FragmentProfile {
  bool uses_until = false;         // U with a left operand other than true
  bool uses_fairness = false;      // Finf (or Ginf sugar)
  bool uses_past = false;          // Y or S (P/H sugar included)
  bool uses_now = false;           // N
  bool uses_path_boolean = false;  // a genuine Boolean combination of path formulas
  std::string fragment_name;
};

FragmentProfile classify(const FormulaArena& arena, StateId f);

// True iff f fits the PECTL shapes handled by the direct theorem-3 compiler:
// true / p / & / ! / E X / E U / E !U / E Finf / E Y / E S, recursively.
bool is_pectl(const FormulaArena& arena, StateId f);

}  // namespace btl

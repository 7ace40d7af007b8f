#include "btl/formula.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace btl {

// ============================================================================
// Printing
// ============================================================================
//
// Binary state/path operators print parenthesized in operand position and at
// the state top level; E(...) always prints its own parentheses.  Output
// re-parses to the identical core AST.

namespace {

void print_state(const FormulaArena& a, StateId f, std::string& out);
void print_path(const FormulaArena& a, PathId p, std::string& out, bool top);

void print_state(const FormulaArena& a, StateId f, std::string& out) {
  const StateNode& n = a.state(f);
  switch (n.kind) {
    case StateKind::True:
      out += "true";
      return;
    case StateKind::Prop:
      out += a.prop_name(n.a);
      return;
    case StateKind::And:
      out += '(';
      print_state(a, n.a, out);
      out += " & ";
      print_state(a, n.b, out);
      out += ')';
      return;
    case StateKind::Not:
      if (a.is_true(n.a)) {
        out += "false";
        return;
      }
      out += '!';
      print_state(a, n.a, out);
      return;
    case StateKind::Exists:
      out += "E(";
      print_path(a, n.a, out, true);
      out += ')';
      return;
    case StateKind::Now:
      out += "N ";
      print_state(a, n.a, out);
      return;
  }
}

void print_path(const FormulaArena& a, PathId p, std::string& out, bool top) {
  const PathNode& n = a.path(p);
  auto binary = [&](const char* op, auto&& lhs, auto&& rhs) {
    if (!top) out += '(';
    lhs();
    out += ' ';
    out += op;
    out += ' ';
    rhs();
    if (!top) out += ')';
  };
  switch (n.kind) {
    case PathKind::State:
      print_state(a, n.a, out);
      return;
    case PathKind::PAnd:
      binary("&", [&] { print_path(a, n.a, out, false); }, [&] { print_path(a, n.b, out, false); });
      return;
    case PathKind::POr:
      binary("|", [&] { print_path(a, n.a, out, false); }, [&] { print_path(a, n.b, out, false); });
      return;
    case PathKind::PNot:
      out += '!';
      print_path(a, n.a, out, false);
      return;
    case PathKind::Next:
      out += "X ";
      print_state(a, n.a, out);
      return;
    case PathKind::Until:
      binary("U", [&] { print_state(a, n.a, out); }, [&] { print_state(a, n.b, out); });
      return;
    case PathKind::InfOften:
      out += "Finf ";
      print_state(a, n.a, out);
      return;
    case PathKind::Yesterday:
      out += "Y ";
      print_state(a, n.a, out);
      return;
    case PathKind::Since:
      binary("S", [&] { print_state(a, n.a, out); }, [&] { print_state(a, n.b, out); });
      return;
  }
}

}  // namespace

std::string print_formula(const FormulaArena& arena, StateId f) {
  std::string out;
  print_state(arena, f, out);
  return out;
}

std::string print_path_formula(const FormulaArena& arena, PathId p) {
  std::string out;
  print_path(arena, p, out, true);
  return out;
}

// ============================================================================
// Size
// ============================================================================

std::size_t formula_size(const FormulaArena& a, StateId f) {
  const StateNode& n = a.state(f);
  switch (n.kind) {
    case StateKind::True:
    case StateKind::Prop:
      return 1;
    case StateKind::And:
      return 1 + formula_size(a, n.a) + formula_size(a, n.b);
    case StateKind::Not:
    case StateKind::Now:
      return 1 + formula_size(a, n.a);
    case StateKind::Exists:
      return 1 + path_size(a, n.a);
  }
  return 1;
}

std::size_t path_size(const FormulaArena& a, PathId p) {
  const PathNode& n = a.path(p);
  switch (n.kind) {
    case PathKind::State:
      return formula_size(a, n.a);
    case PathKind::PAnd:
    case PathKind::POr:
      return 1 + path_size(a, n.a) + path_size(a, n.b);
    case PathKind::PNot:
      return 1 + path_size(a, n.a);
    case PathKind::Next:
    case PathKind::InfOften:
    case PathKind::Yesterday:
      return 1 + formula_size(a, n.a);
    case PathKind::Until:
    case PathKind::Since:
      return 1 + formula_size(a, n.a) + formula_size(a, n.b);
  }
  return 1;
}

// ============================================================================
// Dual
// ============================================================================

PathId dual(FormulaArena& a, PathId p) {
  const PathNode& n = a.path(p);
  switch (n.kind) {
    case PathKind::State:
      return a.mk_embed(a.mk_not(n.a));
    case PathKind::PAnd: {
      PathId l = dual(a, n.a);
      PathId r = dual(a, n.b);
      return a.mk_por(l, r);
    }
    case PathKind::POr: {
      PathId l = dual(a, n.a);
      PathId r = dual(a, n.b);
      return a.mk_pand(l, r);
    }
    case PathKind::PNot:
      return n.a;
    default:
      return a.mk_pnot(p);
  }
}

// ============================================================================
// Subformulas / closure
// ============================================================================

namespace {

void collect_state_subs(const FormulaArena& a, StateId f, std::vector<StateId>& out,
                        std::unordered_set<StateId>& seen);

void collect_path_subs(const FormulaArena& a, PathId p, std::vector<StateId>& out,
                       std::unordered_set<StateId>& seen) {
  const PathNode& n = a.path(p);
  switch (n.kind) {
    case PathKind::State:
      collect_state_subs(a, n.a, out, seen);
      return;
    case PathKind::PAnd:
    case PathKind::POr:
      collect_path_subs(a, n.a, out, seen);
      collect_path_subs(a, n.b, out, seen);
      return;
    case PathKind::PNot:
      collect_path_subs(a, n.a, out, seen);
      return;
    case PathKind::Next:
    case PathKind::InfOften:
    case PathKind::Yesterday:
      collect_state_subs(a, n.a, out, seen);
      return;
    case PathKind::Until:
    case PathKind::Since:
      collect_state_subs(a, n.a, out, seen);
      collect_state_subs(a, n.b, out, seen);
      return;
  }
}

void collect_state_subs(const FormulaArena& a, StateId f, std::vector<StateId>& out,
                        std::unordered_set<StateId>& seen) {
  if (!seen.insert(f).second) return;
  out.push_back(f);
  const StateNode& n = a.state(f);
  switch (n.kind) {
    case StateKind::True:
    case StateKind::Prop:
      return;
    case StateKind::And:
      collect_state_subs(a, n.a, out, seen);
      collect_state_subs(a, n.b, out, seen);
      return;
    case StateKind::Not:
    case StateKind::Now:
      collect_state_subs(a, n.a, out, seen);
      return;
    case StateKind::Exists:
      collect_path_subs(a, n.a, out, seen);
      return;
  }
}

void collect_infoften_args(const FormulaArena& a, StateId f, std::set<StateId>& args);

void collect_infoften_args_path(const FormulaArena& a, PathId p, std::set<StateId>& args) {
  const PathNode& n = a.path(p);
  switch (n.kind) {
    case PathKind::State:
      collect_infoften_args(a, n.a, args);
      return;
    case PathKind::PAnd:
    case PathKind::POr:
    case PathKind::PNot:
      collect_infoften_args_path(a, n.a, args);
      if (n.kind != PathKind::PNot) collect_infoften_args_path(a, n.b, args);
      return;
    case PathKind::InfOften:
      args.insert(n.a);
      collect_infoften_args(a, n.a, args);
      return;
    case PathKind::Next:
    case PathKind::Yesterday:
      collect_infoften_args(a, n.a, args);
      return;
    case PathKind::Until:
    case PathKind::Since:
      collect_infoften_args(a, n.a, args);
      collect_infoften_args(a, n.b, args);
      return;
  }
}

void collect_infoften_args(const FormulaArena& a, StateId f, std::set<StateId>& args) {
  const StateNode& n = a.state(f);
  switch (n.kind) {
    case StateKind::True:
    case StateKind::Prop:
      return;
    case StateKind::And:
      collect_infoften_args(a, n.a, args);
      collect_infoften_args(a, n.b, args);
      return;
    case StateKind::Not:
    case StateKind::Now:
      collect_infoften_args(a, n.a, args);
      return;
    case StateKind::Exists:
      collect_infoften_args_path(a, n.a, args);
      return;
  }
}

}  // namespace

std::vector<StateId> state_subformulas(const FormulaArena& arena, StateId f) {
  std::vector<StateId> out;
  std::unordered_set<StateId> seen;
  collect_state_subs(arena, f, out, seen);
  return out;
}

std::vector<StateId> closure(FormulaArena& arena, StateId f) {
  std::vector<StateId> subs = state_subformulas(arena, f);

  std::set<StateId> members(subs.begin(), subs.end());

  std::set<StateId> finf_args;
  collect_infoften_args(arena, f, finf_args);
  for (StateId g : finf_args) {
    StateId efinf = arena.mk_exists(arena.mk_infoften(g));
    StateId ex_efinf = arena.mk_EX(efinf);
    StateId companion = arena.mk_and(ex_efinf, g);
    members.insert(efinf);
    members.insert(ex_efinf);
    members.insert(companion);
  }

  std::set<StateId> closed;
  for (StateId m : members) {
    closed.insert(m);
    closed.insert(arena.mk_not(m));
  }
  return {closed.begin(), closed.end()};
}

// ============================================================================
// Fragment classification
// ============================================================================

namespace {

struct Flags {
  bool until = false, fair = false, past = false, now = false, pbool = false;
};

void scan_state(const FormulaArena& a, StateId f, Flags& fl);

void scan_path(const FormulaArena& a, PathId p, Flags& fl) {
  const PathNode& n = a.path(p);
  switch (n.kind) {
    case PathKind::State:
      scan_state(a, n.a, fl);
      return;
    case PathKind::PAnd:
    case PathKind::POr: {
      // both-embed combinations collapse at construction, so any surviving
      // combination is a genuine Boolean combination of path formulas
      fl.pbool = true;
      scan_path(a, n.a, fl);
      scan_path(a, n.b, fl);
      return;
    }
    case PathKind::PNot: {
      // negation of a single temporal atom arises from plain A/G/H sugar
      const PathNode& s = a.path(n.a);
      if (s.kind == PathKind::PAnd || s.kind == PathKind::POr) fl.pbool = true;
      scan_path(a, n.a, fl);
      return;
    }
    case PathKind::Next:
      scan_state(a, n.a, fl);
      return;
    case PathKind::Until:
      if (!a.is_true(n.a)) fl.until = true;
      scan_state(a, n.a, fl);
      scan_state(a, n.b, fl);
      return;
    case PathKind::InfOften:
      fl.fair = true;
      scan_state(a, n.a, fl);
      return;
    case PathKind::Yesterday:
      fl.past = true;
      scan_state(a, n.a, fl);
      return;
    case PathKind::Since:
      fl.past = true;
      scan_state(a, n.a, fl);
      scan_state(a, n.b, fl);
      return;
  }
}

void scan_state(const FormulaArena& a, StateId f, Flags& fl) {
  const StateNode& n = a.state(f);
  switch (n.kind) {
    case StateKind::True:
    case StateKind::Prop:
      return;
    case StateKind::And:
      scan_state(a, n.a, fl);
      scan_state(a, n.b, fl);
      return;
    case StateKind::Not:
      scan_state(a, n.a, fl);
      return;
    case StateKind::Now:
      fl.now = true;
      scan_state(a, n.a, fl);
      return;
    case StateKind::Exists:
      scan_path(a, n.a, fl);
      return;
  }
}

}  // namespace

FragmentProfile classify(const FormulaArena& arena, StateId f) {
  Flags fl;
  scan_state(arena, f, fl);
  FragmentProfile p;
  p.uses_until = fl.until;
  p.uses_fairness = fl.fair;
  p.uses_past = fl.past;
  p.uses_now = fl.now;
  p.uses_path_boolean = fl.pbool;
  std::string name = fl.fair ? "ECTL" : (fl.until ? "CTL" : "UB");
  if (fl.past) name = "P" + name;
  if (fl.pbool) name += "+";
  if (fl.now) name += "N";
  p.fragment_name = name;
  return p;
}

// ============================================================================
// PECTL shape check
// ============================================================================

bool is_pectl(const FormulaArena& a, StateId f) {
  const StateNode& n = a.state(f);
  switch (n.kind) {
    case StateKind::True:
    case StateKind::Prop:
      return true;
    case StateKind::And:
      return is_pectl(a, n.a) && is_pectl(a, n.b);
    case StateKind::Not:
      return is_pectl(a, n.a);
    case StateKind::Now:
      return false;
    case StateKind::Exists: {
      const PathNode& pn = a.path(n.a);
      switch (pn.kind) {
        case PathKind::Next:
        case PathKind::InfOften:
        case PathKind::Yesterday:
          return is_pectl(a, pn.a);
        case PathKind::Until:
        case PathKind::Since:
          return is_pectl(a, pn.a) && is_pectl(a, pn.b);
        case PathKind::PNot: {
          const PathNode& s = a.path(pn.a);
          // E !(f U g) is the dual of A(f U g); everything else needs the
          // pebble construction
          if (s.kind == PathKind::Until) return is_pectl(a, s.a) && is_pectl(a, s.b);
          return false;
        }
        default:
          return false;
      }
    }
  }
  return false;
}

}  // namespace btl

#include "btl/normalform.hpp"

#include <functional>
#include <unordered_map>

namespace btl {

namespace {

// Path formulas that need the prefix-guess machinery: genuine Boolean
// combinations and negated future atoms.  Everything else is a plain
// quantified temporal operator.
bool combo_like(const FormulaArena& a, PathId p) {
  switch (a.path(p).kind) {
    case PathKind::PAnd:
    case PathKind::POr:
      return true;
    case PathKind::PNot: {
      // E !(f U g) is the dual of A(f U g) and stays a plain shape
      return a.path(a.path(p).a).kind != PathKind::Until;
    }
    default:
      return false;
  }
}

enum class Ctx { S1, S2, S4 };

bool check_state(const FormulaArena& a, StateId f, Ctx ctx);

bool check_combo(const FormulaArena& a, PathId p) {
  const PathNode& n = a.path(p);
  switch (n.kind) {
    case PathKind::PAnd:
    case PathKind::POr:
      return check_combo(a, n.a) && check_combo(a, n.b);
    case PathKind::PNot:
      return check_combo(a, n.a);
    case PathKind::State:
    case PathKind::Next:
    case PathKind::InfOften:
    case PathKind::Yesterday:
      return check_state(a, n.a, Ctx::S4);
    case PathKind::Until:
    case PathKind::Since:
      return check_state(a, n.a, Ctx::S4) && check_state(a, n.b, Ctx::S4);
  }
  return false;
}

bool check_state(const FormulaArena& a, StateId f, Ctx ctx) {
  const StateNode& n = a.state(f);
  switch (n.kind) {
    case StateKind::True:
    case StateKind::Prop:
      return true;
    case StateKind::And:
      return check_state(a, n.a, ctx) && check_state(a, n.b, ctx);
    case StateKind::Not:
      return check_state(a, n.a, ctx);
    case StateKind::Now:
      return ctx == Ctx::S1 && check_state(a, n.a, Ctx::S2);
    case StateKind::Exists: {
      PathId psi = n.a;
      if (combo_like(a, psi)) return ctx == Ctx::S2 && check_combo(a, psi);
      const PathNode& pn = a.path(psi);
      switch (pn.kind) {
        case PathKind::Next:
        case PathKind::InfOften:
        case PathKind::Yesterday:
          return check_state(a, pn.a, ctx);
        case PathKind::Until:
        case PathKind::Since:
          return check_state(a, pn.a, ctx) && check_state(a, pn.b, ctx);
        case PathKind::PNot: {
          const PathNode& s = a.path(pn.a);
          return check_state(a, s.a, ctx) && check_state(a, s.b, ctx);
        }
        default:
          return false;
      }
    }
  }
  return false;
}

class Normalizer {
public:
  explicit Normalizer(FormulaArena& a) : a_(a) {}

  NormalFormCertificate run(StateId f) {
    NormalFormCertificate cert;
    cert.input_size = formula_size(a_, f);

    // N at the root is the identity (the subtree at the root is the whole
    // tree), so root-level N chains strip before any renaming
    f = strip_root_now(f);

    // (i) innermost-out renaming of N subformulas
    StateId core = rename_now(f);

    // (iii) un-nest quantified path combinations inside every N scope
    core = rewrite_scope(core);
    std::vector<StateId> conjuncts;
    for (auto& [prop, body] : now_defs_) {
      StateId scoped = rewrite_scope(body);
      conjuncts.push_back(a_.mk_AG(a_.mk_iff(a_.mk_prop(prop), a_.mk_now(scoped))));
    }

    // (ii) one outer N prefix; the renaming conjuncts stay outside it
    StateId out = a_.mk_now(core);
    for (StateId c : conjuncts) out = a_.mk_and(out, c);

    cert.formula = out;
    cert.renaming = renaming_;
    cert.output_size = formula_size(a_, out);
    return cert;
  }

private:
  // N in a purely Boolean context over the root keeps the root as its cut
  StateId strip_root_now(StateId f) {
    const StateNode& n = a_.state(f);
    switch (n.kind) {
      case StateKind::Now:
        return strip_root_now(n.a);
      case StateKind::And:
        return a_.mk_and(strip_root_now(n.a), strip_root_now(n.b));
      case StateKind::Not:
        return a_.mk_not(strip_root_now(n.a));
      default:
        return f;
    }
  }

  std::string fresh(StateId definition) {
    std::string name = "_nf" + std::to_string(counter_++);
    renaming_.emplace(name, definition);
    return name;
  }

  // Replace every N subformula, innermost first, with a fresh proposition.
  StateId rename_now(StateId f) {
    const StateNode& n = a_.state(f);
    switch (n.kind) {
      case StateKind::True:
      case StateKind::Prop:
        return f;
      case StateKind::And:
        return a_.mk_and(rename_now(n.a), rename_now(n.b));
      case StateKind::Not:
        return a_.mk_not(rename_now(n.a));
      case StateKind::Now: {
        StateId body = rename_now(n.a);
        StateId key = a_.mk_now(body);
        auto it = now_props_.find(key);
        if (it != now_props_.end()) return a_.mk_prop_idx(it->second);
        std::string name = fresh(key);
        now_defs_.emplace_back(name, body);
        StateId p = a_.mk_prop(name);
        now_props_.emplace(key, a_.state(p).a);
        return p;
      }
      case StateKind::Exists:
        return a_.mk_exists(rename_path(n.a));
    }
    return f;
  }

  PathId rename_path(PathId p) {
    const PathNode& n = a_.path(p);
    switch (n.kind) {
      case PathKind::State:
        return a_.mk_embed(rename_now(n.a));
      case PathKind::PAnd:
        return a_.mk_pand(rename_path(n.a), rename_path(n.b));
      case PathKind::POr:
        return a_.mk_por(rename_path(n.a), rename_path(n.b));
      case PathKind::PNot:
        return a_.mk_pnot(rename_path(n.a));
      case PathKind::Next:
        return a_.mk_next(rename_now(n.a));
      case PathKind::Until:
        return a_.mk_until(rename_now(n.a), rename_now(n.b));
      case PathKind::InfOften:
        return a_.mk_infoften(rename_now(n.a));
      case PathKind::Yesterday:
        return a_.raw_yesterday(rename_now(n.a));
      case PathKind::Since:
        return a_.raw_since(rename_now(n.a), rename_now(n.b));
    }
    return p;
  }

  // Rename nested quantified combinations within one N scope; the defining
  // conjuncts attach inside the scope so past operators keep the scope's cut.
  // Fresh propositions are never shared across scopes.
  StateId rewrite_scope(StateId body) {
    combo_props_.clear();
    std::vector<StateId> defs;
    StateId rewritten = rewrite(body, false, defs);
    for (StateId d : defs) rewritten = a_.mk_and(rewritten, d);
    return rewritten;
  }

  StateId rewrite(StateId f, bool in_combo, std::vector<StateId>& defs) {
    const StateNode& n = a_.state(f);
    switch (n.kind) {
      case StateKind::True:
      case StateKind::Prop:
        return f;
      case StateKind::And:
        return a_.mk_and(rewrite(n.a, in_combo, defs), rewrite(n.b, in_combo, defs));
      case StateKind::Not:
        return a_.mk_not(rewrite(n.a, in_combo, defs));
      case StateKind::Now:
        throw std::logic_error("N below an N scope after renaming");
      case StateKind::Exists: {
        PathId psi = n.a;
        if (!combo_like(a_, psi)) {
          const PathNode& pn = a_.path(psi);
          switch (pn.kind) {
            case PathKind::Next:
              return a_.mk_exists(a_.mk_next(rewrite(pn.a, in_combo, defs)));
            case PathKind::InfOften:
              return a_.mk_exists(a_.mk_infoften(rewrite(pn.a, in_combo, defs)));
            case PathKind::Yesterday:
              return a_.mk_Y(rewrite(pn.a, in_combo, defs));
            case PathKind::Until:
              return a_.mk_exists(a_.mk_until(rewrite(pn.a, in_combo, defs),
                                              rewrite(pn.b, in_combo, defs)));
            case PathKind::Since:
              return a_.mk_ES(rewrite(pn.a, in_combo, defs),
                              rewrite(pn.b, in_combo, defs));
            case PathKind::PNot: {
              const PathNode& s = a_.path(pn.a);
              return a_.mk_exists(a_.mk_pnot(a_.mk_until(
                  rewrite(s.a, in_combo, defs), rewrite(s.b, in_combo, defs))));
            }
            default:
              throw std::logic_error("unexpected plain path shape");
          }
        }
        PathId rho = rewrite_combo(psi, defs);
        StateId e = a_.mk_exists(rho);
        if (!in_combo) return e;
        auto it = combo_props_.find(e);
        if (it != combo_props_.end()) return a_.mk_prop_idx(it->second);
        std::string name = fresh(e);
        defs.push_back(a_.mk_AG(a_.mk_iff(a_.mk_prop(name), e)));
        StateId p = a_.mk_prop(name);
        combo_props_.emplace(e, a_.state(p).a);
        return p;
      }
    }
    return f;
  }

  PathId rewrite_combo(PathId p, std::vector<StateId>& defs) {
    const PathNode& n = a_.path(p);
    switch (n.kind) {
      case PathKind::State:
        return a_.mk_embed(rewrite(n.a, true, defs));
      case PathKind::PAnd:
        return a_.mk_pand(rewrite_combo(n.a, defs), rewrite_combo(n.b, defs));
      case PathKind::POr:
        return a_.mk_por(rewrite_combo(n.a, defs), rewrite_combo(n.b, defs));
      case PathKind::PNot:
        return a_.mk_pnot(rewrite_combo(n.a, defs));
      case PathKind::Next:
        return a_.mk_next(rewrite(n.a, true, defs));
      case PathKind::Until:
        return a_.mk_until(rewrite(n.a, true, defs), rewrite(n.b, true, defs));
      case PathKind::InfOften:
        return a_.mk_infoften(rewrite(n.a, true, defs));
      case PathKind::Yesterday:
        return a_.raw_yesterday(rewrite(n.a, true, defs));
      case PathKind::Since:
        return a_.raw_since(rewrite(n.a, true, defs), rewrite(n.b, true, defs));
    }
    return p;
  }

  FormulaArena& a_;
  int counter_ = 1;
  std::map<std::string, StateId> renaming_;
  std::vector<std::pair<std::string, StateId>> now_defs_;  // prop -> N-free body
  std::unordered_map<StateId, std::uint32_t> now_props_;
  std::unordered_map<StateId, std::uint32_t> combo_props_;
};

}  // namespace

bool is_normal_form(const FormulaArena& arena, StateId f) {
  return check_state(arena, f, Ctx::S1);
}

NormalFormCertificate normalize(FormulaArena& arena, StateId f) {
  Normalizer nz(arena);
  NormalFormCertificate cert = nz.run(f);
  return cert;
}

}  // namespace btl

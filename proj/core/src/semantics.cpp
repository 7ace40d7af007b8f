#include "btl/semantics.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace btl {

// ============================================================================
// Recursive evaluator (the reference semantics)
// ============================================================================
//
// State truth is evaluated relative to a cut node: N rebases the cut to the
// current node, which truncates the past and the origin of paths.  Node ids
// stay those of the original tree.

namespace {

class Evaluator {
public:
  Evaluator(const FormulaArena& a, const FiniteTree& t) : a_(a), t_(t) {}

  bool state(NodeId cut, NodeId x, StateId f) {
    std::uint64_t key = (std::uint64_t(cut) << 44) | (std::uint64_t(x) << 24) | f;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool v = state_raw(cut, x, f);
    memo_.emplace(key, v);
    return v;
  }

  bool path(NodeId cut, const std::vector<NodeId>& pi, std::size_t i, PathId p) {
    const PathNode& n = a_.path(p);
    switch (n.kind) {
      case PathKind::State:
        return state(cut, pi[i], n.a);
      case PathKind::PAnd:
        return path(cut, pi, i, n.a) && path(cut, pi, i, n.b);
      case PathKind::POr:
        return path(cut, pi, i, n.a) || path(cut, pi, i, n.b);
      case PathKind::PNot:
        return !path(cut, pi, i, n.a);
      case PathKind::Next:
        return i + 1 < pi.size() && state(cut, pi[i + 1], n.a);
      case PathKind::Until: {
        for (std::size_t j = i; j < pi.size(); ++j) {
          if (state(cut, pi[j], n.b)) return true;
          if (!state(cut, pi[j], n.a)) return false;
        }
        return false;
      }
      case PathKind::InfOften:
        return false;  // finitely many nodes are never infinitely many
      case PathKind::Yesterday:
        return i > 0 && state(cut, pi[i - 1], n.a);
      case PathKind::Since: {
        for (std::size_t j = i + 1; j-- > 0;) {
          if (state(cut, pi[j], n.b)) return true;
          if (!state(cut, pi[j], n.a)) return false;
        }
        return false;
      }
    }
    return false;
  }

private:
  bool state_raw(NodeId cut, NodeId x, StateId f) {
    const StateNode& n = a_.state(f);
    switch (n.kind) {
      case StateKind::True:
        return true;
      case StateKind::Prop: {
        int idx = t_.prop_index(a_.prop_name(n.a));
        if (idx < 0)
          throw semantics_error("proposition '" + a_.prop_name(n.a) +
                                "' is not in the tree's alphabet");
        return t_.has(x, static_cast<std::uint32_t>(idx));
      }
      case StateKind::And:
        return state(cut, x, n.a) && state(cut, x, n.b);
      case StateKind::Not:
        return !state(cut, x, n.a);
      case StateKind::Now:
        return state(x, x, n.a);
      case StateKind::Exists: {
        std::vector<NodeId> prefix = prefix_from(cut, x);
        bool found = false;
        std::vector<NodeId> cur = prefix;
        std::function<void(NodeId)> descend = [&](NodeId y) {
          if (found) return;
          if (t_.is_leaf(y)) {
            if (path(cut, cur, prefix.size() - 1, n.a)) found = true;
            return;
          }
          for (NodeId c : t_.nodes[y].children) {
            cur.push_back(c);
            descend(c);
            cur.pop_back();
            if (found) return;
          }
        };
        descend(x);
        return found;
      }
    }
    return false;
  }

  std::vector<NodeId> prefix_from(NodeId cut, NodeId x) const {
    std::vector<NodeId> up;
    std::int32_t cur = static_cast<std::int32_t>(x);
    while (cur >= 0) {
      up.push_back(static_cast<NodeId>(cur));
      if (static_cast<NodeId>(cur) == cut) break;
      cur = t_.nodes[cur].parent;
    }
    std::reverse(up.begin(), up.end());
    return up;
  }

  const FormulaArena& a_;
  const FiniteTree& t_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

}  // namespace

bool evaluate_state(const FormulaArena& arena, const FiniteTree& t, NodeId x, StateId f) {
  Evaluator ev(arena, t);
  return ev.state(t.root(), x, f);
}

bool evaluate_path(const FormulaArena& arena, const FiniteTree& t,
                   const std::vector<NodeId>& pi, NodeId x, PathId psi) {
  auto it = std::find(pi.begin(), pi.end(), x);
  if (it == pi.end()) throw semantics_error("node is not on the given path");
  Evaluator ev(arena, t);
  return ev.path(t.root(), pi, static_cast<std::size_t>(it - pi.begin()), psi);
}

// ============================================================================
// Bottom-up labeling evaluator (independent oracle, N/past-free slice)
// ============================================================================
//
// Computes a truth bitmap per state subformula in size order; path formulas
// under E are checked on explicit suffix paths by a backward scan over
// precomputed bitmaps.

namespace {

class BottomUp {
public:
  BottomUp(const FormulaArena& a, const FiniteTree& t) : a_(a), t_(t) {}

  const std::vector<bool>& bitmap(StateId f) {
    auto it = maps_.find(f);
    if (it != maps_.end()) return it->second;
    std::vector<bool> m(t_.size(), false);
    const StateNode& n = a_.state(f);
    switch (n.kind) {
      case StateKind::True:
        m.assign(t_.size(), true);
        break;
      case StateKind::Prop: {
        int idx = t_.prop_index(a_.prop_name(n.a));
        if (idx < 0) throw semantics_error("proposition not in alphabet");
        for (NodeId x = 0; x < t_.size(); ++x) m[x] = t_.has(x, idx);
        break;
      }
      case StateKind::And: {
        const auto& l = bitmap(n.a);
        const auto r = bitmap(n.b);
        for (NodeId x = 0; x < t_.size(); ++x) m[x] = l[x] && r[x];
        break;
      }
      case StateKind::Not: {
        const auto& s = bitmap(n.a);
        for (NodeId x = 0; x < t_.size(); ++x) m[x] = !s[x];
        break;
      }
      case StateKind::Now:
        throw semantics_error("bottom-up evaluator does not support N");
      case StateKind::Exists: {
        for (NodeId x = 0; x < t_.size(); ++x) {
          std::vector<NodeId> suffix{x};
          m[x] = exists_path(x, suffix, n.a);
        }
        break;
      }
    }
    return maps_.emplace(f, std::move(m)).first->second;
  }

private:
  bool exists_path(NodeId y, std::vector<NodeId>& suffix, PathId psi) {
    if (t_.is_leaf(y)) return check_suffix(suffix, psi);
    for (NodeId c : t_.nodes[y].children) {
      suffix.push_back(c);
      bool ok = exists_path(c, suffix, psi);
      suffix.pop_back();
      if (ok) return true;
    }
    return false;
  }

  // truth of psi at position 0 of the suffix path, by backward DP
  bool check_suffix(const std::vector<NodeId>& pi, PathId psi) {
    return vals(pi, psi)[0];
  }

  std::vector<bool> vals(const std::vector<NodeId>& pi, PathId psi) {
    const PathNode& n = a_.path(psi);
    std::size_t k = pi.size();
    std::vector<bool> v(k, false);
    switch (n.kind) {
      case PathKind::State: {
        const auto& m = bitmap(n.a);
        for (std::size_t i = 0; i < k; ++i) v[i] = m[pi[i]];
        break;
      }
      case PathKind::PAnd: {
        auto l = vals(pi, n.a), r = vals(pi, n.b);
        for (std::size_t i = 0; i < k; ++i) v[i] = l[i] && r[i];
        break;
      }
      case PathKind::POr: {
        auto l = vals(pi, n.a), r = vals(pi, n.b);
        for (std::size_t i = 0; i < k; ++i) v[i] = l[i] || r[i];
        break;
      }
      case PathKind::PNot: {
        auto s = vals(pi, n.a);
        for (std::size_t i = 0; i < k; ++i) v[i] = !s[i];
        break;
      }
      case PathKind::Next: {
        const auto& m = bitmap(n.a);
        for (std::size_t i = 0; i + 1 < k; ++i) v[i] = m[pi[i + 1]];
        break;
      }
      case PathKind::Until: {
        const auto& ma = bitmap(n.a);
        const auto& mb = bitmap(n.b);
        for (std::size_t i = k; i-- > 0;)
          v[i] = mb[pi[i]] || (ma[pi[i]] && i + 1 < k && v[i + 1]);
        break;
      }
      case PathKind::InfOften:
        break;  // all false on finite paths
      case PathKind::Yesterday:
      case PathKind::Since:
        throw semantics_error("bottom-up evaluator does not support past operators");
    }
    return v;
  }

  const FormulaArena& a_;
  const FiniteTree& t_;
  std::unordered_map<StateId, std::vector<bool>> maps_;
};

}  // namespace

bool evaluate_bottom_up(const FormulaArena& arena, const FiniteTree& t, NodeId x, StateId f) {
  BottomUp bu(arena, t);
  return bu.bitmap(f)[x];
}

}  // namespace btl

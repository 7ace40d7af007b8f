#include "btl/bool_formula.hpp"

#include <algorithm>
#include <set>

namespace btl {

namespace {

using AtomSet = std::vector<BAtom>;  // sorted, unique

AtomSet set_union(const AtomSet& a, const AtomSet& b) {
  AtomSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset(const AtomSet& a, const AtomSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void minimize(std::vector<AtomSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<AtomSet> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j)
      if (i != j && subset(sets[j], sets[i]) && sets[j] != sets[i]) dominated = true;
    if (!dominated) out.push_back(sets[i]);
  }
  sets = std::move(out);
}

std::vector<AtomSet> sets_rec(const BPool& pool, BId f) {
  const BNode& n = pool.node(f);
  switch (n.kind) {
    case BKind::True:
      return {{}};
    case BKind::False:
      return {};
    case BKind::Atom:
      return {{n.atom}};
    case BKind::Or: {
      auto l = sets_rec(pool, n.a);
      auto r = sets_rec(pool, n.b);
      l.insert(l.end(), r.begin(), r.end());
      minimize(l);
      return l;
    }
    case BKind::And: {
      auto l = sets_rec(pool, n.a);
      auto r = sets_rec(pool, n.b);
      std::vector<AtomSet> out;
      for (const auto& x : l)
        for (const auto& y : r) out.push_back(set_union(x, y));
      minimize(out);
      return out;
    }
  }
  return {};
}

}  // namespace

std::vector<std::vector<BAtom>> satisfying_sets(const BPool& pool, BId f) {
  return sets_rec(pool, f);
}

std::vector<BAtom> atoms_of(const BPool& pool, BId f) {
  std::set<BAtom> acc;
  std::vector<BId> stack{f};
  while (!stack.empty()) {
    BId id = stack.back();
    stack.pop_back();
    const BNode& n = pool.node(id);
    switch (n.kind) {
      case BKind::Atom:
        acc.insert(n.atom);
        break;
      case BKind::And:
      case BKind::Or:
        stack.push_back(n.a);
        stack.push_back(n.b);
        break;
      default:
        break;
    }
  }
  return {acc.begin(), acc.end()};
}

std::string to_sexpr(const BPool& pool, BId f, const std::vector<std::string>& state_names) {
  const BNode& n = pool.node(f);
  switch (n.kind) {
    case BKind::True:
      return "true";
    case BKind::False:
      return "false";
    case BKind::And:
      return "(and " + to_sexpr(pool, n.a, state_names) + " " +
             to_sexpr(pool, n.b, state_names) + ")";
    case BKind::Or:
      return "(or " + to_sexpr(pool, n.a, state_names) + " " +
             to_sexpr(pool, n.b, state_names) + ")";
    case BKind::Atom: {
      std::string mv;
      switch (n.atom.move.kind) {
        case MoveKind::Child: mv = "child-" + std::to_string(n.atom.move.child); break;
        case MoveKind::SomeChild: mv = "some-child"; break;
        case MoveKind::EveryChild: mv = "every-child"; break;
        case MoveKind::Parent: mv = "parent"; break;
        case MoveKind::Stay: mv = "stay"; break;
        case MoveKind::Root: mv = "root"; break;
      }
      return "(atom " + mv + " " + state_names.at(n.atom.state) + ")";
    }
  }
  return "?";
}

}  // namespace btl

#include <map>
#include <stdexcept>

#include "btl/automaton.hpp"
#include "btl/parity.hpp"

namespace btl {

// ============================================================================
// Membership game
// ============================================================================
//
// Configurations are (state, node, pebble placement).  The automaton picks a
// minimal satisfying set of the transition formula together with witnesses
// for some-child atoms; the pathfinder then follows one spawned
// configuration (picking the child for every-child atoms).  Infinite plays
// are scored by the hesitant condition as a three-priority parity game:
// universal B states 3, universal others and existential G states 2, the
// rest 1; the automaton wins iff the maximum recurring priority is even.

namespace {

using Placement = std::vector<std::int32_t>;  // -1 = not placed, stack order

struct Config {
  std::uint32_t state;
  NodeId node;
  friend bool operator<(const Config& a, const Config& b) {
    return std::tie(a.state, a.node) < std::tie(b.state, b.node);
  }
  friend bool operator==(const Config& a, const Config& b) {
    return a.state == b.state && a.node == b.node;
  }
};

struct Builder {
  const Automaton& a;
  const FiniteTree& t;
  ParityGame game;
  std::map<std::tuple<std::uint32_t, NodeId, Placement>, std::uint32_t> apos;
  std::map<std::pair<std::vector<Config>, Placement>, std::uint32_t> ppos;
  std::vector<PropSet> letters;  // per tree node, remapped to automaton props

  Builder(const Automaton& aut, const FiniteTree& tree) : a(aut), t(tree) {
    letters.resize(t.size(), 0);
    std::vector<int> remap(t.props.size(), -1);
    for (std::size_t i = 0; i < t.props.size(); ++i)
      for (std::size_t j = 0; j < a.props.size(); ++j)
        if (t.props[i] == a.props[j]) remap[i] = static_cast<int>(j);
    for (NodeId x = 0; x < t.size(); ++x)
      for (std::size_t i = 0; i < t.props.size(); ++i)
        if (t.has(x, static_cast<std::uint32_t>(i)) && remap[i] >= 0)
          letters[x] |= PropSet{1} << remap[i];
  }

  std::uint8_t prio(std::uint32_t q) const {
    switch (a.cls(q)) {
      case SetClass::Universal:
        return a.in_B[q] ? 3 : 2;
      case SetClass::Existential:
        return a.in_G[q] ? 2 : 1;
      case SetClass::Transient:
        return 1;
    }
    return 1;
  }

  std::size_t mpp(const Placement& pl) const {
    std::size_t m = 0;
    while (m < pl.size() && pl[m] >= 0) ++m;
    return m;
  }

  std::uint32_t astate(std::uint32_t q, NodeId x, const Placement& pl) {
    auto key = std::make_tuple(q, x, pl);
    auto it = apos.find(key);
    if (it != apos.end()) return it->second;
    std::uint32_t v = game.add(0, prio(q));
    apos.emplace(key, v);
    expand_astate(v, q, x, pl);
    return v;
  }

  std::uint32_t pstate(std::vector<Config> cfgs, const Placement& pl) {
    auto key = std::make_pair(cfgs, pl);
    auto it = ppos.find(key);
    if (it != ppos.end()) return it->second;
    std::uint32_t v = game.add(1, 1);
    ppos.emplace(key, v);
    for (const Config& c : cfgs) {
      std::uint32_t w = astate(c.state, c.node, pl);
      game.succ[v].push_back(w);
    }
    return v;
  }

  void expand_astate(std::uint32_t v, std::uint32_t q, NodeId x, const Placement& pl) {
    std::uint32_t d = static_cast<std::uint32_t>(t.degree(x));
    if (!a.symmetric &&
        std::find(a.arities.begin(), a.arities.end(), d) == a.arities.end())
      throw std::invalid_argument("tree arity " + std::to_string(d) +
                                  " outside the automaton's arity set");
    std::size_t placed = mpp(pl);
    bool b = placed > 0 && pl[placed - 1] == static_cast<std::int32_t>(x);
    Transition tr = a.delta(q, letters[x], d, b);

    if (tr.is_pebble) {
      if (tr.act.drop) {
        if (placed == a.pebbles) return;  // cannot apply: losing for the automaton
        Placement np = pl;
        np[placed] = static_cast<std::int32_t>(x);
        std::uint32_t w = astate(tr.act.next, x, np);
        game.succ[v].push_back(w);
      } else {
        if (!b) throw std::logic_error("lift without the pebble on the node");
        Placement np = pl;
        np[placed - 1] = -1;
        std::uint32_t w = astate(tr.act.next, x, np);
        game.succ[v].push_back(w);
      }
      return;
    }

    for (const auto& Y : satisfying_sets(*a.pool, tr.formula)) {
      bool legal = true;
      for (const BAtom& at : Y) {
        if (at.move.kind == MoveKind::Parent && x == t.root()) legal = false;
        if (at.move.kind == MoveKind::Root && x != t.root()) legal = false;
        if (at.move.kind == MoveKind::Child && at.move.child > d) legal = false;
      }
      if (!legal) continue;

      // resolve atoms; some-child atoms branch over witness choices
      std::vector<std::vector<Config>> alternatives{{}};
      bool dead = false;
      for (const BAtom& at : Y) {
        switch (at.move.kind) {
          case MoveKind::Stay:
          case MoveKind::Root:
            for (auto& alt : alternatives) alt.push_back({at.state, x});
            break;
          case MoveKind::Parent:
            for (auto& alt : alternatives)
              alt.push_back({at.state, static_cast<NodeId>(t.nodes[x].parent)});
            break;
          case MoveKind::Child:
            for (auto& alt : alternatives)
              alt.push_back({at.state, t.nodes[x].children[at.move.child - 1]});
            break;
          case MoveKind::EveryChild:
            for (auto& alt : alternatives)
              for (NodeId c : t.nodes[x].children) alt.push_back({at.state, c});
            break;
          case MoveKind::SomeChild: {
            if (t.is_leaf(x)) {
              dead = true;
              break;
            }
            std::vector<std::vector<Config>> next;
            for (const auto& alt : alternatives)
              for (NodeId c : t.nodes[x].children) {
                auto copy = alt;
                copy.push_back({at.state, c});
                next.push_back(std::move(copy));
              }
            alternatives = std::move(next);
            break;
          }
        }
        if (dead) break;
      }
      if (dead) continue;

      for (auto& alt : alternatives) {
        std::sort(alt.begin(), alt.end());
        alt.erase(std::unique(alt.begin(), alt.end()), alt.end());
        std::uint32_t w = pstate(alt, pl);
        game.succ[v].push_back(w);
      }
    }
    std::sort(game.succ[v].begin(), game.succ[v].end());
    game.succ[v].erase(std::unique(game.succ[v].begin(), game.succ[v].end()),
                       game.succ[v].end());
  }
};

}  // namespace

bool membership_finite(const Automaton& a, const FiniteTree& t) {
  Builder b(a, t);
  Placement init(a.pebbles, -1);
  std::uint32_t start = b.astate(a.initial, t.root(), init);
  ParitySolution sol = solve_parity(b.game);
  return sol.winner[start] == 0;
}

}  // namespace btl

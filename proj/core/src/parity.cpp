#include "btl/parity.hpp"

#include <algorithm>

namespace btl {

namespace {

// Zielonka's recursive algorithm over vertex masks.  Dead ends are wired to
// losing sinks for their owner up front, so the core never sees them.

struct Solver {
  ParityGame g;  // owned copy, possibly extended with sinks
  std::size_t original;
  std::vector<std::vector<std::uint32_t>> pred;
  ParitySolution sol;

  explicit Solver(const ParityGame& game) : g(game), original(game.size()) {
    std::uint32_t sink0 = 0, sink1 = 0;  // loses for player 0 / player 1
    bool have0 = false, have1 = false;
    for (std::uint32_t v = 0; v < original; ++v) {
      if (!g.succ[v].empty()) continue;
      if (g.owner[v] == 0) {
        if (!have0) {
          sink0 = g.add(0, 1);
          g.succ[sink0].push_back(sink0);
          have0 = true;
        }
        g.succ[v].push_back(sink0);
      } else {
        if (!have1) {
          sink1 = g.add(1, 2);
          g.succ[sink1].push_back(sink1);
          have1 = true;
        }
        g.succ[v].push_back(sink1);
      }
    }
    pred.resize(g.size());
    for (std::uint32_t v = 0; v < g.size(); ++v)
      for (std::uint32_t w : g.succ[v]) pred[w].push_back(v);
    sol.winner.assign(g.size(), 0);
    sol.strategy.assign(g.size(), -1);
  }

  std::vector<std::uint32_t> attractor(const std::vector<char>& active,
                                       std::vector<char>& in_attr,
                                       std::vector<std::uint32_t> order,
                                       std::uint8_t p,
                                       std::vector<std::int64_t>& strat) {
    std::vector<std::uint32_t> out_deg(g.size(), 0);
    for (std::uint32_t v = 0; v < g.size(); ++v) {
      if (!active[v]) continue;
      std::uint32_t d = 0;
      for (std::uint32_t w : g.succ[v])
        if (active[w]) ++d;
      out_deg[v] = d;
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      std::uint32_t w = order[i];
      for (std::uint32_t v : pred[w]) {
        if (!active[v] || in_attr[v]) continue;
        if (g.owner[v] == p) {
          in_attr[v] = 1;
          strat[v] = w;
          order.push_back(v);
        } else if (--out_deg[v] == 0) {
          in_attr[v] = 1;
          order.push_back(v);
        }
      }
    }
    return order;
  }

  void solve(std::vector<char> active) {
    std::uint32_t count = 0;
    int maxp = -1;
    for (std::uint32_t v = 0; v < g.size(); ++v)
      if (active[v]) {
        ++count;
        maxp = std::max(maxp, static_cast<int>(g.priority[v]));
      }
    if (count == 0) return;

    std::uint8_t p = (maxp % 2 == 0) ? 0 : 1;

    std::vector<char> in_attr(g.size(), 0);
    std::vector<std::uint32_t> top;
    for (std::uint32_t v = 0; v < g.size(); ++v)
      if (active[v] && g.priority[v] == maxp) {
        top.push_back(v);
        in_attr[v] = 1;
      }
    std::vector<std::int64_t> attr_strat(g.size(), -1);
    attractor(active, in_attr, top, p, attr_strat);

    std::vector<char> rest = active;
    for (std::uint32_t v = 0; v < g.size(); ++v)
      if (in_attr[v]) rest[v] = 0;
    solve(rest);

    bool opponent_empty = true;
    for (std::uint32_t v = 0; v < g.size(); ++v)
      if (rest[v] && sol.winner[v] != p) {
        opponent_empty = false;
        break;
      }

    if (opponent_empty) {
      for (std::uint32_t v = 0; v < g.size(); ++v) {
        if (!active[v] || !in_attr[v]) continue;
        sol.winner[v] = p;
        if (g.owner[v] != p) continue;
        if (attr_strat[v] >= 0) {
          sol.strategy[v] = attr_strat[v];
        } else {
          std::int64_t choice = -1;
          for (std::uint32_t w : g.succ[v])
            if (active[w]) {
              choice = w;
              if (!in_attr[w] && sol.winner[w] == p) break;
            }
          sol.strategy[v] = choice;
        }
      }
      return;
    }

    std::vector<char> opp_attr(g.size(), 0);
    std::vector<std::uint32_t> opp_frontier;
    for (std::uint32_t v = 0; v < g.size(); ++v)
      if (rest[v] && sol.winner[v] != p) {
        opp_attr[v] = 1;
        opp_frontier.push_back(v);
      }
    std::vector<std::int64_t> opp_strat(g.size(), -1);
    attractor(active, opp_attr, opp_frontier, 1 - p, opp_strat);

    std::vector<char> remaining = active;
    for (std::uint32_t v = 0; v < g.size(); ++v)
      if (opp_attr[v]) remaining[v] = 0;
    solve(remaining);

    for (std::uint32_t v = 0; v < g.size(); ++v) {
      if (!opp_attr[v]) continue;
      sol.winner[v] = 1 - p;
      if (g.owner[v] == 1 - p && opp_strat[v] >= 0 && !(rest[v] && sol.strategy[v] >= 0))
        sol.strategy[v] = opp_strat[v];
    }
  }
};

}  // namespace

ParitySolution solve_parity(const ParityGame& game) {
  Solver s(game);
  s.solve(std::vector<char>(s.g.size(), 1));
  s.sol.winner.resize(game.size());
  s.sol.strategy.resize(game.size());
  for (std::uint32_t v = 0; v < game.size(); ++v)
    if (s.sol.strategy[v] >= static_cast<std::int64_t>(game.size()))
      s.sol.strategy[v] = -1;  // edge into a synthetic sink
  return s.sol;
}

}  // namespace btl

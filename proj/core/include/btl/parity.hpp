#pragma once

// Zielonka solver for explicit parity games.  Player 0 wins a play iff the
// maximum priority seen infinitely often is even; a player with no move
// loses immediately.

#include <cstdint>
#include <vector>

namespace btl {

struct ParityGame {
  std::vector<std::uint8_t> owner;     // 0 or 1
  std::vector<std::uint8_t> priority;
  std::vector<std::vector<std::uint32_t>> succ;

  std::uint32_t add(std::uint8_t own, std::uint8_t prio) {
    owner.push_back(own);
    priority.push_back(prio);
    succ.emplace_back();
    return static_cast<std::uint32_t>(owner.size() - 1);
  }
  std::size_t size() const { return owner.size(); }
};

struct ParitySolution {
  std::vector<std::uint8_t> winner;
  // chosen successor for vertices owned by their winner; -1 elsewhere
  std::vector<std::int64_t> strategy;
};

ParitySolution solve_parity(const ParityGame& g);

}  // namespace btl

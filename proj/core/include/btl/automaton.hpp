#pragma once

// Weak-pebble hesitant alternating tree automata: unified symmetric /
// nonsymmetric representation, hesitance validation, and membership on
// finite trees by game solving.

#include <functional>
#include <memory>
#include <optional>

#include "btl/bool_formula.hpp"
#include "btl/tree.hpp"

namespace btl {

enum class SetClass : std::uint8_t { Existential, Universal, Transient };

struct PartitionSet {
  std::vector<std::uint32_t> states;
  SetClass cls = SetClass::Transient;
};

struct PebbleAction {
  bool drop = true;  // false = lift
  std::uint32_t next = 0;
};

struct Transition {
  bool is_pebble = false;
  PebbleAction act;
  BId formula = 0;
};

struct Automaton {
  std::vector<std::string> props;        // letters are bitmasks over props
  std::vector<std::string> state_names;
  bool symmetric = true;
  std::vector<std::uint32_t> arities;    // nonsymmetric arity set D (sorted)
  std::uint32_t pebbles = 0;             // k
  std::uint32_t initial = 0;
  std::vector<bool> in_G, in_B;
  // partition sets in descending order: transitions from set i reach only
  // sets with index <= i
  std::vector<PartitionSet> partition;
  std::vector<std::uint32_t> set_of;     // state -> partition set index
  // props whose value can change delta(q, .) for each q; all other letter
  // bits are irrelevant to q's transition
  std::vector<std::vector<std::uint32_t>> sensitive;

  std::shared_ptr<BPool> pool = std::make_shared<BPool>();
  // (state, letter, arity, pebble-on-this-node) -> transition
  std::function<Transition(std::uint32_t, PropSet, std::uint32_t, bool)> delta;

  std::size_t num_states() const { return state_names.size(); }
  std::size_t letter_count() const { return std::size_t{1} << props.size(); }
  SetClass cls(std::uint32_t q) const { return partition[set_of[q]].cls; }
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the hesitance conditions (partition, order, transient/existential/
// universal constraints, symmetric extras) plus the structural transition
// restrictions of the automaton model.
ValidationReport validate_hesitant(const Automaton& a);

// Membership of a finite tree, decided as a two-player game on the finite
// configuration graph with a three-priority parity condition.
bool membership_finite(const Automaton& a, const FiniteTree& t);

// Representative letters for state q: all assignments of q's sensitive props
// (other bits zero).  delta(q, .) takes no other values.
std::vector<PropSet> representative_letters(const Automaton& a, std::uint32_t q);

}  // namespace btl

#pragma once

// Direct executable semantics over finite trees, and a second, independent
// bottom-up evaluator for the N/past-free slice used as a cross-check oracle.

#include "btl/formula.hpp"
#include "btl/tree.hpp"

namespace btl {

class semantics_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Truth of a state formula at node x.  E ranges over maximal paths through x
// starting at the root; N restricts the tree to the subtree at x.
bool evaluate_state(const FormulaArena& arena, const FiniteTree& t, NodeId x, StateId f);

// Truth of a path formula at x on the explicit maximal path pi (which must
// contain x and start at the root).
bool evaluate_path(const FormulaArena& arena, const FiniteTree& t,
                   const std::vector<NodeId>& pi, NodeId x, PathId psi);

// Independent bottom-up labeling evaluator.  Only supports formulas without
// N and past operators; throws semantics_error otherwise.
bool evaluate_bottom_up(const FormulaArena& arena, const FiniteTree& t, NodeId x, StateId f);

}  // namespace btl

#pragma once

// Exhaustive finite-model search used as an independent satisfiability
// oracle.  Sound for SAT within the bounds; absence of a model is never a
// proof of unsatisfiability.

#include <optional>

#include "btl/semantics.hpp"

namespace btl {

class enumeration_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct EnumerateOptions {
  std::size_t max_nodes = 5;
  std::size_t max_degree = 2;
  std::size_t candidate_cap = 2'000'000;  // guard, reported when exceeded
};

// First finite tree (canonical order: node count, then shape/label order with
// sibling subtrees sorted to prune isomorphic duplicates) satisfying f at the
// root, or nullopt if none exists within the bounds.
std::optional<FiniteTree> enumerate_models(const FormulaArena& arena, StateId f,
                                           const EnumerateOptions& opts = {});

}  // namespace btl

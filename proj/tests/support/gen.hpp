#pragma once

// Random formula and tree generators shared by the unit and acceptance
// suites.  All generation is seeded and deterministic.

#include <random>
#include <string>
#include <vector>

#include "btl/formula.hpp"
#include "btl/tree.hpp"

namespace btl::gen {

using Rng = std::mt19937_64;

inline std::uint32_t pick(Rng& rng, std::uint32_t n) {
  return static_cast<std::uint32_t>(rng() % n);
}

// ---------------------------------------------------------------------------
// PECTL formulas (the theorem-3 fragment): true/p/&/!/EX/EU/AU/EFinf/Y/S
// ---------------------------------------------------------------------------
inline StateId pectl_formula(FormulaArena& a, Rng& rng,
                             const std::vector<std::string>& props, std::size_t budget) {
  if (budget <= 1) {
    std::uint32_t c = pick(rng, static_cast<std::uint32_t>(props.size()) + 1);
    if (c == props.size()) return a.mk_true();
    return a.mk_prop(props[c]);
  }
  switch (pick(rng, 9)) {
    case 0: {
      std::size_t l = 1 + pick(rng, static_cast<std::uint32_t>(budget - 1));
      return a.mk_and(pectl_formula(a, rng, props, l),
                      pectl_formula(a, rng, props, budget - l));
    }
    case 1:
      return a.mk_not(pectl_formula(a, rng, props, budget - 1));
    case 2:
      return a.mk_EX(pectl_formula(a, rng, props, budget - 1));
    case 3: {
      std::size_t l = 1 + pick(rng, static_cast<std::uint32_t>(budget - 1));
      return a.mk_EU(pectl_formula(a, rng, props, l),
                     pectl_formula(a, rng, props, budget - l));
    }
    case 4: {
      std::size_t l = 1 + pick(rng, static_cast<std::uint32_t>(budget - 1));
      return a.mk_AU(pectl_formula(a, rng, props, l),
                     pectl_formula(a, rng, props, budget - l));
    }
    case 5:
      return a.mk_exists(a.mk_infoften(pectl_formula(a, rng, props, budget - 1)));
    case 6:
      return a.mk_Y(pectl_formula(a, rng, props, budget - 1));
    case 7: {
      std::size_t l = 1 + pick(rng, static_cast<std::uint32_t>(budget - 1));
      return a.mk_exists(a.mk_since(pectl_formula(a, rng, props, l),
                                    pectl_formula(a, rng, props, budget - l)));
    }
    default:
      return a.mk_not(pectl_formula(a, rng, props, budget - 1));
  }
}

// N/past-free slice for the two-evaluator cross-check
inline StateId future_formula(FormulaArena& a, Rng& rng,
                              const std::vector<std::string>& props, std::size_t budget);

inline PathId future_path(FormulaArena& a, Rng& rng, const std::vector<std::string>& props,
                          std::size_t budget) {
  if (budget <= 2) return a.mk_next(future_formula(a, rng, props, 1));
  switch (pick(rng, 6)) {
    case 0: {
      std::size_t l = 1 + pick(rng, static_cast<std::uint32_t>(budget - 1));
      return a.mk_pand(future_path(a, rng, props, l), future_path(a, rng, props, budget - l));
    }
    case 1: {
      std::size_t l = 1 + pick(rng, static_cast<std::uint32_t>(budget - 1));
      return a.mk_por(future_path(a, rng, props, l), future_path(a, rng, props, budget - l));
    }
    case 2:
      return a.mk_pnot(future_path(a, rng, props, budget - 1));
    case 3:
      return a.mk_next(future_formula(a, rng, props, budget - 1));
    case 4: {
      std::size_t l = 1 + pick(rng, static_cast<std::uint32_t>(budget - 1));
      return a.mk_until(future_formula(a, rng, props, l),
                        future_formula(a, rng, props, budget - l));
    }
    default:
      return a.mk_infoften(future_formula(a, rng, props, budget - 1));
  }
}

inline StateId future_formula(FormulaArena& a, Rng& rng,
                              const std::vector<std::string>& props, std::size_t budget) {
  if (budget <= 1) {
    std::uint32_t c = pick(rng, static_cast<std::uint32_t>(props.size()) + 1);
    if (c == props.size()) return a.mk_true();
    return a.mk_prop(props[c]);
  }
  switch (pick(rng, 4)) {
    case 0: {
      std::size_t l = 1 + pick(rng, static_cast<std::uint32_t>(budget - 1));
      return a.mk_and(future_formula(a, rng, props, l),
                      future_formula(a, rng, props, budget - l));
    }
    case 1:
      return a.mk_not(future_formula(a, rng, props, budget - 1));
    default:
      return a.mk_exists(future_path(a, rng, props, budget - 1));
  }
}

// ---------------------------------------------------------------------------
// Full PECTL+N formulas (adds N and past to the future slice)
// ---------------------------------------------------------------------------
inline StateId pectlplusn_formula(FormulaArena& a, Rng& rng,
                                  const std::vector<std::string>& props, std::size_t budget);

inline PathId pectlplusn_path(FormulaArena& a, Rng& rng, const std::vector<std::string>& props,
                              std::size_t budget) {
  if (budget <= 2) return a.mk_next(pectlplusn_formula(a, rng, props, 1));
  switch (pick(rng, 8)) {
    case 0: {
      std::size_t l = 1 + pick(rng, static_cast<std::uint32_t>(budget - 1));
      return a.mk_pand(pectlplusn_path(a, rng, props, l),
                       pectlplusn_path(a, rng, props, budget - l));
    }
    case 1: {
      std::size_t l = 1 + pick(rng, static_cast<std::uint32_t>(budget - 1));
      return a.mk_por(pectlplusn_path(a, rng, props, l),
                      pectlplusn_path(a, rng, props, budget - l));
    }
    case 2:
      return a.mk_pnot(pectlplusn_path(a, rng, props, budget - 1));
    case 3:
      return a.mk_next(pectlplusn_formula(a, rng, props, budget - 1));
    case 4: {
      std::size_t l = 1 + pick(rng, static_cast<std::uint32_t>(budget - 1));
      return a.mk_until(pectlplusn_formula(a, rng, props, l),
                        pectlplusn_formula(a, rng, props, budget - l));
    }
    case 5:
      return a.mk_infoften(pectlplusn_formula(a, rng, props, budget - 1));
    case 6:
      return a.mk_yesterday(pectlplusn_formula(a, rng, props, budget - 1));
    default: {
      std::size_t l = 1 + pick(rng, static_cast<std::uint32_t>(budget - 1));
      return a.mk_since(pectlplusn_formula(a, rng, props, l),
                        pectlplusn_formula(a, rng, props, budget - l));
    }
  }
}

inline StateId pectlplusn_formula(FormulaArena& a, Rng& rng,
                                  const std::vector<std::string>& props, std::size_t budget) {
  if (budget <= 1) {
    std::uint32_t c = pick(rng, static_cast<std::uint32_t>(props.size()) + 1);
    if (c == props.size()) return a.mk_true();
    return a.mk_prop(props[c]);
  }
  switch (pick(rng, 5)) {
    case 0: {
      std::size_t l = 1 + pick(rng, static_cast<std::uint32_t>(budget - 1));
      return a.mk_and(pectlplusn_formula(a, rng, props, l),
                      pectlplusn_formula(a, rng, props, budget - l));
    }
    case 1:
      return a.mk_not(pectlplusn_formula(a, rng, props, budget - 1));
    case 2:
      return a.mk_now(pectlplusn_formula(a, rng, props, budget - 1));
    default:
      return a.mk_exists(pectlplusn_path(a, rng, props, budget - 1));
  }
}

// ---------------------------------------------------------------------------
// Random finite trees
// ---------------------------------------------------------------------------
inline FiniteTree random_tree(Rng& rng, const std::vector<std::string>& props,
                              std::size_t max_nodes, std::size_t max_degree) {
  FiniteTree t;
  t.props = props;
  std::size_t n = 1 + pick(rng, static_cast<std::uint32_t>(max_nodes));
  t.nodes.push_back(TreeNode{rng() & ((PropSet{1} << props.size()) - 1), {}, -1});
  for (NodeId i = 1; i < n; ++i) {
    // attach to a random node that still has capacity
    std::vector<NodeId> capable;
    for (NodeId j = 0; j < t.nodes.size(); ++j)
      if (t.degree(j) < max_degree) capable.push_back(j);
    if (capable.empty()) break;
    NodeId parent = capable[pick(rng, static_cast<std::uint32_t>(capable.size()))];
    t.nodes.push_back(TreeNode{rng() & ((PropSet{1} << props.size()) - 1),
                               {},
                               static_cast<std::int32_t>(parent)});
    t.nodes[parent].children.push_back(i);
  }
  return t;
}

}  // namespace btl::gen

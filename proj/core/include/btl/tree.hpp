#pragma once

// Finite labeled trees, tree paths, and finite-state Kripke models whose
// unfoldings are the regular-tree witnesses emitted by the decision pipeline.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace btl {

using NodeId = std::uint32_t;
using PropSet = std::uint64_t;  // bitmask over a proposition list

struct TreeNode {
  PropSet label = 0;
  std::vector<NodeId> children;
  std::int32_t parent = -1;  // -1 at the root
};

struct FiniteTree {
  std::vector<std::string> props;
  std::vector<TreeNode> nodes;  // node 0 is the root

  NodeId root() const { return 0; }
  std::size_t size() const { return nodes.size(); }
  std::size_t degree(NodeId x) const { return nodes[x].children.size(); }
  bool is_leaf(NodeId x) const { return nodes[x].children.empty(); }
  bool has(NodeId x, std::uint32_t prop) const {
    return (nodes[x].label >> prop) & 1u;
  }

  // Maximal root-to-leaf path through x (prefix to x is unique; the
  // continuation below x is chosen by descent indices).
  std::vector<NodeId> path_to(NodeId x) const;

  // All maximal paths that contain x (shared root prefix, all descents).
  std::vector<std::vector<NodeId>> maximal_paths_through(NodeId x) const;

  // Subtree rooted at x as a standalone tree.
  FiniteTree subtree(NodeId x) const;

  int prop_index(const std::string& name) const;
};

struct KripkeModel {
  std::vector<std::string> props;
  std::vector<PropSet> labels;
  std::vector<std::vector<std::uint32_t>> successors;
  std::uint32_t initial = 0;

  std::size_t size() const { return labels.size(); }
};

// Truncated unfolding of m to the given depth; labels copied from states.
FiniteTree unfold(const KripkeModel& m, std::size_t depth);

// Structural well-formedness: parent links consistent, all reachable, root 0.
bool tree_well_formed(const FiniteTree& t);

}  // namespace btl

#include "btl/tree.hpp"

#include <algorithm>
#include <functional>

namespace btl {

std::vector<NodeId> FiniteTree::path_to(NodeId x) const {
  std::vector<NodeId> up;
  std::int32_t cur = static_cast<std::int32_t>(x);
  while (cur >= 0) {
    up.push_back(static_cast<NodeId>(cur));
    cur = nodes[cur].parent;
  }
  std::reverse(up.begin(), up.end());
  return up;
}

std::vector<std::vector<NodeId>> FiniteTree::maximal_paths_through(NodeId x) const {
  std::vector<NodeId> prefix = path_to(x);
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> cur = prefix;
  std::function<void(NodeId)> descend = [&](NodeId y) {
    if (is_leaf(y)) {
      out.push_back(cur);
      return;
    }
    for (NodeId c : nodes[y].children) {
      cur.push_back(c);
      descend(c);
      cur.pop_back();
    }
  };
  descend(x);
  return out;
}

FiniteTree FiniteTree::subtree(NodeId x) const {
  FiniteTree out;
  out.props = props;
  std::function<NodeId(NodeId, std::int32_t)> copy = [&](NodeId y, std::int32_t parent) {
    NodeId id = static_cast<NodeId>(out.nodes.size());
    out.nodes.push_back(TreeNode{nodes[y].label, {}, parent});
    for (NodeId c : nodes[y].children) {
      NodeId cid = copy(c, static_cast<std::int32_t>(id));
      out.nodes[id].children.push_back(cid);
    }
    return id;
  };
  copy(x, -1);
  return out;
}

int FiniteTree::prop_index(const std::string& name) const {
  for (std::size_t i = 0; i < props.size(); ++i)
    if (props[i] == name) return static_cast<int>(i);
  return -1;
}

FiniteTree unfold(const KripkeModel& m, std::size_t depth) {
  FiniteTree t;
  t.props = m.props;
  std::function<NodeId(std::uint32_t, std::size_t, std::int32_t)> go =
      [&](std::uint32_t state, std::size_t d, std::int32_t parent) {
        NodeId id = static_cast<NodeId>(t.nodes.size());
        t.nodes.push_back(TreeNode{m.labels[state], {}, parent});
        if (d > 0)
          for (std::uint32_t s : m.successors[state]) {
            NodeId cid = go(s, d - 1, static_cast<std::int32_t>(id));
            t.nodes[id].children.push_back(cid);
          }
        return id;
      };
  go(m.initial, depth, -1);
  return t;
}

bool tree_well_formed(const FiniteTree& t) {
  if (t.nodes.empty()) return false;
  if (t.nodes[0].parent != -1) return false;
  std::vector<bool> seen(t.nodes.size(), false);
  seen[0] = true;
  for (NodeId x = 0; x < t.nodes.size(); ++x)
    for (NodeId c : t.nodes[x].children) {
      if (c >= t.nodes.size() || t.nodes[c].parent != static_cast<std::int32_t>(x))
        return false;
      if (seen[c]) return false;
      seen[c] = true;
    }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace btl

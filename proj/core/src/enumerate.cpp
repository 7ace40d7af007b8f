#include "btl/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace btl {

namespace {

struct STree {
  std::uint64_t label;
  std::vector<STree> children;
};

// serialization for the canonical sibling order: (size, label, children...)
void serialize(const STree& t, std::string& out) {
  out.push_back(static_cast<char>('a' + t.children.size()));
  out.push_back(static_cast<char>('0' + t.label));
  for (const auto& c : t.children) serialize(c, out);
}

std::string serial(const STree& t) {
  std::string s;
  serialize(t, s);
  return s;
}

std::size_t stree_size(const STree& t) {
  std::size_t n = 1;
  for (const auto& c : t.children) n += stree_size(c);
  return n;
}

void props_of_state(const FormulaArena& a, StateId f, std::set<std::string>& out);

void props_of_path(const FormulaArena& a, PathId p, std::set<std::string>& out) {
  const PathNode& n = a.path(p);
  switch (n.kind) {
    case PathKind::State:
      props_of_state(a, n.a, out);
      return;
    case PathKind::PAnd:
    case PathKind::POr:
      props_of_path(a, n.a, out);
      props_of_path(a, n.b, out);
      return;
    case PathKind::PNot:
      props_of_path(a, n.a, out);
      return;
    case PathKind::Next:
    case PathKind::InfOften:
    case PathKind::Yesterday:
      props_of_state(a, n.a, out);
      return;
    case PathKind::Until:
    case PathKind::Since:
      props_of_state(a, n.a, out);
      props_of_state(a, n.b, out);
      return;
  }
}

void props_of_state(const FormulaArena& a, StateId f, std::set<std::string>& out) {
  const StateNode& n = a.state(f);
  switch (n.kind) {
    case StateKind::True:
      return;
    case StateKind::Prop:
      out.insert(a.prop_name(n.a));
      return;
    case StateKind::And:
      props_of_state(a, n.a, out);
      props_of_state(a, n.b, out);
      return;
    case StateKind::Not:
    case StateKind::Now:
      props_of_state(a, n.a, out);
      return;
    case StateKind::Exists:
      props_of_path(a, n.a, out);
      return;
  }
}

class Enumerator {
public:
  Enumerator(std::size_t labels, std::size_t max_degree, std::size_t cap)
      : labels_(labels), max_degree_(max_degree), cap_(cap) {}

  // all canonical subtrees with exactly n nodes, memoized
  const std::vector<STree>& of_size(std::size_t n) {
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    std::vector<STree> out;
    for (std::uint64_t label = 0; label < labels_; ++label) {
      if (n == 1) {
        out.push_back(STree{label, {}});
        bump();
        continue;
      }
      std::size_t rest = n - 1;
      std::size_t kmax = std::min(max_degree_, rest);
      for (std::size_t k = 1; k <= kmax; ++k) {
        std::vector<std::size_t> comp;
        compositions(rest, k, 1, comp, [&](const std::vector<std::size_t>& sizes) {
          std::vector<STree> chosen;
          choose_children(sizes, 0, "", chosen, label, out);
        });
      }
    }
    return memo_.emplace(n, std::move(out)).first->second;
  }

private:
  // non-decreasing compositions of total into k parts
  template <class F>
  void compositions(std::size_t total, std::size_t k, std::size_t minpart,
                    std::vector<std::size_t>& acc, F&& emit) {
    if (k == 1) {
      if (total >= minpart) {
        acc.push_back(total);
        emit(acc);
        acc.pop_back();
      }
      return;
    }
    for (std::size_t first = minpart; first * k <= total; ++first) {
      acc.push_back(first);
      compositions(total - first, k - 1, first, acc, emit);
      acc.pop_back();
    }
  }

  void choose_children(const std::vector<std::size_t>& sizes, std::size_t i,
                       const std::string& prev, std::vector<STree>& chosen,
                       std::uint64_t root_label, std::vector<STree>& out) {
    if (i == sizes.size()) {
      out.push_back(STree{root_label, chosen});
      bump();
      return;
    }
    for (const STree& cand : of_size(sizes[i])) {
      std::string s = serial(cand);
      bool same_size = i > 0 && sizes[i] == sizes[i - 1];
      if (same_size && s < prev) continue;  // canonical sibling order
      chosen.push_back(cand);
      choose_children(sizes, i + 1, s, chosen, root_label, out);
      chosen.pop_back();
    }
  }

  void bump() {
    if (++generated_ > cap_)
      throw enumeration_error("model enumeration exceeded the candidate cap");
  }

  std::size_t labels_, max_degree_, cap_;
  std::size_t generated_ = 0;
  std::map<std::size_t, std::vector<STree>> memo_;
};

FiniteTree to_tree(const STree& s, const std::vector<std::string>& props) {
  FiniteTree t;
  t.props = props;
  std::function<NodeId(const STree&, std::int32_t)> copy = [&](const STree& n,
                                                               std::int32_t parent) {
    NodeId id = static_cast<NodeId>(t.nodes.size());
    t.nodes.push_back(TreeNode{n.label, {}, parent});
    for (const auto& c : n.children) {
      NodeId cid = copy(c, static_cast<std::int32_t>(id));
      t.nodes[id].children.push_back(cid);
    }
    return id;
  };
  copy(s, -1);
  return t;
}

}  // namespace

std::optional<FiniteTree> enumerate_models(const FormulaArena& arena, StateId f,
                                           const EnumerateOptions& opts) {
  if (opts.max_nodes < 1) throw enumeration_error("max_nodes must be at least 1");

  std::set<std::string> pset;
  props_of_state(arena, f, pset);
  std::vector<std::string> props(pset.begin(), pset.end());
  if (props.size() > 6)
    throw enumeration_error("too many propositions for exhaustive enumeration");

  Enumerator en(std::size_t{1} << props.size(), opts.max_degree, opts.candidate_cap);
  for (std::size_t n = 1; n <= opts.max_nodes; ++n) {
    for (const STree& cand : en.of_size(n)) {
      FiniteTree t = to_tree(cand, props);
      if (evaluate_state(arena, t, t.root(), f)) return t;
    }
  }
  return std::nullopt;
}

}  // namespace btl

#include "btl/automaton.hpp"

#include <algorithm>

namespace btl {

std::vector<PropSet> representative_letters(const Automaton& a, std::uint32_t q) {
  const auto& props = a.sensitive[q];
  std::vector<PropSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << props.size()); ++bits) {
    PropSet sigma = 0;
    for (std::size_t i = 0; i < props.size(); ++i)
      if ((bits >> i) & 1) sigma |= PropSet{1} << props[i];
    out.push_back(sigma);
  }
  return out;
}

namespace {

// counts same-set atoms below f; reports a violation when two of them are
// related by the wrong connective for the set's class
void relation_check(const Automaton& a, BId f, std::uint32_t set_idx, SetClass cls,
                    std::uint32_t q, std::vector<std::string>& out, int& count) {
  const BNode& n = a.pool->node(f);
  switch (n.kind) {
    case BKind::True:
    case BKind::False:
      count = 0;
      return;
    case BKind::Atom:
      count = a.set_of[n.atom.state] == set_idx ? 1 : 0;
      return;
    case BKind::And:
    case BKind::Or: {
      int l = 0, r = 0;
      relation_check(a, n.a, set_idx, cls, q, out, l);
      relation_check(a, n.b, set_idx, cls, q, out, r);
      count = l + r;
      if (l > 0 && r > 0) {
        if (cls == SetClass::Existential && n.kind == BKind::And)
          out.push_back("existential-conjunction: state " + a.state_names[q] +
                        " conjoins two same-set atoms");
        if (cls == SetClass::Universal && n.kind == BKind::Or)
          out.push_back("universal-disjunction: state " + a.state_names[q] +
                        " disjoins two same-set atoms");
      }
      return;
    }
  }
}

}  // namespace

ValidationReport validate_hesitant(const Automaton& a) {
  ValidationReport rep;
  auto& out = rep.violations;

  // partition covers Q exactly once
  std::vector<int> seen(a.num_states(), 0);
  for (std::size_t i = 0; i < a.partition.size(); ++i)
    for (std::uint32_t q : a.partition[i].states) {
      ++seen[q];
      if (a.set_of[q] != i) out.push_back("set_of inconsistent for " + a.state_names[q]);
    }
  for (std::uint32_t q = 0; q < a.num_states(); ++q)
    if (seen[q] != 1)
      out.push_back("state " + a.state_names[q] + " covered " + std::to_string(seen[q]) +
                    " times by the partition");
  if (!out.empty()) return rep;

  std::vector<std::uint32_t> arities = a.symmetric ? std::vector<std::uint32_t>{1} : a.arities;

  for (std::uint32_t q = 0; q < a.num_states(); ++q) {
    std::uint32_t qi = a.set_of[q];
    SetClass cls = a.partition[qi].cls;
    for (PropSet sigma : representative_letters(a, q)) {
      for (std::uint32_t d : arities) {
        for (int bi = 0; bi < (a.pebbles > 0 ? 2 : 1); ++bi) {
          bool b = bi == 1;
          Transition tr = a.delta(q, sigma, d, b);
          if (tr.is_pebble) {
            if (!tr.act.drop && !b)
              out.push_back("lift without the pebble on the node at " + a.state_names[q]);
            std::uint32_t p = tr.act.next;
            if (a.set_of[p] > qi)
              out.push_back("order: pebble transition from " + a.state_names[q] + " to " +
                            a.state_names[p] + " climbs the partition");
            if (a.set_of[p] == qi && cls == SetClass::Transient)
              out.push_back("transient-self: " + a.state_names[q] +
                            " reaches its own set via a pebble action");
            continue;
          }
          auto atoms = atoms_of(*a.pool, tr.formula);
          for (const BAtom& at : atoms) {
            if (b && at.move.kind == MoveKind::Parent)
              out.push_back("parent move with the pebble on the node at " + a.state_names[q]);
            if (a.symmetric && at.move.kind == MoveKind::Child)
              out.push_back("explicit child index in a symmetric automaton at " +
                            a.state_names[q]);
            if (!a.symmetric &&
                (at.move.kind == MoveKind::SomeChild || at.move.kind == MoveKind::EveryChild))
              out.push_back("symmetric move in a nonsymmetric automaton at " +
                            a.state_names[q]);
            if (!a.symmetric && at.move.kind == MoveKind::Child && at.move.child > d)
              out.push_back("child index beyond the arity at " + a.state_names[q]);
            std::uint32_t pj = a.set_of[at.state];
            if (pj > qi)
              out.push_back("order: transition from " + a.state_names[q] + " to " +
                            a.state_names[at.state] + " climbs the partition");
            if (pj == qi) {
              if (cls == SetClass::Transient)
                out.push_back("transient-self: " + a.state_names[q] + " reaches " +
                              a.state_names[at.state] + " in its own set");
              if (cls == SetClass::Existential && a.symmetric &&
                  at.move.kind == MoveKind::EveryChild)
                out.push_back("symmetric-existential-box: " + a.state_names[q] +
                              " has an every-child atom into its own set");
              if (cls == SetClass::Universal && a.symmetric &&
                  at.move.kind == MoveKind::SomeChild)
                out.push_back("symmetric-universal-diamond: " + a.state_names[q] +
                              " has a some-child atom into its own set");
            }
          }
          int cnt = 0;
          relation_check(a, tr.formula, qi, cls, q, out, cnt);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return rep;
}

}  // namespace btl

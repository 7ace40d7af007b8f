#include "doctest.h"

#include "btl/enumerate.hpp"
#include "btl/semantics.hpp"
#include "support/gen.hpp"

using namespace btl;

namespace {

const std::vector<std::string> kPQ = {"p", "q"};

FiniteTree chain(const std::vector<PropSet>& labels) {
  FiniteTree t;
  t.props = kPQ;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    t.nodes.push_back(TreeNode{labels[i], {}, i == 0 ? -1 : static_cast<std::int32_t>(i - 1)});
    if (i > 0) t.nodes[i - 1].children.push_back(static_cast<NodeId>(i));
  }
  return t;
}

constexpr PropSet P = 1;  // bit 0
constexpr PropSet Q = 2;  // bit 1

}  // namespace

TEST_CASE("state semantics on leaves and chains") {
  FormulaArena a;
  StateId p = a.mk_prop("p");
  StateId q = a.mk_prop("q");

  FiniteTree single_p = chain({P});
  CHECK(evaluate_state(a, single_p, 0, a.mk_EG(p)));

  FiniteTree single_empty = chain({0});
  CHECK_FALSE(evaluate_state(a, single_empty, 0, a.mk_EX(p)));

  FiniteTree two = chain({P, Q});
  CHECK(evaluate_state(a, two, 0, a.mk_EU(p, q)));
}

TEST_CASE("path semantics: fairness, since, yesterday") {
  FormulaArena a;
  StateId p = a.mk_prop("p");
  StateId q = a.mk_prop("q");

  FiniteTree t = chain({P, P, Q});
  std::vector<NodeId> pi = {0, 1, 2};

  CHECK_FALSE(evaluate_path(a, t, pi, 0, a.mk_infoften(p)));
  CHECK_FALSE(evaluate_path(a, t, pi, 2, a.mk_infoften(p)));

  // the S-rule admits y = x, and only the nodes strictly after y constrain
  // the left operand
  CHECK(evaluate_path(a, t, pi, 2, a.raw_since(p, q)));   // y = x, q here
  CHECK(evaluate_path(a, t, pi, 2, a.raw_since(q, p)));   // y = 1, q at node 2
  CHECK_FALSE(evaluate_path(a, t, pi, 1, a.raw_since(q, q)));
  CHECK(evaluate_path(a, t, pi, 1, a.raw_since(p, p)));

  CHECK_FALSE(evaluate_path(a, t, pi, 0, a.raw_yesterday(a.mk_true())));
  CHECK(evaluate_path(a, t, pi, 1, a.raw_yesterday(p)));
}

TEST_CASE("A X differs from !EX! at leaves") {
  FormulaArena a;
  StateId p = a.mk_prop("p");
  FiniteTree leaf = chain({P});
  // on a leaf, every maximal path ends immediately: A X p is false, !EX!p true
  CHECK_FALSE(evaluate_state(a, leaf, 0, a.mk_AX(p)));
  CHECK(evaluate_state(a, leaf, 0, a.mk_not(a.mk_EX(a.mk_not(p)))));
}

TEST_CASE("N evaluates on the literal subtree") {
  FormulaArena a;
  StateId p = a.mk_prop("p");
  // chain p -> q: at node 1, P p holds; under N it does not
  FiniteTree t = chain({P, Q});
  CHECK(evaluate_state(a, t, 1, a.mk_P(p)));
  CHECK_FALSE(evaluate_state(a, t, 1, a.mk_now(a.mk_P(p))));

  gen::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    FiniteTree rt = gen::random_tree(rng, kPQ, 7, 2);
    StateId f = gen::pectlplusn_formula(a, rng, kPQ, 1 + i % 7);
    for (NodeId x = 0; x < rt.size(); ++x) {
      bool via_now = evaluate_state(a, rt, x, a.mk_now(f));
      bool via_subtree = evaluate_state(a, rt.subtree(x), 0, f);
      REQUIRE(via_now == via_subtree);
    }
  }
}

TEST_CASE("recursive and bottom-up evaluators agree on the future slice") {
  FormulaArena a;
  gen::Rng rng(42);
  int disagreements = 0;
  for (int i = 0; i < 500; ++i) {
    FiniteTree t = gen::random_tree(rng, kPQ, 8, 3);
    StateId f = gen::future_formula(a, rng, kPQ, 1 + i % 8);
    for (NodeId x = 0; x < t.size(); ++x)
      if (evaluate_state(a, t, x, f) != evaluate_bottom_up(a, t, x, f)) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("unfold") {
  FormulaArena a;
  KripkeModel self_loop{{"p"}, {P}, {{0}}, 0};
  FiniteTree t = unfold(self_loop, 2);
  REQUIRE(t.size() == 3);
  CHECK(t.has(0, 0));
  CHECK(t.has(2, 0));
  CHECK(t.degree(2) == 0);

  KripkeModel two{{"p"}, {P, 0}, {{1}, {0}}, 0};
  CHECK(unfold(two, 1).size() == 2);

  KripkeModel dead{{"p"}, {P, 0}, {{1}, {}}, 0};
  FiniteTree d = unfold(dead, 5);
  CHECK(d.size() == 2);
  CHECK(d.is_leaf(1));
}

TEST_CASE("enumerate_models basic verdicts") {
  FormulaArena a;
  StateId p = a.mk_prop("p");

  CHECK_FALSE(enumerate_models(a, a.mk_and(p, a.mk_not(p))).has_value());

  auto m = enumerate_models(a, a.mk_EX(p));
  REQUIRE(m.has_value());
  CHECK(m->size() == 2);
  CHECK(evaluate_state(a, *m, 0, a.mk_EX(p)));

  auto m2 = enumerate_models(a, a.mk_exists(a.mk_pand(a.mk_F(p), a.mk_G(a.mk_prop("q")))));
  REQUIRE(m2.has_value());
  CHECK(evaluate_state(a, *m2, m2->root(), a.mk_true()));
}

TEST_CASE("every enumerated model satisfies its formula") {
  FormulaArena a;
  gen::Rng rng(11);
  int found = 0;
  for (int i = 0; i < 150; ++i) {
    StateId f = gen::pectlplusn_formula(a, rng, kPQ, 1 + i % 6);
    auto m = enumerate_models(a, f);
    if (m) {
      ++found;
      CHECK(tree_well_formed(*m));
      REQUIRE(evaluate_state(a, *m, 0, f));
    }
  }
  CHECK(found > 30);  // sanity: the corpus is not degenerate
}

TEST_CASE("oracle monotonicity in the bounds") {
  FormulaArena a;
  gen::Rng rng(13);
  for (int i = 0; i < 60; ++i) {
    StateId f = gen::pectlplusn_formula(a, rng, kPQ, 1 + i % 5);
    EnumerateOptions small{3, 1, 2'000'000};
    EnumerateOptions big{5, 2, 2'000'000};
    if (enumerate_models(a, f, small).has_value())
      CHECK(enumerate_models(a, f, big).has_value());
  }
}

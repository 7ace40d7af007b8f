#include "doctest.h"

#include "btl/enumerate.hpp"
#include "btl/normalform.hpp"
#include "btl/semantics.hpp"
#include "support/gen.hpp"

using namespace btl;

namespace {
const std::vector<std::string> kPQ = {"p", "q"};
}

TEST_CASE("is_normal_form examples") {
  FormulaArena a;
  StateId p = a.mk_prop("p");
  StateId q = a.mk_prop("q");

  // nested N is rejected
  CHECK_FALSE(is_normal_form(a, a.mk_now(a.mk_now(p))));

  // N(E(X p & Finf q)) derives via S1 -> N S2 -> E S3
  StateId good = a.mk_now(a.mk_exists(a.mk_pand(a.mk_next(p), a.mk_infoften(q))));
  CHECK(is_normal_form(a, good));

  // a combination outside any N scope is rejected
  StateId bare = a.mk_exists(a.mk_pand(a.mk_next(p), a.mk_F(q)));
  CHECK_FALSE(is_normal_form(a, bare));

  // negated future atoms need the combination machinery too
  CHECK_FALSE(is_normal_form(a, a.mk_AX(p)));          // !E!X p
  CHECK(is_normal_form(a, a.mk_now(a.mk_AX(p))));

  // nested combinations are rejected even under N
  StateId inner = a.mk_exists(a.mk_pand(a.mk_F(p), a.mk_F(q)));
  StateId nested = a.mk_now(a.mk_exists(a.mk_pand(a.mk_next(inner), a.mk_F(q))));
  CHECK_FALSE(is_normal_form(a, nested));

  // plain PECTL shapes are fine in any context
  CHECK(is_normal_form(a, a.mk_and(a.mk_EU(p, q), a.mk_Y(q))));
}

TEST_CASE("normalize: N-free combination-free input gets only the prefix") {
  FormulaArena a;
  StateId f = parse_formula(a, "E(p U q) & A G p", kPQ);
  auto cert = normalize(a, f);
  CHECK(cert.formula == a.mk_now(f));
  CHECK(cert.renaming.empty());
  CHECK(is_normal_form(a, cert.formula));
}

TEST_CASE("normalize renames inner N subformulas") {
  FormulaArena a;
  StateId f = parse_formula(a, "E F (N E X p)", kPQ);
  auto cert = normalize(a, f);
  CHECK(is_normal_form(a, cert.formula));
  REQUIRE(cert.renaming.size() == 1);
  const auto& [name, def] = *cert.renaming.begin();
  CHECK(name == "_nf1");
  CHECK(def == a.mk_now(a.mk_EX(a.mk_prop("p"))));
  // the rewritten formula mentions the fresh proposition and the defining
  // conjunct AG(_nf1 <-> N E X p)
  StateId expected_core = a.mk_now(a.mk_EF(a.mk_prop("_nf1")));
  StateId conjunct = a.mk_AG(a.mk_iff(a.mk_prop("_nf1"), def));
  CHECK(cert.formula == a.mk_and(expected_core, conjunct));
}

TEST_CASE("normalize un-nests quantified combinations") {
  FormulaArena a;
  StateId p = a.mk_prop("p");
  StateId q = a.mk_prop("q");
  StateId inner = a.mk_exists(a.mk_pand(a.mk_F(p), a.mk_F(q)));
  StateId f = a.mk_exists(a.mk_pand(a.mk_next(inner), a.mk_F(q)));
  auto cert = normalize(a, f);
  CHECK(is_normal_form(a, cert.formula));
  CHECK(cert.renaming.size() == 1);
}

TEST_CASE("normalize output always passes is_normal_form") {
  FormulaArena a;
  gen::Rng rng(2024);
  for (int i = 0; i < 400; ++i) {
    StateId f = gen::pectlplusn_formula(a, rng, kPQ, 1 + i % 12);
    auto cert = normalize(a, f);
    CAPTURE(print_formula(a, f));
    REQUIRE(is_normal_form(a, cert.formula));
    CHECK(cert.output_size <= 24 * cert.input_size + 16);
  }
}

TEST_CASE("normalize preserves satisfiability on the oracle corpus") {
  FormulaArena a;
  gen::Rng rng(5150);
  EnumerateOptions opts{4, 2, 2'000'000};
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    StateId f = gen::pectlplusn_formula(a, rng, kPQ, 1 + i % 5);
    auto cert = normalize(a, f);
    bool sat_f = enumerate_models(a, f, opts).has_value();
    bool sat_nf = enumerate_models(a, cert.formula, opts).has_value();
    // fresh propositions only add labeling freedom: a model of f extends to
    // one of the normal form and a normal-form model projects back
    if (sat_f || sat_nf) ++checked;
    CHECK(sat_f == sat_nf);
  }
  CHECK(checked > 10);
}

TEST_CASE("projection: normal-form models satisfy the original") {
  FormulaArena a;
  gen::Rng rng(31337);
  EnumerateOptions opts{4, 2, 2'000'000};
  for (int i = 0; i < 40; ++i) {
    StateId f = gen::pectlplusn_formula(a, rng, kPQ, 1 + i % 5);
    auto cert = normalize(a, f);
    auto m = enumerate_models(a, cert.formula, opts);
    if (!m) continue;
    CHECK(evaluate_state(a, *m, m->root(), f));
  }
}

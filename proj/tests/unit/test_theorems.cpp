#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "json.hpp"
#include "sumess/error.hpp"
#include "sumess/theorems.hpp"

using namespace sumess;

namespace {

TheoremVerdict run(std::vector<std::uint32_t> moduli, const std::string& id) {
  return run_theorem(Analysis::build(fixtures::zmod(std::move(moduli))), id);
}

const Clause* find_clause(const TheoremVerdict& v, const std::string& scope) {
  for (const auto& c : v.clauses)
    if (c.scope == scope) return &c;
  return nullptr;
}

bool side(const Clause& c, const std::string& name) {
  for (const auto& s : c.sides)
    if (s.name == name) return s.value;
  ADD_FAILURE() << "no side " << name;
  return false;
}

void expect_pass(const TheoremVerdict& v) {
  EXPECT_TRUE(v.applicable) << v.theorem_id;
  EXPECT_TRUE(v.pass) << v.theorem_id << ": " << v.witness.value_or("");
  EXPECT_FALSE(v.witness.has_value());
}

void expect_inapplicable(const TheoremVerdict& v) {
  EXPECT_FALSE(v.applicable) << v.theorem_id;
  EXPECT_FALSE(v.pass);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_NE(v.witness->find("inapplicable"), std::string::npos);
}

}  // namespace

TEST(Clause, AgreeAndHoldSemantics) {
  Clause agree{"M", ClauseMode::Agree, {{"a", false}, {"b", false}}};
  EXPECT_TRUE(agree.satisfied());
  agree.sides[1].value = true;
  EXPECT_FALSE(agree.satisfied());
  Clause hold{"M", ClauseMode::Hold, {{"a", true}, {"b", false}}};
  EXPECT_FALSE(hold.satisfied());
  EXPECT_EQ(hold.describe(), "M [hold]: a=true; b=false");
}

TEST(Theorems, DiameterAtMostThree) {
  expect_pass(run({8, 2}, "thm-1.5"));
  expect_pass(run({4}, "thm-1.5"));
  expect_inapplicable(run({7}, "thm-1.5"));
}

TEST(Theorems, SemisimpleEqualities) {
  auto v = run({2, 3}, "prop-semisimple");
  expect_pass(v);
  EXPECT_TRUE(side(v.clauses[0], "semisimple"));
  v = run({8, 2}, "prop-semisimple");
  expect_pass(v);
  EXPECT_FALSE(side(v.clauses[0], "S(M)=N(M)"));
  v = run({4}, "prop-semisimple");
  expect_pass(v);
  EXPECT_FALSE(side(v.clauses[0], "exists X: deg_S(X)=deg_N(X)"));
}

TEST(Theorems, ExampleDegreeFormula) {
  expect_pass(run({2, 3, 5}, "ex-1.2"));
  expect_pass(run({2, 3}, "ex-1.2"));
  expect_inapplicable(run({2, 2}, "ex-1.2"));
}

TEST(Theorems, DegreeOneInS) {
  auto v = run({2, 3}, "prop-2.5");
  expect_pass(v);
  EXPECT_TRUE(side(*find_clause(v, "M"), "S has a degree-1 vertex"));
  v = run({2, 2}, "prop-2.5");
  expect_pass(v);
  EXPECT_FALSE(side(*find_clause(v, "M"), "S has a degree-1 vertex"));
  v = run({27}, "prop-2.5");
  expect_pass(v);
  EXPECT_TRUE(side(*find_clause(v, "M"), "twin-free simple or two-vertex chain"));
}

TEST(Theorems, DegreeOneInN) {
  const auto a = Analysis::build(fixtures::zmod({4, 3}));
  const auto v = run_theorem(a, "thm-2.13");
  expect_pass(v);
  std::size_t deg1 = 0;
  for (const auto& c : v.clauses)
    if (c.mode == ClauseMode::Agree && c.sides.size() == 4 && c.sides[0].value) ++deg1;
  EXPECT_EQ(deg1, 2u);

  const auto w = run({9, 9}, "thm-2.13");
  expect_pass(w);
  for (const auto& c : w.clauses)
    if (c.sides.size() == 4) {
      EXPECT_FALSE(c.sides[0].value);
    }

  const auto x = run({2, 3, 5}, "thm-2.13");
  expect_pass(x);
  expect_inapplicable(run({4}, "thm-2.13"));
}

TEST(Theorems, ElementWitnessIsConstructed) {
  const auto v = run_theorem(Analysis::build(fixtures::spec("t2f2_column_top")), "thm-2.13");
  expect_pass(v);
  std::size_t built = 0;
  for (const auto& c : v.clauses)
    if (c.scope.rfind("element-witness", 0) == 0 && c.sides.size() == 6) {
      ++built;
      EXPECT_TRUE(c.satisfied());
    }
  EXPECT_EQ(built, 2u);
}

TEST(Theorems, DegreeOneInteractions) {
  expect_pass(run({4, 3}, "thm-2.18"));
  const auto v = run({2, 3}, "thm-2.18");
  expect_pass(v);
  const auto w = run({2, 2}, "thm-2.18");
  expect_pass(w);
  ASSERT_FALSE(w.notes.empty());
  EXPECT_EQ(w.notes[0], "no degree-1 vertices in N(M)");
}

TEST(Theorems, CompleteCharacterizations) {
  auto v = run({2, 2}, "thm-3.2");
  expect_pass(v);
  EXPECT_TRUE(side(*find_clause(v, "vertex count"), "|V(S)|=|Hom(S1,S2)|+1"));
  v = run_theorem(Analysis::build(matrix_ring_regular_module()), "thm-3.2");
  expect_pass(v);
  EXPECT_TRUE(side(*find_clause(v, "complete S(M)"), "S complete"));
  v = run({8, 2}, "thm-3.2");
  expect_pass(v);
  EXPECT_FALSE(side(*find_clause(v, "complete S(M)"), "S complete"));
}

TEST(Theorems, TriangleFreeTreeGirth) {
  expect_pass(run({4, 9}, "thm-3.7-3.12"));
  expect_pass(run({8, 3}, "thm-3.7-3.12"));
  expect_pass(run({2, 3, 5}, "thm-3.7-3.12"));
  auto v = run({4, 9}, "thm-girth-N");
  expect_pass(v);
  EXPECT_EQ(v.notes[0], "girth(N) = 4");
  v = run({8, 3}, "thm-3.12");
  expect_pass(v);
  EXPECT_TRUE(v.clauses[0].sides[0].value);
  v = run({2, 3}, "thm-3.7");
  expect_pass(v);
  EXPECT_TRUE(side(v.clauses[0], "S = K2"));
  v = run({2, 3, 5}, "thm-girth-N");
  EXPECT_EQ(v.notes[0], "girth(N) = 3");
  expect_inapplicable(run({4}, "thm-3.11"));
}

TEST(Theorems, NPartite) {
  auto v = run({2, 3}, "prop-3.14");
  expect_pass(v);
  EXPECT_TRUE(side(v.clauses[0], "semisimple"));
  v = run({4, 3}, "prop-3.14");
  expect_pass(v);
  EXPECT_EQ(v.notes[0].rfind("clique:", 0), 0u);
  expect_pass(run({2, 2}, "prop-3.14"));
  expect_inapplicable(run({8}, "prop-3.14"));
}

TEST(Theorems, FinitenessConditions) {
  auto v = run({8, 2}, "thm-2.1");
  expect_pass(v);
  EXPECT_TRUE(side(*find_clause(v, "(4) branches exclusive"), "(i) proper essential submodule"));
  v = run({2, 2}, "thm-2.1");
  expect_pass(v);
  EXPECT_EQ(v.notes.back(), "pairwise |Hom|: 2");
  v = run({2, 3}, "thm-2.1");
  EXPECT_EQ(v.notes.back(), "pairwise |Hom|: 1");
}

TEST(Catalog, AllExpandsInOrder) {
  const auto a = Analysis::build(fixtures::zmod({8, 2}));
  const auto verdicts = run_catalog(a, {"all"});
  ASSERT_EQ(verdicts.size(), default_theorem_ids().size());
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    EXPECT_EQ(verdicts[i].theorem_id, default_theorem_ids()[i]);
    EXPECT_TRUE(verdicts[i].pass || !verdicts[i].applicable);
  }
  EXPECT_EQ(run_catalog(a, {"thm-1.5"}).size(), 1u);
}

TEST(Catalog, UnknownIdThrows) {
  const auto a = Analysis::build(fixtures::zmod({4}));
  EXPECT_THROW(run_catalog(a, {"thm-9.9"}), UnknownTheoremId);
  EXPECT_THROW(run_theorem(a, "nope"), UnknownTheoremId);
}

TEST(Catalog, NStatementsInapplicableForUniform) {
  const auto a = Analysis::build(fixtures::zmod({4}));
  for (const auto& v : run_catalog(a, {"thm-2.13", "thm-2.18", "thm-3.11", "thm-3.12", "thm-girth-N"}))
    expect_inapplicable(v);
}

TEST(Catalog, Deterministic) {
  const auto a = Analysis::build(fixtures::zmod({8, 2}));
  const auto b = Analysis::build(fixtures::zmod({8, 2}));
  const auto va = run_catalog(a, known_theorem_ids());
  const auto vb = run_catalog(b, known_theorem_ids());
  ASSERT_EQ(va.size(), vb.size());
  for (std::size_t i = 0; i < va.size(); ++i) EXPECT_EQ(verdict_json(va[i]), verdict_json(vb[i]));
}

TEST(Catalog, JsonShape) {
  const auto v = run({2, 3}, "thm-3.7");
  const auto j = nlohmann::json::parse(verdict_json(v));
  EXPECT_EQ(j["theorem_id"], "thm-3.7");
  EXPECT_EQ(j["pass"], true);
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_EQ(j["clauses"][0]["mode"], "agree");
  EXPECT_NE(verdict_text(v).find("thm-3.7: PASS"), std::string::npos);
}

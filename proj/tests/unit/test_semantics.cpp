#include <doctest.h>

#include <functional>

#include "generators.hpp"
#include "naive.hpp"
#include "primal/pl_decider.hpp"
#include "primal/semantics.hpp"
#include "primal/syntax.hpp"

using namespace primal;

namespace {

Formula f(std::string_view s) { return parse_formula(s); }
Sequent seq(std::string_view s) { return parse_sequent(s); }

// Two worlds, lower ≤ upper. Lower: no atoms, only x -> x. Upper: x and
// every declared implication.
KripkeModel two_worlds() {
  std::vector<Formula> imps{f("x -> x"), f("x -> (x & x)"), f("(x & x) -> x")};
  KripkeModel::World lower, upper;
  lower.true_implications = {f("x -> x")};
  upper.true_atoms = {f("x")};
  upper.true_implications = {imps.begin(), imps.end()};
  return KripkeModel({{true, true}, {false, true}}, {lower, upper}, imps);
}

// Classical truth table written out directly.
bool naive_classical(const Sequent& s) {
  std::vector<Formula> vars = variables(s);
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << vars.size()); ++row) {
    Valuation v;
    for (std::size_t i = 0; i < vars.size(); ++i) v.assignment[std::string(vars[i].name())] = (row >> i) & 1;
    std::function<bool(Formula)> ev = [&](Formula g) -> bool {
      switch (g.kind()) {
        case Kind::Var: return v.value_of(g);
        case Kind::Top: return true;
        case Kind::Bot: return false;
        case Kind::And: return ev(g.left()) && ev(g.right());
        case Kind::Or: return ev(g.left()) || ev(g.right());
        case Kind::Imp: return !ev(g.left()) || ev(g.right());
      }
      return false;
    };
    bool ants = true;
    for (Formula a : s.antecedents()) ants = ants && ev(a);
    if (ants && !ev(s.consequent())) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("degenerate valuations") {
  Valuation none;
  CHECK(!evaluate_valuation(none, seq("|- x1")));
  CHECK(evaluate_valuation(none, seq("|- top")));
  CHECK(evaluate_degenerate(none, f("x -> top")));
  CHECK(!evaluate_degenerate(none, f("top -> x")));
  for (bool a : {false, true}) {
    for (bool b : {false, true}) {
      Valuation v;
      v.assignment = {{"x1", a}, {"x2", b}};
      CHECK(evaluate_valuation(v, seq("x1 -> x2 |- x2")));
    }
  }
  CHECK_THROWS_AS(evaluate_degenerate(none, f("x | y")), DisjunctionError);
}

TEST_CASE("soundness_check") {
  Proof p;
  p.steps.push_back(ProofStep{seq("x1 -> x2 |- x1 -> x2"), RuleTag::X2X, {}});
  p.steps.push_back(ProofStep{seq("x1 -> x2 |- x2"), RuleTag::ImpED, {0}});
  CHECK(!soundness_check(p));
  CHECK(!soundness_check_reference(p));

  Proof bad;
  bad.steps.push_back(ProofStep{seq("x |- x"), RuleTag::X2X, {}});
  bad.steps.push_back(ProofStep{seq("|- x"), RuleTag::X2X, {}});
  auto fail = soundness_check(bad);
  REQUIRE(fail);
  CHECK(fail->step == 1);
  CHECK(soundness_check_reference(bad)->step == 1);

  Rng rng(41);
  testing::FormulaShape shape{testing::atoms(4), 11, true, true, false, 20};
  for (int i = 0; i < 300; ++i) {
    Proof q = testing::random_proof(rng, shape, 15, true);
    REQUIRE(!check_proof(q, LogicId{LogicName::PL_ED, false}));
    CHECK(!soundness_check(q, true));
    CHECK(!soundness_check(q, false));
  }
}

TEST_CASE("classical truth tables") {
  CHECK(!decide_cl_truthtable(seq("x1 -> x2 |- x2")));
  CHECK(decide_cl_truthtable(seq("bot |- y")));
  CHECK(decide_cl_truthtable(seq("|- x | (x -> bot)")));
  CHECK(decide_cl_truthtable(seq("|- ((x -> y) -> x) -> x")));
  CHECK(!decide_cl_truthtable(seq("x | y |- x")));
  CHECK_THROWS_AS(decide_cl_truthtable(seq("x1 & x2 & x3 |- x4"), 3), VariableCapError);

  Rng rng(42);
  testing::FormulaShape shape{testing::atoms(4, true, true), 13, true, true, true, 10};
  for (int i = 0; i < 3000; ++i) {
    std::vector<Formula> ants{testing::random_formula(rng, shape)};
    Sequent s(ants, testing::random_formula(rng, shape));
    bool want = naive_classical(s);
    CHECK(decide_cl_truthtable(s, 20, true) == want);
    CHECK(decide_cl_truthtable(s, 20, false) == want);
    CHECK(decide_cl_truthtable_reference(s) == want);
  }
}

TEST_CASE("the two-world model") {
  KripkeModel m = two_worlds();
  CHECK(!model_check(m, 0, seq("x -> x |- (x & x) -> x")));
  CHECK(!model_check(m, 0, seq("x -> x |- x -> (x & x)")));
  CHECK(model_check(m, 1, seq("|- x")));
  CHECK(!model_check(m, 0, seq("|- x")));
  for (const char* s : {"x |- x", "x -> x |- x -> x", "x & x |- x & x"}) {
    CHECK(model_check(m, 0, seq(s)));
    CHECK(model_check(m, 1, seq(s)));
  }
  CHECK_THROWS_AS(m.holds(0, f("y -> x")), ModelError);
}

TEST_CASE("invalid models are rejected") {
  std::vector<Formula> imps{f("x -> x")};
  KripkeModel::World w;
  w.true_atoms = {f("x")};
  // Condition 1: x true forces x -> x.
  CHECK_THROWS_AS(KripkeModel({{true}}, {w}, imps), ModelError);
  // Condition 2: y and y -> x true but x false.
  std::vector<Formula> yx{f("y -> x")};
  KripkeModel::World w2;
  w2.true_atoms = {f("y")};
  w2.true_implications = {f("y -> x")};
  CHECK_THROWS_AS(KripkeModel({{true}}, {w2}, yx), ModelError);
  // Monotonicity: x true below, false above.
  KripkeModel::World lo, hi;
  lo.true_atoms = {f("x")};
  lo.true_implications = {f("x -> x")};
  CHECK_THROWS_AS(KripkeModel({{true, true}, {false, true}}, {lo, hi}, imps), ModelError);
  // Universe not closed under implication subformulas.
  std::vector<Formula> open{f("(x -> y) -> z")};
  CHECK_THROWS_AS(KripkeModel({{true}}, {KripkeModel::World{}}, open), ModelError);
}

TEST_CASE("countermodel search") {
  auto c = countermodel_search(seq("x -> x |- (x & x) -> x"), 2);
  REQUIRE(c);
  CHECK(!model_check(c->model, c->world, seq("x -> x |- (x & x) -> x")));
  CHECK(!countermodel_search(seq("|- top"), 2));
  CHECK(!countermodel_search(seq("x |- x & x"), 1));
  CHECK(!countermodel_search(seq("x |- x & x"), 2));
  CHECK(!format_countermodel(*c).empty());
  CHECK(format_countermodel_kv(*c).find("world=") != std::string::npos);
}

TEST_CASE("countermodels exist exactly for PL non-theorems") {
  Rng rng(43);
  testing::FormulaShape shape{testing::atoms(2), 7, true, true, false, 25};
  for (int i = 0; i < 600; ++i) {
    std::vector<Formula> ants{testing::random_formula(rng, shape)};
    Sequent s(ants, testing::random_formula(rng, shape));
    bool theorem = testing::naive_pl(s);
    auto c = countermodel_search(s, 2);
    CHECK(c.has_value() == !theorem);
    if (c) CHECK(!model_check(c->model, c->world, s));
    auto least = least_world(subformulas(s), s.antecedents());
    CHECK(least.count(s.consequent()) == static_cast<std::size_t>(theorem));
  }
}

TEST_CASE("intuitionistic countermodels") {
  auto lem = intuitionistic_countermodel(seq("|- x | (x -> bot)"), true);
  REQUIRE(lem);
  CHECK(!model_check(*lem, 0, seq("|- x | (x -> bot)")));
  CHECK(!intuitionistic_countermodel(seq("bot |- x"), true));
  CHECK(intuitionistic_countermodel(seq("bot |- x"), false));
  CHECK(!intuitionistic_countermodel(seq("x, x -> y |- y"), false));
  CHECK(intuitionistic_countermodel(seq("x |- y"), false));
}

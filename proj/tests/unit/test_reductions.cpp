#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "primal/oracle.hpp"
#include "primal/reductions.hpp"
#include "primal/semantics.hpp"
#include "primal/syntax.hpp"

using namespace primal;

namespace {

Formula f(std::string_view s) { return parse_formula(s); }
Sequent seq(std::string_view s) { return parse_sequent(s); }

bool has(const std::vector<Formula>& v, Formula g) { return std::find(v.begin(), v.end(), g) != v.end(); }

}  // namespace

TEST_CASE("clor-to-cl") {
  CHECK(clor_to_cl(f("x | y")) == f("(x -> bot) -> ((y -> bot) -> bot)"));
  CHECK(clor_to_cl(f("x -> y")) == f("x -> y"));
  Sequent lem = seq("|- x | (x -> bot)");
  CHECK(decide_cl_truthtable(reduce_clor_to_cl(lem)));
  CHECK(!reduce_clor_to_cl(lem).has_disjunction());
}

TEST_CASE("clor-to-cl is idempotent and preserves classical validity") {
  Rng rng(51);
  testing::FormulaShape shape{testing::atoms(3, true, true), 13, true, true, true, 10};
  for (int i = 0; i < 3000; ++i) {
    std::vector<Formula> ants{testing::random_formula(rng, shape)};
    Sequent s(ants, testing::random_formula(rng, shape));
    Sequent t = reduce_clor_to_cl(s);
    CHECK(reduce_clor_to_cl(t) == t);
    CHECK(!t.has_disjunction());
    CHECK(decide_cl_truthtable(s) == decide_cl_truthtable(t));
  }
}

TEST_CASE("il-to-ml") {
  CHECK(reduce_il_to_ml(seq("bot |- x")) == seq("bot, bot -> x |- x"));
  CHECK(reduce_il_to_ml(seq("|- top")) == seq("|- top"));
  Sequent img = reduce_il_to_ml(seq("x |- y"));
  CHECK(img == seq("x, bot -> x, bot -> y |- y"));
  CHECK(intuitionistic_countermodel(img, false, 2));

  SaturationConfig ml;
  ml.logic = LogicId{LogicName::ML, false};
  CHECK(oracle_decide(reduce_il_to_ml(seq("bot |- x")), ml) == OracleVerdict::Theorem);
  CHECK(reduce_il_to_ml(seq("x & y |- z")).length() <= 3 * seq("x & y |- z").length() + 10);
}

TEST_CASE("ml-to-pel helpers") {
  std::vector<Formula> h1 = ml_to_pel1_helpers(seq("|- x -> x"));
  CHECK(has(h1, f("(x & x) -> (x & x)")));
  CHECK(has(h1, f("(x -> (x & x)) -> (x -> x)")));
  std::vector<Formula> h2 = ml_to_pel2_helpers(seq("|- x -> x"));
  CHECK(has(h2, f("x -> x")));
  CHECK(has(h2, f("(x -> (x & x)) -> (x -> x)")));

  CHECK(ml_to_pel1_helpers(seq("|- top")).size() == 2);
  CHECK(ml_to_pel2_helpers(seq("|- top")).size() == 2);

  // S = {x, y, x -> y}: 2|S|^2 and |S| + |S|^2.
  CHECK(ml_to_pel1_helpers(seq("|- x -> y")).size() == 18);
  CHECK(ml_to_pel2_helpers(seq("|- x -> y")).size() == 12);

  Sequent img = reduce_ml_to_pel1(seq("|- x -> y"));
  CHECK(img.consequent() == f("x -> y"));
  CHECK(img.antecedents().size() == 18);
  CHECK_THROWS_AS(reduce_ml_to_pel2(seq("x | y |- x")), DisjunctionError);
}

TEST_CASE("ml-to-pel1 makes |- x -> x derivable") {
  SaturationConfig c;
  c.logic = LogicId{LogicName::PEL1, false};
  CHECK(oracle_decide(reduce_ml_to_pel1(seq("|- x -> x")), c) == OracleVerdict::Theorem);
  c.logic = LogicId{LogicName::PEL2, false};
  CHECK(oracle_decide(reduce_ml_to_pel2(seq("|- x -> x")), c) == OracleVerdict::Theorem);
}

TEST_CASE("reduction names") {
  for (ReductionId id : {ReductionId::ClOrToCl, ReductionId::IlToMl, ReductionId::MlToPel1, ReductionId::MlToPel2}) {
    CHECK(parse_reduction(reduction_name(id)) == id);
  }
  CHECK(!parse_reduction("pl-to-cl"));
  CHECK(apply_reduction(ReductionId::IlToMl, seq("bot |- x")) == seq("bot, bot -> x |- x"));
}

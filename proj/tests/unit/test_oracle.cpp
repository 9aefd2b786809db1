#include <doctest.h>

#include <set>
#include <sstream>

#include "naive.hpp"
#include "primal/oracle.hpp"
#include "primal/pel0_decider.hpp"
#include "primal/syntax.hpp"

using namespace primal;

namespace {

Sequent seq(std::string_view s) { return parse_sequent(s); }

SaturationConfig config(LogicName n, bool disj = false) {
  SaturationConfig c;
  c.logic = LogicId{n, disj};
  return c;
}

bool contains(const std::vector<Sequent>& v, const Sequent& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

}  // namespace

TEST_CASE("saturation examples") {
  SaturationResult pl = saturate(seq("x |- x & x"), config(LogicName::PL), true);
  CHECK(pl.verdict == OracleVerdict::Theorem);
  CHECK(contains(pl.derived, seq("x |- x & x")));

  CHECK(oracle_decide(seq("x -> x |- (x & x) -> x"), config(LogicName::PEL0)) == OracleVerdict::Theorem);
  CHECK(oracle_decide(seq("x -> x |- (x & x) -> x"), config(LogicName::PL)) == OracleVerdict::NotDerived);
  CHECK(oracle_decide(seq("x -> x |- (x & x) -> x"), config(LogicName::PEL1_0)) == OracleVerdict::Theorem);
  CHECK(oracle_decide(seq("x -> x |- x -> (x & x)"), config(LogicName::PEL2_0)) == OracleVerdict::Theorem);
  CHECK(oracle_decide(seq("x -> x |- x -> (x & x)"), config(LogicName::PEL1_0)) == OracleVerdict::NotDerived);

  SaturationResult bl = saturate(seq("x -> y, y |- y"), config(LogicName::BL), true);
  CHECK(bl.verdict == OracleVerdict::Theorem);
  for (const Sequent& s : bl.derived) {
    bool trivial = s.consequent() == Formula::top() || s.has_antecedent(s.consequent());
    CHECK_MESSAGE(trivial, to_string(s));
  }
  CHECK(oracle_decide(seq("x, x -> y |- y"), config(LogicName::BL)) == OracleVerdict::NotDerived);
}

TEST_CASE("saturation with antecedent-adding rules") {
  CHECK(oracle_decide(seq("|- x -> x"), config(LogicName::ML)) == OracleVerdict::Theorem);
  CHECK(oracle_decide(seq("|- x -> x"), config(LogicName::PL)) == OracleVerdict::NotDerived);
  CHECK(oracle_decide(seq("bot |- x"), config(LogicName::IL)) == OracleVerdict::Theorem);
  CHECK(oracle_decide(seq("bot |- x"), config(LogicName::ML)) != OracleVerdict::Theorem);
  CHECK(oracle_decide(seq("x | y |- y | x"), config(LogicName::ML, true)) == OracleVerdict::Theorem);
  CHECK(oracle_decide(seq("x -> y |- y"), config(LogicName::PL_ED)) == OracleVerdict::Theorem);
}

TEST_CASE("a tiny step bound makes a non-derivation inconclusive") {
  SaturationConfig c = config(LogicName::ML);
  c.step_bound = 3;
  SaturationResult r = saturate(seq("x, y |- z -> (x & y & x)"), c);
  CHECK(r.partial);
  CHECK(r.verdict != OracleVerdict::NotDerived);
}

TEST_CASE("closure oracle agrees with the naive PL closure") {
  std::vector<Formula> fs = enumerate_formulas(2, 1, Connectives{});
  ClosureOracle o(LogicId{LogicName::PL, false}, fs);
  for (Formula a : fs) {
    for (Formula b : fs) {
      for (Formula c : fs) {
        Sequent s({a, b}, c);
        CHECK(o.derivable(s) == testing::naive_pl(s));
      }
    }
  }
}

TEST_CASE("enlarging the universe leaves PEL0 answers unchanged") {
  std::vector<Formula> small = enumerate_formulas(1, 1, Connectives{});
  std::vector<Formula> big = enumerate_formulas(1, 2, Connectives{});
  ClosureOracle a(LogicId{LogicName::PEL0, false}, small), b(LogicId{LogicName::PEL0, false}, big);
  for (Formula g : small) {
    for (Formula h : small) {
      Sequent s({g}, h);
      CHECK(a.derivable(s) == b.derivable(s));
      CHECK(a.derivable(s) == decide_pel0(s));
    }
  }
}

TEST_CASE("enumeration counts and order") {
  SequentFamily fam;
  fam.vars = 1;
  fam.max_depth = 1;
  fam.max_antecedents = 1;
  CHECK(count_small_sequents(fam) == 110);
  std::vector<Sequent> all = enumerate_small_sequents(fam);
  CHECK(all.size() == 110);
  std::set<std::string> distinct;
  for (const Sequent& s : all) distinct.insert(to_string(s));
  CHECK(distinct.size() == 110);
  CHECK(all == enumerate_small_sequents(fam));

  SequentFamily atoms_only;
  atoms_only.max_depth = 0;
  atoms_only.connectives = Connectives{true, false, false, false};
  std::vector<Sequent> a = enumerate_small_sequents(atoms_only);
  CHECK(a.size() == 6);
  CHECK(to_string(a[0]) == "|- x");

  CHECK(enumerate_formulas(2, 2, Connectives{}).size() == 3 + 2 * 21 * 21);
  CHECK_THROWS_AS(enumerate_small_sequents(fam, 100), EnumerationCapError);
}

TEST_CASE("verdict names") {
  CHECK(verdict_name(OracleVerdict::Theorem) == "THEOREM");
  CHECK(verdict_name(OracleVerdict::NotDerived) == "NOT-DERIVED");
  CHECK(verdict_name(OracleVerdict::Inconclusive) == "INCONCLUSIVE");
}

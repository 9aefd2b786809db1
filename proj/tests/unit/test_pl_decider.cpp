#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "naive.hpp"
#include "primal/pl_decider.hpp"
#include "primal/syntax.hpp"

using namespace primal;

namespace {

Formula f(std::string_view s) { return parse_formula(s); }
bool pl(std::string_view s) { return decide_pl(parse_sequent(s)); }

Sequent random_sequent(Rng& rng, const testing::FormulaShape& shape, std::size_t max_ants) {
  std::vector<Formula> ants;
  for (std::uint64_t k = rng.below(max_ants + 1); k > 0; --k) ants.push_back(testing::random_formula(rng, shape));
  return Sequent(ants, testing::random_formula(rng, shape));
}

}  // namespace

TEST_CASE("decide_pl examples") {
  CHECK(!pl("x -> x |- (x & x) -> x"));
  CHECK(!pl("x -> x |- x -> (x & x)"));
  CHECK(pl("|- top"));
  CHECK(pl("x |- x & x"));
  CHECK(pl("x & x |- x"));
  CHECK(!pl("bot |- x"));
  CHECK(!pl("x -> y |- y"));
  CHECK(pl("y |- x -> y"));
  CHECK(pl("x, y |- (y & x) & top"));
}

TEST_CASE("decide_pl_multi") {
  std::vector<Formula> hyps{f("x"), f("x -> y")};
  std::vector<Formula> qs{f("y"), f("y -> x"), f("x -> z"), f("z")};
  std::vector<bool> got = decide_pl_multi(hyps, qs);
  CHECK(got == std::vector<bool>{true, true, false, false});
  std::vector<Formula> none;
  std::vector<Formula> top{Formula::top()};
  CHECK(decide_pl_multi(none, top) == std::vector<bool>{true});
}

TEST_CASE("disjunction is rejected") {
  CHECK_THROWS_AS(pl("x | y |- x"), DisjunctionError);
  CHECK_THROWS_AS(pl("x |- x | y"), DisjunctionError);
}

TEST_CASE("trace lines") {
  std::vector<ClosureEvent> t = trace_pl(parse_sequent("x, x -> y |- y"));
  REQUIRE(t.size() >= 3);
  std::vector<std::string> lines;
  for (const ClosureEvent& e : t) lines.push_back(format_event(e));
  CHECK(std::find(lines.begin(), lines.end(), "derived y by ImpE from x, x -> y") != lines.end());
  CHECK(std::find(lines.begin(), lines.end(), "derived x by X2X from x") != lines.end());
}

TEST_CASE("agreement with the naive closure") {
  Rng rng(21);
  testing::FormulaShape shape{testing::atoms(3, true, true), 11, true, true, false, 25};
  for (int i = 0; i < 20000; ++i) {
    Sequent s = random_sequent(rng, shape, 3);
    CHECK_MESSAGE(decide_pl(s) == testing::naive_pl(s), to_string(s));
  }
}

TEST_CASE("extracted proofs check under PL") {
  Rng rng(22);
  testing::FormulaShape shape{testing::atoms(2), 9, true, true, false, 25};
  int found = 0;
  for (int i = 0; i < 5000; ++i) {
    Sequent s = random_sequent(rng, shape, 3);
    std::optional<Proof> p = extract_pl_proof(s);
    CHECK(p.has_value() == decide_pl(s));
    if (!p) continue;
    ++found;
    CHECK(!check_proof(*p, LogicId{LogicName::PL, false}));
    CHECK(p->conclusion() == s);
  }
  CHECK(found > 500);
}

TEST_CASE("monotone in hypotheses and closed under cut") {
  Rng rng(23);
  testing::FormulaShape shape{testing::atoms(2), 9, true, true, false, 25};
  for (int i = 0; i < 5000; ++i) {
    Sequent s = random_sequent(rng, shape, 2);
    Formula extra = testing::random_formula(rng, shape);
    if (decide_pl(s)) CHECK(decide_pl(s.with_antecedent(extra)));
    Formula psi = testing::random_formula(rng, shape);
    if (decide_pl(s) && decide_pl(s.with_antecedent(s.consequent()).with_consequent(psi))) {
      CHECK(decide_pl(s.with_consequent(psi)));
    }
  }
}

TEST_CASE("closure reuse with checkpoints") {
  std::vector<Formula> roots{f("x"), f("x -> y"), f("y & x"), f("z")};
  PlUniverse u(roots);
  PlClosure c(u);
  c.run(std::vector<Formula>{f("x")});
  auto cp = c.checkpoint();
  CHECK(!c.derived(f("y")));
  std::uint32_t imp = u.index_of(f("x -> y"));
  c.extend_indices(std::span<const std::uint32_t>(&imp, 1));
  CHECK(c.derived(f("y & x")));
  c.rollback(cp);
  CHECK(!c.derived(f("y")));
  CHECK(c.derived(f("x")));
  CHECK(!c.derived(f("x -> y")));
}

TEST_CASE("batch agrees with single calls") {
  Rng rng(24);
  testing::FormulaShape shape{testing::atoms(3), 11, true, true, false, 25};
  std::vector<Sequent> batch;
  for (int i = 0; i < 2000; ++i) batch.push_back(random_sequent(rng, shape, 3));
  std::vector<std::uint8_t> par = decide_pl_batch(batch, true), ser = decide_pl_batch(batch, false);
  CHECK(par == ser);
  for (std::size_t i = 0; i < batch.size(); ++i) CHECK(ser[i] == decide_pl(batch[i]));
}

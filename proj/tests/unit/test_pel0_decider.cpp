#include <doctest.h>

#include <chrono>

#include "generators.hpp"
#include "primal/oracle.hpp"
#include "primal/pel0_decider.hpp"
#include "primal/pl_decider.hpp"
#include "primal/syntax.hpp"

using namespace primal;

namespace {

const LogicId kPel0{LogicName::PEL0, false};

Formula f(std::string_view s) { return parse_formula(s); }
bool pel0(std::string_view s) { return decide_pel0(parse_sequent(s)); }

bool oracle_equivalent(Formula a, Formula b) {
  std::vector<Formula> roots{a, b};
  ClosureOracle o(kPel0, roots);
  return o.derivable(Sequent({a}, b)) && o.derivable(Sequent({b}, a));
}

// No two distinct subformulas of the outputs are PEL0-equivalent.
bool free_of_equivalents(std::span<const Formula> fs) {
  std::vector<Formula> sub = subformulas(fs);
  ClosureOracle o(kPel0, sub);
  for (std::size_t i = 0; i < sub.size(); ++i) {
    for (std::size_t j = i + 1; j < sub.size(); ++j) {
      if (o.derivable(Sequent({sub[i]}, sub[j])) && o.derivable(Sequent({sub[j]}, sub[i]))) return false;
    }
  }
  return true;
}

std::vector<Formula> random_forest(Rng& rng, const testing::FormulaShape& shape, std::size_t max) {
  std::vector<Formula> out;
  for (std::uint64_t k = 1 + rng.below(max); k > 0; --k) out.push_back(testing::random_formula(rng, shape));
  return out;
}

}  // namespace

TEST_CASE("pel0_equivalent examples") {
  CHECK(pel0_equivalent(f("x"), f("x")));
  CHECK(pel0_equivalent(f("x"), f("x & x")));
  CHECK(!pel0_equivalent(f("x"), f("y")));
  CHECK(pel0_equivalent(f("x & y"), f("y & x")));
}

TEST_CASE("decide_pel0 examples") {
  CHECK(pel0("x -> x |- (x & x) -> x"));
  CHECK(pel0("x -> x |- x -> (x & x)"));
  CHECK(!pel0("|- x -> y"));
  CHECK(pel0("(x & y) -> z |- (y & x) -> z"));
  CHECK(!pel0("x -> y |- y"));
  std::vector<Formula> h{f("x -> x")};
  std::vector<Formula> q{f("(x & x) -> x"), f("x -> (x & x)"), f("x -> y")};
  CHECK(decide_pel0_multi(h, q) == std::vector<bool>{true, true, false});
  CHECK_THROWS_AS(pel0("x | y |- x"), DisjunctionError);
}

TEST_CASE("normalize examples") {
  std::vector<Formula> xx{f("x"), f("x")};
  CHECK(normalize_free_of_equivalents(xx) == xx);
  std::vector<Formula> one{f("(x & x) -> y")};
  CHECK(normalize_free_of_equivalents(one) == std::vector<Formula>{f("x -> y")});
  std::vector<Formula> two{f("x & (x & x)")};
  std::vector<Formula> out = normalize_free_of_equivalents(two);
  REQUIRE(out.size() == 1);
  CHECK(out[0].length() <= two[0].length());
  CHECK(oracle_equivalent(out[0], two[0]));
  CHECK(free_of_equivalents(out));
  // Over {x, &} every formula is equivalent to x, so x is the shortest form.
  CHECK(out[0] == f("x"));
  CHECK(normalize_sequent(parse_sequent("x -> x |- (x & x) -> x")) == parse_sequent("x -> x |- x -> x"));
}

TEST_CASE("normalization properties on random forests") {
  Rng rng(31);
  testing::FormulaShape shape{testing::atoms(2), 11, true, true, false, 30};
  for (int i = 0; i < 400; ++i) {
    std::vector<Formula> in = random_forest(rng, shape, 3);
    NormalizeOptions checked;
    checked.check_invariants = true;
    std::vector<Formula> out = normalize_free_of_equivalents(in, checked);
    REQUIRE(out.size() == in.size());
    CHECK(out == normalize_reference(in));
    CHECK(out == normalize_free_of_equivalents(out));
    for (std::size_t k = 0; k < in.size(); ++k) {
      CHECK(out[k].length() <= in[k].length());
      CHECK(oracle_equivalent(in[k], out[k]));
    }
    CHECK(free_of_equivalents(out));
  }
}

TEST_CASE("fingerprints do not change results") {
  Rng rng(32);
  testing::FormulaShape shape{testing::atoms(3), 15, true, true, false, 30};
  NormalizeOptions plain;
  plain.use_fingerprints = false;
  for (int i = 0; i < 300; ++i) {
    std::vector<Formula> in = random_forest(rng, shape, 4);
    NormalizeStats fast, slow;
    CHECK(normalize_free_of_equivalents(in, {}, &fast) == normalize_free_of_equivalents(in, plain, &slow));
    CHECK(fast.equivalence_checks <= slow.equivalence_checks);
  }
}

TEST_CASE("a passed deadline raises NormalizeTimeout") {
  NormalizeOptions o;
  o.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  std::vector<Formula> in{f("(x & x) -> (y & (y -> x))")};
  CHECK_THROWS_AS(normalize_free_of_equivalents(in, o), NormalizeTimeout);
}

TEST_CASE("PL theorems are PEL0 theorems and PEL0 agrees with the oracle") {
  Rng rng(33);
  testing::FormulaShape shape{testing::atoms(2), 9, true, true, false, 35};
  for (int i = 0; i < 3000; ++i) {
    std::vector<Formula> ants;
    for (std::uint64_t k = rng.below(3); k > 0; --k) ants.push_back(testing::random_formula(rng, shape));
    Sequent s(ants, testing::random_formula(rng, shape));
    bool got = decide_pel0(s);
    if (decide_pl(s)) CHECK(got);
    ClosureOracle o(kPel0, members(s));
    CHECK_MESSAGE(got == o.derivable(s), to_string(s));
  }
}

TEST_CASE("batch agrees with single calls") {
  Rng rng(34);
  testing::FormulaShape shape{testing::atoms(3), 11, true, true, false, 30};
  std::vector<Sequent> batch;
  for (int i = 0; i < 500; ++i) {
    std::vector<Formula> ants{testing::random_formula(rng, shape)};
    batch.emplace_back(ants, testing::random_formula(rng, shape));
  }
  std::vector<std::uint8_t> par = decide_pel0_batch(batch, true), ser = decide_pel0_batch(batch, false);
  CHECK(par == ser);
  for (std::size_t i = 0; i < batch.size(); ++i) CHECK(ser[i] == decide_pel0(batch[i]));
}

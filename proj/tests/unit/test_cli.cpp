#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "primal/syntax.hpp"

using namespace primal;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(PRIMAL_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("decide") {
  Run a = run({"decide", "--logic", "pel0", "x -> x |- (x & x) -> x"});
  CHECK(a.code == 0);
  CHECK(a.out == "THEOREM\n");
  Run b = run({"decide", "--logic", "pl", "x -> x |- (x & x) -> x"});
  CHECK(b.code == 1);
  CHECK(b.out == "NON-THEOREM\n");
  Run c = run({"decide", "--logic", "cl", "(x1 -> x2) |- x2"});
  CHECK(c.code == 1);
  CHECK(c.out == "NON-THEOREM\n");
  CHECK(run({"decide", "--logic", "cl-or", "|- x | (x -> bot)"}).code == 0);
}

TEST_CASE("decide flags") {
  Run t = run({"decide", "--logic", "pl", "--trace", "x, x -> y |- y"});
  CHECK(t.code == 0);
  CHECK(t.out.find("derived y by ImpE from x, x -> y\n") != std::string::npos);
  CHECK(t.out.substr(t.out.size() - 8) == "THEOREM\n");

  Run n = run({"decide", "--logic", "pel0", "--emit-normalized", "x -> x |- (x & x) -> x"});
  CHECK(n.out.find("normalized: x -> x |- x -> x\n") == 0);

  Run m = run({"decide", "--logic", "pl", "--countermodel", "x -> x |- (x & x) -> x"});
  CHECK(m.code == 1);
  CHECK(m.out.find("NON-THEOREM\n") == 0);
  CHECK(m.out.size() > 12);
}

TEST_CASE("decide errors") {
  CHECK(run({"decide", "--logic", "pl", "x |- "}).code == 2);
  CHECK(run({"decide", "--logic", "pel", "x |- x"}).code == 2);
  CHECK(run({"decide", "--logic", "pl", "x | y |- x"}).code == 2);
  CHECK(run({"decide", "--logic", "pl"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("batch decide") {
  Run r = run({"decide", "--logic", "pl", "--stdin-batch"}, "x |- x & x\n\n# comment\nx -> y |- y\n");
  CHECK(r.code == 1);
  CHECK(r.out == "THEOREM\tx |- x & x\nNON-THEOREM\tx -> y |- y\n");
  Run all = run({"decide", "--logic", "pel0", "--stdin-batch"}, "x -> x |- (x & x) -> x\n");
  CHECK(all.code == 0);
  Run bad = run({"decide", "--logic", "pl", "--stdin-batch"}, "x |-\nx |- x\n");
  CHECK(bad.code == 2);
  CHECK(bad.out.rfind("ERROR\t", 0) == 0);
  CHECK(bad.out.find("THEOREM\tx |- x\n") != std::string::npos);
}

TEST_CASE("transform") {
  Run a = run({"transform", "--reduction", "clor-to-cl", "|- x | y"});
  CHECK(a.code == 0);
  CHECK(a.out == "|- (x -> bot) -> ((y -> bot) -> bot)\n");
  Run b = run({"transform", "--reduction", "il-to-ml", "bot |- x"});
  CHECK(b.out == "bot, bot -> x |- x\n");
  for (const char* red : {"clor-to-cl", "il-to-ml", "ml-to-pel1", "ml-to-pel2"}) {
    Run r = run({"transform", "--reduction", red, "x & y |- (y -> x) & top"});
    REQUIRE(r.code == 0);
    CHECK_NOTHROW(parse_sequent(r.out.substr(0, r.out.size() - 1)));
  }
  CHECK(run({"transform", "--reduction", "nope", "|- x"}).code == 2);
}

TEST_CASE("check-proof") {
  Run a = run({"check-proof", "--logic", "cl-or", fixture("clor_disjunction_to_negations.proof")});
  CHECK(a.code == 0);
  CHECK(a.out == "VALID x | y |- (x -> bot) -> ((y -> bot) -> bot)\n");
  Run b = run({"check-proof", "--logic", "pl", fixture("clor_disjunction_to_negations.proof")});
  CHECK(b.code == 1);
  CHECK(b.out.rfind("INVALID ", 0) == 0);
  CHECK(run({"check-proof", "--logic", "pl-ed", fixture("pl_ed_two_step.proof")}).code == 0);
  CHECK(run({"check-proof", "--logic", "pl", fixture("forward_reference.proof")}).code == 2);
  CHECK(run({"check-proof", "--logic", "pl", fixture("missing.proof")}).code == 2);
}

TEST_CASE("countermodel and oracle") {
  Run a = run({"countermodel", "x -> x |- (x & x) -> x"});
  CHECK(a.code == 0);
  Run b = run({"countermodel", "x |- x & x"});
  CHECK(b.code == 1);
  CHECK(b.out == "NO COUNTERMODEL within 2 worlds\n");
  Run kv = run({"countermodel", "--format", "kv", "|- x"});
  CHECK(kv.code == 0);
  CHECK(kv.out.find('=') != std::string::npos);
  CHECK(run({"countermodel", "--logic", "il", "|- x | (x -> bot)"}).code == 0);

  Run o = run({"oracle", "--logic", "pel0", "x -> x |- (x & x) -> x"});
  CHECK(o.code == 0);
  CHECK(o.out.rfind("THEOREM\ncontexts=", 0) == 0);
  Run n = run({"oracle", "--logic", "pl", "x -> x |- (x & x) -> x"});
  CHECK(n.code == 1);
  CHECK(n.out.rfind("NOT-DERIVED\n", 0) == 0);
  CHECK(run({"oracle", "--logic", "ml", "|- x -> x"}).code == 0);
}

TEST_CASE("bench") {
  std::vector<std::string> args{"bench", "--suite", "reduction-blowup", "--sizes", "20,40,80", "--format", "kv"};
  Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("suite=reduction-blowup\n") != std::string::npos);
  CHECK(run({"bench", "--suite", "pel0-scaling", "--sizes", "40,20,80"}).code == 2);
  CHECK(run({"bench", "--suite", "pel0-scaling", "--sizes", "20,40"}).code == 2);
  CHECK(run({"bench", "--suite", "nope", "--sizes", "20,40,80"}).code == 2);
  Run s = run({"bench", "--suite", "pel0-scaling", "--sizes", "30,60,120", "--format", "both"});
  CHECK(s.code == 0);
  CHECK(s.out.find("exponent=") != std::string::npos);
}

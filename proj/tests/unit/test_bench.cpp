#include <doctest.h>

#include <cmath>

#include "primal/bench.hpp"
#include "primal/pel0_decider.hpp"
#include "primal/syntax.hpp"

using namespace primal;

TEST_CASE("rng is deterministic and in range") {
  Rng a(7), b(7), c(8);
  for (int i = 0; i < 100; ++i) {
    std::uint64_t x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
  }
  Rng r(1);
  std::vector<int> seen(5, 0);
  for (int i = 0; i < 5000; ++i) ++seen[r.below(5)];
  for (int n : seen) CHECK(n > 800);
}

TEST_CASE("generated inputs depend only on the seed") {
  std::vector<Formula> a = generate_scaling_input(400, 9), b = generate_scaling_input(400, 9);
  CHECK(a == b);
  CHECK(a != generate_scaling_input(400, 10));
  CHECK(combined_length(a) >= 400);
  for (Formula f : a) CHECK(!f.has_disjunction());
  CHECK(generate_sequent(200, 3) == generate_sequent(200, 3));
}

TEST_CASE("scaling inputs give normalization work") {
  std::vector<Formula> in = generate_scaling_input(300, 2);
  NormalizeStats st;
  normalize_free_of_equivalents(in, {}, &st);
  CHECK(st.replacements > 0);
}

TEST_CASE("log-log fit") {
  std::vector<double> x{10, 20, 40, 80}, y;
  for (double v : x) y.push_back(3 * v * v * v);
  CHECK(fit_loglog_exponent(x, y) == doctest::Approx(3.0).epsilon(1e-9));
  std::vector<double> lin{5, 10, 20, 40};
  CHECK(fit_loglog_exponent(x, lin) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("reduction blow-up report") {
  BenchReport r = run_reduction_blowup(std::vector<std::size_t>{40, 80, 160}, 1);
  CHECK(r.blowup.size() == 9);
  for (const BlowupRow& row : r.blowup) {
    CHECK(row.output_length >= row.input_length);
    if (row.reduction == ReductionId::IlToMl) CHECK(row.output_length <= 4 * row.input_length);
  }
  CHECK(format_report_kv(r) == format_report_kv(run_reduction_blowup(std::vector<std::size_t>{40, 80, 160}, 1)));
}

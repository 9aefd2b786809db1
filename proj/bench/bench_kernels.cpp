// Reference kernels against the bit-sliced / OpenMP ones on the same
// deterministic inputs. Each pair must agree before timings are reported.
// With one thread the ratio measures only the word-level and filtering work.

#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "primal/bench.hpp"
#include "primal/pel0_decider.hpp"
#include "primal/pl_decider.hpp"
#include "primal/semantics.hpp"
#include "primal/syntax.hpp"

using namespace primal;

namespace {

double seconds(const std::function<void()>& body, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const char* kernel, double reference, double fast) {
  std::printf("%-22s reference=%.6fs fast=%.6fs ratio=%.2f\n", kernel, reference, fast, reference / fast);
}

Formula chain(std::size_t vars) {
  // v0 & ... & vn -> (vn -> ... -> (v1 -> v0)), a tautology over n variables
  Formula conj = Formula::var("v0");
  for (std::size_t i = 1; i < vars; ++i) conj = Formula::conj(conj, Formula::var("v" + std::to_string(i)));
  Formula tail = Formula::var("v0");
  for (std::size_t i = 1; i < vars; ++i) tail = Formula::imp(Formula::var("v" + std::to_string(i)), tail);
  return Formula::imp(conj, tail);
}

Proof long_proof(std::size_t vars) {
  ProofBuilder b;
  std::vector<Formula> ants;
  for (std::size_t i = 0; i < vars; ++i) ants.push_back(Formula::var("v" + std::to_string(i)));
  std::size_t acc = b.inflate(b.add(Sequent({ants[0]}, ants[0]), RuleTag::X2X), ants);
  for (std::size_t i = 1; i < vars; ++i) {
    std::size_t s = b.inflate(b.add(Sequent({ants[i]}, ants[i]), RuleTag::X2X), ants);
    Formula c = Formula::conj(b.conclusion(acc).consequent(), ants[i]);
    acc = b.add(Sequent(ants, c), RuleTag::AndI, {acc, s});
  }
  return std::move(b).finish(acc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP kernel comparison", "bench_kernels"};
  std::size_t vars = 16, batch = 4000, length = 800;
  int reps = 3;
  std::uint64_t seed = 1;
  app.add_option("--vars", vars, "variables for the truth-table and soundness kernels")->capture_default_str();
  app.add_option("--batch", batch, "sequents per decision batch")->capture_default_str();
  app.add_option("--length", length, "combined input length for normalization")->capture_default_str();
  app.add_option("--reps", reps)->capture_default_str();
  app.add_option("--seed", seed)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::printf("threads=%d\n", omp_get_max_threads());

  Sequent taut({}, chain(vars));
  bool a = false, b = false;
  double ts = seconds([&] { a = decide_cl_truthtable_reference(taut, 30); }, reps);
  double tp = seconds([&] { b = decide_cl_truthtable(taut, 30, true); }, reps);
  if (a != b) throw std::logic_error("truth table kernels disagree");
  row("truth-table", ts, tp);

  Proof proof = long_proof(vars);
  bool sa = false, sb = false;
  ts = seconds([&] { sa = soundness_check_reference(proof).has_value(); }, reps);
  tp = seconds([&] { sb = soundness_check(proof, true).has_value(); }, reps);
  if (sa != sb) throw std::logic_error("soundness kernels disagree");
  row("soundness-check", ts, tp);

  std::vector<Sequent> sequents;
  for (std::size_t i = 0; i < batch; ++i) sequents.push_back(generate_sequent(60, seed + i));
  std::vector<std::uint8_t> ra, rb;
  ts = seconds([&] { ra = decide_pl_batch(sequents, false); }, reps);
  tp = seconds([&] { rb = decide_pl_batch(sequents, true); }, reps);
  if (ra != rb) throw std::logic_error("pl batch kernels disagree");
  row("decide-pl-batch", ts, tp);
  ts = seconds([&] { ra = decide_pel0_batch(sequents, false); }, reps);
  tp = seconds([&] { rb = decide_pel0_batch(sequents, true); }, reps);
  if (ra != rb) throw std::logic_error("pel0 batch kernels disagree");
  row("decide-pel0-batch", ts, tp);

  std::vector<Formula> forest = generate_scaling_input(length, seed);
  std::vector<Formula> na, nb;
  ts = seconds([&] { na = normalize_reference(forest); }, 1);
  tp = seconds([&] { nb = normalize_free_of_equivalents(forest); }, reps);
  if (na != nb) throw std::logic_error("normalization results disagree");
  row("normalize", ts, tp);
  return 0;
}

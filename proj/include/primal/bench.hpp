#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "primal/reductions.hpp"

namespace primal {

// splitmix64; identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  bool coin() { return next() >> 63; }

 private:
  std::uint64_t state_;
};

// Right-leaning ∧/→ towers over five variables whose rungs are small planted
// shapes with known PEL0 equivalents (x vs x ∧ x, x ∧ ⊤, a ∧ b vs b ∧ a,
// (a ∧ a) → b vs a → b). Towers are added until the combined length
// reaches `target_length`.
std::vector<Formula> generate_scaling_input(std::size_t target_length, std::uint64_t seed);

// A random disjunction-free sequent of roughly `target_length` nodes.
Sequent generate_sequent(std::size_t target_length, std::uint64_t seed, std::size_t vars = 4);

std::uint64_t combined_length(std::span<const Formula> fs);

// Least-squares slope of log(y) against log(x).
double fit_loglog_exponent(std::span<const double> x, std::span<const double> y);

struct ScalingRow {
  std::size_t size = 0;    // requested combined length
  std::uint64_t n = 0;     // actual combined length
  double normalize_seconds = 0;
  double decide_seconds = 0;
  bool timed_out = false;
};

struct BlowupRow {
  ReductionId reduction;
  std::uint64_t input_length = 0;
  std::uint64_t output_length = 0;
};

struct BenchReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<ScalingRow> scaling;
  std::optional<double> exponent;  // normalize time vs n, timed-out rows excluded
  std::vector<BlowupRow> blowup;
  std::vector<std::pair<ReductionId, double>> blowup_exponents;
};

// Times normalization (repeated until at least `min_seconds` accumulate) and
// the PEL0 decision of the generated formulas, for each size.
BenchReport run_pel0_scaling(std::span<const std::size_t> sizes, std::uint64_t seed,
                             std::optional<std::chrono::duration<double>> timeout, double min_seconds = 0.05);
BenchReport run_reduction_blowup(std::span<const std::size_t> sizes, std::uint64_t seed);

std::string format_report_text(const BenchReport& r);
// Flat key=value lines.
std::string format_report_kv(const BenchReport& r);

}  // namespace primal

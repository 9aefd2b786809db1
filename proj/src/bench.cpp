#include "primal/bench.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "primal/pel0_decider.hpp"
#include "primal/oracle.hpp"

namespace primal {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  // Rejection keeps the draw unbiased.
  std::uint64_t limit = ~0ull - (~0ull % n);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

namespace {

Formula planted_rung(Rng& rng, const std::vector<Formula>& vars) {
  Formula a = vars[rng.below(vars.size())];
  Formula b = vars[rng.below(vars.size())];
  switch (rng.below(8)) {
    case 0: return a;
    case 1: return Formula::conj(a, a);
    case 2: return Formula::conj(a, Formula::top());
    case 3: return Formula::conj(a, b);
    case 4: return Formula::conj(b, a);
    case 5: return Formula::imp(Formula::conj(a, a), b);
    case 6: return Formula::imp(a, b);
    default: return Formula::conj(a, Formula::conj(a, a));
  }
}

}  // namespace

std::vector<Formula> generate_scaling_input(std::size_t target_length, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Formula> vars = variable_atoms(5);
  std::vector<Formula> out;
  std::uint64_t total = 0;
  while (total < target_length) {
    std::size_t height = 3 + rng.below(10);
    Formula tower = planted_rung(rng, vars);
    for (std::size_t h = 0; h < height; ++h) {
      Formula rung = planted_rung(rng, vars);
      tower = rng.coin() ? Formula::conj(rung, tower) : Formula::imp(rung, tower);
    }
    out.push_back(tower);
    total += tower.length();
  }
  return out;
}

namespace {

Formula random_formula(Rng& rng, const std::vector<Formula>& vars, std::size_t budget) {
  if (budget <= 1) {
    std::uint64_t k = rng.below(vars.size() + 1);
    return k == vars.size() ? Formula::top() : vars[k];
  }
  std::size_t inner = budget - 1;
  std::size_t left = 1 + rng.below(inner > 1 ? inner - 1 : 1);
  Formula l = random_formula(rng, vars, left);
  Formula r = random_formula(rng, vars, inner - left);
  return rng.coin() ? Formula::conj(l, r) : Formula::imp(l, r);
}

}  // namespace

Sequent generate_sequent(std::size_t target_length, std::uint64_t seed, std::size_t vars) {
  Rng rng(seed);
  std::vector<Formula> vs = variable_atoms(vars);
  std::size_t ants = rng.below(3);
  std::size_t share = std::max<std::size_t>(1, target_length / (ants + 1));
  std::vector<Formula> a;
  for (std::size_t i = 0; i < ants; ++i) a.push_back(random_formula(rng, vs, share));
  return Sequent(std::move(a), random_formula(rng, vs, share));
}

std::uint64_t combined_length(std::span<const Formula> fs) {
  std::uint64_t n = 0;
  for (Formula f : fs) n += f.length();
  return n;
}

double fit_loglog_exponent(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double den = n * sxx - sx * sx;
  if (den == 0) throw std::invalid_argument("fit needs distinct x values");
  return (n * sxy - sx * sy) / den;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

}  // namespace

BenchReport run_pel0_scaling(std::span<const std::size_t> sizes, std::uint64_t seed,
                             std::optional<std::chrono::duration<double>> timeout, double min_seconds) {
  BenchReport r;
  r.suite = "pel0-scaling";
  r.seed = seed;
  std::vector<double> xs, ys;
  for (std::size_t size : sizes) {
    ScalingRow row;
    row.size = size;
    std::vector<Formula> input = generate_scaling_input(size, seed);
    row.n = combined_length(input);
    NormalizeOptions opt;
    Clock::time_point start = Clock::now();
    if (timeout) opt.deadline = start + std::chrono::duration_cast<Clock::duration>(*timeout);
    try {
      std::size_t reps = 0;
      double spent = 0;
      std::vector<Formula> norm;
      do {
        norm = normalize_free_of_equivalents(input, opt);
        ++reps;
        spent = seconds_since(start);
      } while (spent < min_seconds);
      row.normalize_seconds = spent / static_cast<double>(reps);

      // Hypotheses: all towers but the last; query: the last one.
      std::span<const Formula> hyps(input.data(), input.size() - 1);
      std::span<const Formula> query(input.data() + input.size() - 1, 1);
      Clock::time_point d0 = Clock::now();
      reps = 0;
      do {
        decide_pel0_multi(hyps, query);
        ++reps;
        spent = seconds_since(d0);
      } while (spent < min_seconds);
      row.decide_seconds = spent / static_cast<double>(reps);
    } catch (const NormalizeTimeout&) {
      row.timed_out = true;
    }
    if (!row.timed_out) {
      xs.push_back(static_cast<double>(row.n));
      ys.push_back(row.normalize_seconds);
    }
    r.scaling.push_back(row);
  }
  if (xs.size() >= 3) r.exponent = fit_loglog_exponent(xs, ys);
  return r;
}

BenchReport run_reduction_blowup(std::span<const std::size_t> sizes, std::uint64_t seed) {
  BenchReport r;
  r.suite = "reduction-blowup";
  r.seed = seed;
  for (ReductionId id : {ReductionId::IlToMl, ReductionId::MlToPel1, ReductionId::MlToPel2}) {
    std::vector<double> xs, ys;
    for (std::size_t size : sizes) {
      Sequent s = generate_sequent(size, seed);
      BlowupRow row{id, s.length(), apply_reduction(id, s).length()};
      xs.push_back(static_cast<double>(row.input_length));
      ys.push_back(static_cast<double>(row.output_length));
      r.blowup.push_back(row);
    }
    if (xs.size() >= 3) r.blowup_exponents.emplace_back(id, fit_loglog_exponent(xs, ys));
  }
  return r;
}

std::string format_report_text(const BenchReport& r) {
  std::ostringstream out;
  out << std::fixed;
  out << "suite " << r.suite << " (seed " << r.seed << ")\n";
  if (!r.scaling.empty()) {
    out << std::setw(8) << "size" << std::setw(10) << "n" << std::setw(16) << "normalize_s" << std::setw(16)
        << "decide_s" << "\n";
    for (const ScalingRow& row : r.scaling) {
      out << std::setw(8) << row.size << std::setw(10) << row.n;
      if (row.timed_out) {
        out << std::setw(16) << "timeout" << std::setw(16) << "-";
      } else {
        out << std::setprecision(6) << std::setw(16) << row.normalize_seconds << std::setw(16) << row.decide_seconds;
      }
      out << "\n";
    }
    if (r.exponent) {
      out << std::setprecision(3) << "fitted exponent (normalize time vs n): " << *r.exponent << "\n";
    } else {
      out << "fitted exponent: not enough completed sizes\n";
    }
  }
  if (!r.blowup.empty()) {
    out << std::setw(12) << "reduction" << std::setw(10) << "input" << std::setw(12) << "output" << std::setw(10)
        << "ratio" << "\n";
    for (const BlowupRow& row : r.blowup) {
      out << std::setw(12) << reduction_name(row.reduction) << std::setw(10) << row.input_length << std::setw(12)
          << row.output_length << std::setprecision(2) << std::setw(10)
          << static_cast<double>(row.output_length) / static_cast<double>(row.input_length) << "\n";
    }
    for (const auto& [id, e] : r.blowup_exponents) {
      out << std::setprecision(3) << "fitted exponent " << reduction_name(id) << ": " << e << "\n";
    }
  }
  return out.str();
}

std::string format_report_kv(const BenchReport& r) {
  std::ostringstream out;
  out << std::setprecision(9);
  out << "suite=" << r.suite << "\nseed=" << r.seed << "\n";
  for (std::size_t i = 0; i < r.scaling.size(); ++i) {
    const ScalingRow& row = r.scaling[i];
    std::string p = "row." + std::to_string(i) + ".";
    out << p << "size=" << row.size << "\n" << p << "n=" << row.n << "\n";
    out << p << "timed_out=" << (row.timed_out ? 1 : 0) << "\n";
    if (!row.timed_out) {
      out << p << "normalize_seconds=" << row.normalize_seconds << "\n";
      out << p << "decide_seconds=" << row.decide_seconds << "\n";
    }
  }
  if (r.exponent) out << "exponent=" << *r.exponent << "\n";
  for (std::size_t i = 0; i < r.blowup.size(); ++i) {
    const BlowupRow& row = r.blowup[i];
    std::string p = "blowup." + std::to_string(i) + ".";
    out << p << "reduction=" << reduction_name(row.reduction) << "\n";
    out << p << "input_length=" << row.input_length << "\n" << p << "output_length=" << row.output_length << "\n";
  }
  for (const auto& [id, e] : r.blowup_exponents) out << "exponent." << reduction_name(id) << "=" << e << "\n";
  return out.str();
}

}  // namespace primal

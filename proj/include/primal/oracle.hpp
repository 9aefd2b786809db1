#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "primal/calculi.hpp"

namespace primal {

using Bits = std::vector<std::uint64_t>;

inline bool test_bit(const Bits& b, std::uint32_t i) { return (b[i >> 6] >> (i & 63)) & 1u; }
inline void set_bit(Bits& b, std::uint32_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

enum class OracleVerdict { Theorem, NotDerived, Inconclusive };
// "THEOREM", "NOT-DERIVED", "INCONCLUSIVE"
std::string_view verdict_name(OracleVerdict v);

// Subformula-closed formula set with parent links, shared by the engines below.
struct OracleUniverse {
  static constexpr std::uint32_t npos = 0xffffffffu;

  explicit OracleUniverse(std::span<const Formula> roots);

  std::size_t size() const { return formulas.size(); }
  std::uint32_t index_of(Formula f) const {
    auto it = index.find(f);
    return it == index.end() ? npos : it->second;
  }
  Bits empty_bits() const { return Bits((size() + 63) / 64, 0); }

  std::vector<Formula> formulas;
  std::vector<Kind> kinds;
  std::vector<std::uint32_t> left, right;
  std::vector<std::vector<std::uint32_t>> parents;
  std::vector<std::uint32_t> implications;
  std::unordered_map<Formula, std::uint32_t> index;
  std::uint32_t top = npos;
  std::uint32_t bot = npos;
};

// Ground truth for logics whose rules never add antecedents (BL, PL, PL_ED,
// PEL1_0, PEL2_0, PEL0, and PL∨-style ∨I only). Sequent-level saturation:
// D(S) is the set of consequents derivable from exactly S. The table holds
// D(∅) and D({u}) for every u; the weak substitution rules act on that
// table, and any context imports D({u}) once u ∈ D(S) (inflation + Cut).
class ClosureOracle {
 public:
  ClosureOracle(LogicId logic, std::span<const Formula> universe_roots);

  static bool supports(LogicId logic);

  const OracleUniverse& universe() const { return u_; }
  // D(Γ) for Γ ⊆ universe (std::out_of_range otherwise).
  Bits derivable_from(std::span<const Formula> gamma) const;
  Bits derivable_from_indices(std::span<const std::uint32_t> gamma) const;
  bool derivable(const Sequent& s) const;
  const Bits& singleton_row(std::uint32_t i) const { return rows_[i]; }
  const Bits& empty_context_row() const { return empty_; }

 private:
  void close(Bits& d, std::vector<std::uint32_t> work, std::uint32_t self) const;

  LogicId logic_;
  RuleSet rules_;
  OracleUniverse u_;
  Bits empty_;
  std::vector<Bits> rows_;
};

struct SaturationConfig {
  LogicId logic;
  // Extra formulas added to the subformula closure of the goal.
  std::vector<Formula> universe;
  // For logics with antecedent-adding rules: contexts are H ∪ T with
  // |T| ≤ max_extension, T drawn from the formulas those rules introduce.
  std::size_t max_extension = 2;
  std::size_t max_contexts = 3000;
  std::size_t step_bound = 50'000'000;
};

struct SaturationResult {
  OracleVerdict verdict = OracleVerdict::Inconclusive;
  std::size_t contexts = 0;
  std::size_t steps = 0;
  bool partial = false;
  // Sequents derived over the explored contexts.
  std::vector<Sequent> derived;
};

// Saturates the admitted rules of config.logic over the goal's subformulas
// (plus config.universe) with antecedent sets from the bounded context
// family. A derived goal is always a theorem; a goal not derived is
// NOT-DERIVED unless a bound was hit, in which case INCONCLUSIVE.
SaturationResult saturate(const Sequent& goal, const SaturationConfig& config, bool collect = false);
OracleVerdict oracle_decide(const Sequent& goal, const SaturationConfig& config);

struct Connectives {
  bool conj = true;
  bool imp = true;
  bool disj = false;
  bool bot = false;  // ⊤ is always an atom
};

// Atoms x, y, z, w (x1..xn beyond four), ⊤, optional ⊥; then all binary
// combinations, level by level, up to `max_depth` (atoms have depth 0).
std::vector<Formula> enumerate_formulas(std::size_t vars, std::size_t max_depth, Connectives c);
std::vector<Formula> variable_atoms(std::size_t vars);

class EnumerationCapError : public std::runtime_error {
 public:
  explicit EnumerationCapError(std::uint64_t count)
      : std::runtime_error("sequent family has " + std::to_string(count) + " members, above the cap"), count_(count) {}
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t count_;
};

struct SequentFamily {
  std::size_t vars = 1;
  std::size_t max_depth = 1;
  std::size_t max_antecedents = 1;
  Connectives connectives;
};

std::uint64_t count_small_sequents(const SequentFamily& fam);
// Antecedent sets in order of size then lexicographic formula index; for
// each, every consequent in formula order. Throws EnumerationCapError
// before producing anything when the family exceeds `cap`.
void for_each_small_sequent(const SequentFamily& fam, std::uint64_t cap,
                            const std::function<void(const Sequent&)>& visit);
std::vector<Sequent> enumerate_small_sequents(const SequentFamily& fam, std::uint64_t cap = 5'000'000);

// Antecedent sets of the family (size ≤ max_antecedents), as index lists into
// `formulas`, in enumeration order.
void for_each_antecedent_set(std::size_t n, std::size_t max_antecedents,
                             const std::function<void(std::span<const std::uint32_t>)>& visit);

}  // namespace primal

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "primal/calculi.hpp"

namespace primal {

// ---- degenerate-implication valuations --------------------------------

// Truth values of variables; ⊤ is true and ⊥ false. Unlisted variables are false.
struct Valuation {
  std::map<std::string, bool> assignment;

  bool value_of(Formula var) const;
};

// V(φ → ψ) = V(ψ), ∧ pointwise. Throws DisjunctionError on ∨.
bool evaluate_degenerate(const Valuation& v, Formula f);
// True iff some antecedent is false or the consequent is true.
bool evaluate_valuation(const Valuation& v, const Sequent& s);

struct SoundnessFailure {
  std::size_t step;
  Valuation valuation;
};

// Every step conclusion under every assignment of the proof's variables.
// The OpenMP version evaluates 64 assignments per machine word.
std::optional<SoundnessFailure> soundness_check(const Proof& proof, bool parallel = true);
std::optional<SoundnessFailure> soundness_check_reference(const Proof& proof);

// ---- classical truth tables ------------------------------------------

class VariableCapError : public std::runtime_error {
 public:
  VariableCapError(std::size_t vars, std::size_t cap)
      : std::runtime_error(std::to_string(vars) + " variables exceed the truth-table cap of " + std::to_string(cap)) {}
};

// Classical value with ⊥ false.
bool evaluate_classical(const Valuation& v, Formula f);

// ⋀Γ → φ is a tautology. Bit-sliced over 64 rows per word, rows split
// across OpenMP threads when `parallel`.
bool decide_cl_truthtable(const Sequent& s, std::size_t variable_cap = 20, bool parallel = true);
// Row by row, one assignment at a time.
bool decide_cl_truthtable_reference(const Sequent& s, std::size_t variable_cap = 20);

// ---- Kripke models for PL ---------------------------------------------

class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Worlds 0..n-1 ordered by `leq`. Atoms (variables and ⊥) are valued per
// world; implications are valued freely over a declared universe subject to
// the two conditions (ψ ⇒ φ→ψ, and φ ∧ (φ→ψ) ⇒ ψ) and monotonicity.
class KripkeModel {
 public:
  struct World {
    std::unordered_set<Formula> true_atoms;
    std::unordered_set<Formula> true_implications;
  };

  // Validates the order, the declared universe (closed under implication
  // subformulas), monotonicity and both conditions; throws ModelError.
  KripkeModel(std::vector<std::vector<bool>> leq, std::vector<World> worlds, std::vector<Formula> implications);

  std::size_t size() const { return worlds_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  const World& world(std::size_t w) const { return worlds_[w]; }
  const std::vector<Formula>& implications() const { return implications_; }

  // Throws ModelError if f has an undeclared implication subformula.
  bool holds(std::size_t w, Formula f) const;

 private:
  std::vector<std::vector<bool>> leq_;
  std::vector<World> worlds_;
  std::vector<Formula> implications_;
  std::unordered_set<Formula> declared_;
};

// Γ ⊢ φ holds at w iff φ holds at every b ≥ w where all of Γ hold.
bool model_check(const KripkeModel& m, std::size_t w, const Sequent& s);

struct Countermodel {
  KripkeModel model;
  std::size_t world;
};

class SearchCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Chain models with 1..max_worlds worlds over the implication subformulas
// of s, searched in a fixed order; the first countermodel found is
// returned. Throws SearchCapError when the search space exceeds `cap`.
std::optional<Countermodel> countermodel_search(const Sequent& s, std::size_t max_worlds,
                                                std::uint64_t cap = 50'000'000);

// Least set of formulas of `universe` containing Γ that can be the truth
// set of a single world: closed under the ∧ clause and both implication
// conditions, with ⊤ true. Γ ⊢ φ has a countermodel iff φ is outside it.
std::unordered_set<Formula> least_world(std::span<const Formula> universe, std::span<const Formula> gamma);

// Human-readable and flat key=value renderings.
std::string format_countermodel(const Countermodel& c);
std::string format_countermodel_kv(const Countermodel& c);

// ---- intuitionistic / minimal Kripke models ---------------------------

// Rooted finite poset (world 0 is the root) with up-closed atom sets;
// implication is the usual intuitionistic clause. In minimal logic ⊥ is an
// ordinary atom; otherwise it is false everywhere.
struct IntuitionisticModel {
  std::vector<std::vector<bool>> leq;
  std::vector<std::unordered_set<Formula>> true_atoms;
  bool bot_is_falsum = true;

  bool holds(std::size_t w, Formula f) const;
};

bool model_check(const IntuitionisticModel& m, std::size_t w, const Sequent& s);

// Searches rooted posets with up to `max_worlds` (≤ 4) worlds. A result
// refutes s in IL (bot_is_falsum) or ML (otherwise), and hence in every
// logic contained in them.
std::optional<IntuitionisticModel> intuitionistic_countermodel(const Sequent& s, bool bot_is_falsum,
                                                               std::size_t max_worlds = 3,
                                                               std::uint64_t cap = 20'000'000);

}  // namespace primal

#pragma once

#include <span>
#include <unordered_set>
#include <vector>

#include "primal/calculi.hpp"

namespace primal {

// F[x0 := replacement]
Formula substitute(Formula context, Formula placeholder, Formula replacement);

enum class SubstitutionForm {
  Strong,  // E1/E2 under assumptions; valid under PEL
  Weak,    // E1_0/E2_0 with no assumptions; valid under PEL0
};

// Builds a proof of  Γ, F[x0:=φ] ⊢ F[x0:=ψ]  from proofs of  Γ, φ ⊢ ψ
// (`forward`) and  Γ, ψ ⊢ φ  (`backward`), by structural induction on F:
// placeholder-free parts via x2x and inflation, conjunctions via ∧E/Cut/∧I,
// implications via E1, E2 and Cut. The weak form requires Γ = ∅.
// Throws std::invalid_argument if F contains disjunction or an input proof
// does not conclude the expected sequent.
Proof synthesize_ef_proof(Formula context, Formula placeholder, Formula phi, Formula psi,
                          std::span<const Formula> gamma, const Proof& forward, const Proof& backward,
                          SubstitutionForm form = SubstitutionForm::Strong);

using FormulaSet = std::unordered_set<Formula>;

// Least set containing the implication subformulas of σ, closed under
// implication subformulas, and containing both sides of every E0 / E1_0 /
// E2_0 step of `proof` as soon as it contains one of them.
FormulaSet significant_implications(const Proof& proof, const Sequent& sigma);

// t_F: keeps implications in F, replaces any other implication by (the
// image of) its consequent.
Formula erase_insignificant(Formula f, const FormulaSet& significant);

// Rewrites a PEL0 proof of σ so that every implication subformula of every
// step is significant. Steps that the rewriting maps onto one of their own
// premises are merged into it. Throws std::invalid_argument if `proof` is
// not a valid PEL0 proof of σ.
Proof eliminate_insignificant(const Proof& proof, const Sequent& sigma);

// True iff every implication subformula of every step lies in the
// significant set recomputed for `proof`.
bool all_implications_significant(const Proof& proof, const Sequent& sigma);

}  // namespace primal

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "primal/sequent.hpp"

namespace primal {

enum class ReductionId { ClOrToCl, IlToMl, MlToPel1, MlToPel2 };

// "clor-to-cl", "il-to-ml", "ml-to-pel1", "ml-to-pel2"
std::string_view reduction_name(ReductionId id);
std::optional<ReductionId> parse_reduction(std::string_view name);

// t(φ ∨ ψ) = (t(φ) → ⊥) → ((t(ψ) → ⊥) → ⊥), homomorphic elsewhere.
Formula clor_to_cl(Formula f);
Sequent reduce_clor_to_cl(const Sequent& s);

// ⊥ → x for every variable x of s.
std::vector<Formula> il_to_ml_helpers(const Sequent& s);
Sequent reduce_il_to_ml(const Sequent& s);

// For ordered pairs (ψ, ω) of proper subformulas of s (ψ = ω included):
//   PEL1: (ψ ∧ ω) → (ψ ∧ ω)  and  (ψ → (ψ ∧ ω)) → (ψ → ω)
//   PEL2: ψ → ψ (once per ψ)   and  (ψ → (ψ ∧ ω)) → (ψ → ω)
// Throws DisjunctionError if s contains ∨.
std::vector<Formula> ml_to_pel1_helpers(const Sequent& s);
std::vector<Formula> ml_to_pel2_helpers(const Sequent& s);
Sequent reduce_ml_to_pel1(const Sequent& s);
Sequent reduce_ml_to_pel2(const Sequent& s);

Sequent apply_reduction(ReductionId id, const Sequent& s);

}  // namespace primal

#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "primal/formula.hpp"

namespace primal {

// Γ ⊢ φ with Γ a finite set: antecedents are kept sorted by interned id and
// duplicate-free, so equality is structural equality of the set.
class Sequent {
 public:
  Sequent() = default;
  Sequent(std::vector<Formula> antecedents, Formula consequent);
  Sequent(std::initializer_list<Formula> antecedents, Formula consequent)
      : Sequent(std::vector<Formula>(antecedents), consequent) {}

  const std::vector<Formula>& antecedents() const { return antecedents_; }
  Formula consequent() const { return consequent_; }

  bool has_antecedent(Formula f) const;
  Sequent with_antecedent(Formula f) const;
  Sequent with_antecedents(std::span<const Formula> extra) const;
  Sequent with_consequent(Formula f) const { return Sequent(antecedents_, f, Canonical{}); }

  bool has_disjunction() const;
  std::uint64_t length() const;

  friend bool operator==(const Sequent&, const Sequent&) = default;

 private:
  struct Canonical {};
  Sequent(std::vector<Formula> sorted, Formula consequent, Canonical)
      : antecedents_(std::move(sorted)), consequent_(consequent) {}

  std::vector<Formula> antecedents_;
  Formula consequent_;
};

// Sorted, duplicate-free copy of `fs`.
std::vector<Formula> canonical_set(std::vector<Formula> fs);
// Set union of two canonical sets.
std::vector<Formula> set_union(std::span<const Formula> a, std::span<const Formula> b);
bool is_subset(std::span<const Formula> sub, std::span<const Formula> super);

struct SequentHash {
  std::size_t operator()(const Sequent& s) const noexcept;
};

}  // namespace primal

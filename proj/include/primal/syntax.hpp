#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "primal/formula.hpp"
#include "primal/sequent.hpp"

namespace primal {

// Malformed input; `position` is the 0-based byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Raised by operations defined only on the disjunction-free language.
class DisjunctionError : public std::invalid_argument {
 public:
  explicit DisjunctionError(const std::string& where)
      : std::invalid_argument(where + ": disjunction is not supported") {}
};

//   formula := orExpr ('->' formula)?
//   orExpr  := andExpr ('|' andExpr)*
//   andExpr := atom ('&' atom)*
//   atom    := IDENT | 'top' | 'bot' | '(' formula ')'
//   sequent := (formula (',' formula)*)? '|-' formula
Formula parse_formula(std::string_view text);
Sequent parse_sequent(std::string_view text);

// Canonical printing. `&` and `|` are left-associative and `->` is
// right-associative; an implication nested on either side of another
// implication is always parenthesized.
std::string to_string(Formula f);
// Antecedents are printed in canonical string order.
std::string to_string(const Sequent& s);

// Orders formulas by their canonical printed form, then by id.
bool canonical_less(Formula a, Formula b);
std::vector<Formula> sorted_canonically(std::span<const Formula> fs);

// Distinct subformulas, children before parents (f itself last).
std::vector<Formula> subformulas(Formula f);
std::vector<Formula> subformulas(std::span<const Formula> roots);
std::vector<Formula> subformulas(const Sequent& s);

// Subformulas of s occurring at a position not inside an occurrence of a
// member of `helpers`.
std::vector<Formula> proper_subformulas(const Sequent& s, std::span<const Formula> helpers);

// Variables occurring in the formulas, sorted by name.
std::vector<Formula> variables(std::span<const Formula> roots);
std::vector<Formula> variables(const Sequent& s);

// All members of a sequent (antecedents followed by the consequent).
std::vector<Formula> members(const Sequent& s);

}  // namespace primal

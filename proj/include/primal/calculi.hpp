#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "primal/sequent.hpp"

namespace primal {

enum class RuleTag : std::uint8_t {
  Top,
  X2X,
  PremiseInflation,
  Cut,
  AndEl,
  AndEr,
  AndI,
  ImpE,
  ImpIW,
  ImpI,
  ImpED,
  BotAx,
  DFExcludedMiddle,
  OrE,
  OrIl,
  OrIr,
  E1,
  E2,
  E1_0,
  E2_0,
  E0,
};

inline constexpr std::size_t kRuleCount = 21;

std::string_view rule_name(RuleTag tag);
std::optional<RuleTag> parse_rule(std::string_view name);
// Number of premises the schema takes.
std::size_t rule_arity(RuleTag tag);

enum class LogicName : std::uint8_t { BL, PL, PL_ED, ML, IL, CL, PEL1, PEL2, PEL, PEL1_0, PEL2_0, PEL0 };

class RuleSet {
 public:
  constexpr RuleSet() = default;
  constexpr RuleSet(std::initializer_list<RuleTag> tags) {
    for (RuleTag t : tags) bits_ |= bit(t);
  }
  constexpr bool contains(RuleTag t) const { return bits_ & bit(t); }
  constexpr RuleSet operator|(RuleSet o) const { return RuleSet(bits_ | o.bits_); }
  constexpr bool includes(RuleSet o) const { return (bits_ & o.bits_) == o.bits_; }
  friend constexpr bool operator==(RuleSet, RuleSet) = default;

 private:
  constexpr explicit RuleSet(std::uint32_t bits) : bits_(bits) {}
  static constexpr std::uint32_t bit(RuleTag t) { return 1u << static_cast<unsigned>(t); }
  std::uint32_t bits_ = 0;
};

struct LogicId {
  LogicName name = LogicName::PL;
  bool with_disjunction = false;

  RuleSet admitted() const;
  bool admits(RuleTag tag) const { return admitted().contains(tag); }
  // e.g. "PEL1_0", "CL_OR"
  std::string to_string() const;

  friend bool operator==(const LogicId&, const LogicId&) = default;
};

// Accepts the catalogue names case-insensitively, with '-' for '_' and an
// optional "_or" / "+or" / "∨" suffix selecting the disjunctive variant
// (e.g. "pel0", "pl-ed", "CL∨", "cl-or").
std::optional<LogicId> parse_logic(std::string_view text);
std::vector<LogicId> logic_catalogue();

struct ProofStep {
  Sequent conclusion;
  RuleTag rule;
  // 0-based indices of earlier steps.
  std::vector<std::size_t> premises;
};

struct Proof {
  std::vector<ProofStep> steps;

  bool empty() const { return steps.empty(); }
  const Sequent& conclusion() const { return steps.back().conclusion; }
};

struct Violation {
  std::size_t step;  // 0-based
  RuleTag rule;
  std::string reason;

  std::string describe() const;
};

// nullopt when the step is an instance of its rule schema applied to
// `premises` (given in any order), else the mismatch reason.
std::optional<std::string> check_step(const ProofStep& step, std::span<const Sequent> premises);

// nullopt when every step is admitted by `logic`, references only earlier
// steps, and instantiates its schema; otherwise the first violation.
std::optional<Violation> check_proof(const Proof& proof, LogicId logic);

// Appends steps while reusing any earlier step with an identical conclusion.
class ProofBuilder {
 public:
  ProofBuilder() = default;

  std::size_t add(Sequent conclusion, RuleTag rule, std::vector<std::size_t> premises = {});
  // Premise inflation of step `from` up to `target` antecedents; returns
  // `from` unchanged when nothing needs adding.
  std::size_t inflate(std::size_t from, std::span<const Formula> target);
  // Copies a complete proof; returns the index of its final step.
  std::size_t append(const Proof& proof);

  const Sequent& conclusion(std::size_t index) const { return proof_.steps[index].conclusion; }
  std::size_t size() const { return proof_.steps.size(); }
  // Proof ending at step `last` (later steps dropped).
  Proof finish(std::size_t last) &&;
  const Proof& proof() const { return proof_; }

 private:
  Proof proof_;
  std::unordered_map<Sequent, std::size_t, SequentHash> index_;
};

}  // namespace primal

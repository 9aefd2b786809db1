#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "primal/calculi.hpp"

namespace primal {

// One closure step. Hypotheses are reported as X2X from themselves.
struct ClosureEvent {
  Formula formula;
  RuleTag rule;
  std::vector<Formula> from;
};

// "derived <formula> by <rule> from <formulas>"
std::string format_event(const ClosureEvent& e);

// Subformula closure of a set of roots with the parent links the closure
// needs. Immutable once built; may be shared by many PlClosure runs.
class PlUniverse {
 public:
  static constexpr std::uint32_t npos = 0xffffffffu;

  // Throws DisjunctionError if any root contains ∨.
  explicit PlUniverse(std::span<const Formula> roots);

  std::size_t size() const { return nodes_.size(); }
  Formula formula(std::uint32_t i) const { return nodes_[i]; }
  std::uint32_t index_of(Formula f) const;  // npos if absent

 private:
  friend class PlClosure;

  struct Range {
    const std::uint32_t* b;
    const std::uint32_t* e;
    const std::uint32_t* begin() const { return b; }
    const std::uint32_t* end() const { return e; }
  };
  Range parents(const std::vector<std::uint32_t>& off, const std::vector<std::uint32_t>& data, std::uint32_t i) const {
    return {data.data() + off[i], data.data() + off[i + 1]};
  }

  std::vector<Formula> nodes_;
  std::vector<Kind> kind_;
  std::vector<std::uint32_t> left_, right_;
  // CSR lists: conjunctions having i as a child; implications with i on
  // the left; implications with i on the right.
  std::vector<std::uint32_t> and_off_, and_par_;
  std::vector<std::uint32_t> impl_off_, impl_par_;
  std::vector<std::uint32_t> impr_off_, impr_par_;
  std::unordered_map<Formula, std::uint32_t> index_;
  std::uint32_t top_ = npos;
};

// Forward-chaining PL closure over a universe. Reusable: each run() resets
// only what the previous run touched.
class PlClosure {
 public:
  explicit PlClosure(const PlUniverse& u);

  // Hypotheses must belong to the universe (std::out_of_range otherwise).
  void run(std::span<const Formula> hypotheses, std::vector<ClosureEvent>* trace = nullptr);
  void run_indices(std::span<const std::uint32_t> hypotheses, std::vector<ClosureEvent>* trace = nullptr);
  // Adds hypotheses to the current closure instead of starting over.
  void extend_indices(std::span<const std::uint32_t> hypotheses, std::vector<ClosureEvent>* trace = nullptr);

  struct Checkpoint {
    std::size_t derived = 0;
    std::size_t hypotheses = 0;
  };
  Checkpoint checkpoint() const { return {queue_.size(), hypotheses_.size()}; }
  // Restores the closure as it was at `c`, undoing later extensions.
  void rollback(Checkpoint c);

  bool derived(Formula f) const;
  bool derived_index(std::uint32_t i) const { return derived_[i] != 0; }
  // Universe indices derived by the last run, in derivation order.
  std::span<const std::uint32_t> derived_indices() const { return queue_; }
  // Proof of  hypotheses ⊢ f  replaying the closure; nullopt if not derived.
  std::optional<Proof> extract_proof(Formula f) const;

 private:
  void derive(std::uint32_t i, RuleTag why, std::uint32_t a, std::uint32_t b, std::vector<ClosureEvent>* trace);

  const PlUniverse& u_;
  std::vector<std::uint8_t> derived_;
  std::vector<RuleTag> rule_;
  std::vector<std::uint32_t> prem_a_, prem_b_;
  std::vector<std::uint32_t> queue_;
  std::vector<Formula> hypotheses_;
};

// Entry q of the result is true iff  hypotheses ⊢ queries[q]  in PL.
std::vector<bool> decide_pl_multi(std::span<const Formula> hypotheses, std::span<const Formula> queries);
bool decide_pl(const Sequent& s);

std::vector<ClosureEvent> trace_pl(const Sequent& s);
// A PL proof of s when s is a theorem.
std::optional<Proof> extract_pl_proof(const Sequent& s);

// Independent decisions, evaluated with OpenMP when `parallel`.
std::vector<std::uint8_t> decide_pl_batch(std::span<const Sequent> sequents, bool parallel = true);

}  // namespace primal

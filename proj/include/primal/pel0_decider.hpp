#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "primal/sequent.hpp"

namespace primal {

// Valid when the proper subformulas of φ and ψ are jointly free of
// equivalents: then PEL0 equivalence coincides with PL mutual derivability.
bool pel0_equivalent(Formula phi, Formula psi);

struct NormalizeOptions {
  // Skip PL checks between formulas whose classical and degenerate-valuation
  // fingerprints differ (both are necessary conditions for equivalence).
  bool use_fingerprints = true;
  // Re-check after every step that a newly marked node has marked
  // subformulas and no marked equivalent, and that replacements and outputs
  // are not longer than what they replace; throws std::logic_error.
  bool check_invariants = false;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

class NormalizeTimeout : public std::runtime_error {
 public:
  NormalizeTimeout() : std::runtime_error("normalization deadline exceeded") {}
};

struct NormalizeStats {
  std::size_t steps = 0;            // nodes marked or replaced
  std::size_t equivalence_checks = 0;
  std::size_t replacements = 0;
};

// Free-of-equivalents normalization: repeatedly takes the shortest unmarked
// node (ties by printed form, then id), replaces it by an equivalent marked
// formula if one exists, and marks the result. Returns one formula per
// input, PEL0-equivalent to it and no longer.
std::vector<Formula> normalize_free_of_equivalents(std::span<const Formula> formulas,
                                                   const NormalizeOptions& options = {},
                                                   NormalizeStats* stats = nullptr);

// Same loop compared against every marked formula with no fingerprint
// filter; kept as the reference the fast path is tested against.
std::vector<Formula> normalize_reference(std::span<const Formula> formulas);

std::vector<bool> decide_pel0_multi(std::span<const Formula> hypotheses, std::span<const Formula> queries);
bool decide_pel0(const Sequent& s);

// The jointly normalized sequent that decide_pel0 hands to the PL decider.
Sequent normalize_sequent(const Sequent& s);

std::vector<std::uint8_t> decide_pel0_batch(std::span<const Sequent> sequents, bool parallel = true);

}  // namespace primal

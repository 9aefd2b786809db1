#include "primal/sequent.hpp"

#include <algorithm>

namespace primal {

std::vector<Formula> canonical_set(std::vector<Formula> fs) {
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  return fs;
}

std::vector<Formula> set_union(std::span<const Formula> a, std::span<const Formula> b) {
  std::vector<Formula> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(std::span<const Formula> sub, std::span<const Formula> super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

Sequent::Sequent(std::vector<Formula> antecedents, Formula consequent)
    : antecedents_(canonical_set(std::move(antecedents))), consequent_(consequent) {}

bool Sequent::has_antecedent(Formula f) const {
  return std::binary_search(antecedents_.begin(), antecedents_.end(), f);
}

Sequent Sequent::with_antecedent(Formula f) const {
  auto it = std::lower_bound(antecedents_.begin(), antecedents_.end(), f);
  if (it != antecedents_.end() && *it == f) return *this;
  std::vector<Formula> ants = antecedents_;
  ants.insert(ants.begin() + (it - antecedents_.begin()), f);
  return Sequent(std::move(ants), consequent_, Canonical{});
}

Sequent Sequent::with_antecedents(std::span<const Formula> extra) const {
  std::vector<Formula> sorted = canonical_set({extra.begin(), extra.end()});
  return Sequent(set_union(antecedents_, sorted), consequent_, Canonical{});
}

bool Sequent::has_disjunction() const {
  if (consequent_.has_disjunction()) return true;
  return std::any_of(antecedents_.begin(), antecedents_.end(), [](Formula f) { return f.has_disjunction(); });
}

std::uint64_t Sequent::length() const {
  std::uint64_t n = consequent_.length();
  for (Formula a : antecedents_) n += a.length();
  return n;
}

std::size_t SequentHash::operator()(const Sequent& s) const noexcept {
  std::size_t h = s.consequent().id() * 0x9E3779B97F4A7C15ull;
  for (Formula a : s.antecedents()) h = (h ^ a.id()) * 0x100000001B3ull;
  return h;
}

}  // namespace primal

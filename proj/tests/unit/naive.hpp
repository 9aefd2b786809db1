#pragma once

#include <set>

#include "primal/syntax.hpp"

namespace primal::testing {

// Plain fixpoint of the PL closure rules over the subformulas of s, scanning
// the whole universe until nothing changes.
inline bool naive_pl(const Sequent& s) {
  std::vector<Formula> u = subformulas(s);
  std::set<Formula> d(s.antecedents().begin(), s.antecedents().end());
  bool changed = true;
  auto add = [&](Formula g) {
    if (d.insert(g).second) changed = true;
  };
  while (changed) {
    changed = false;
    for (Formula g : u) {
      if (g.kind() == Kind::Top) add(g);
      if (g.is_conj() && d.count(g.left()) && d.count(g.right())) add(g);
      if (g.is_imp() && d.count(g.right())) add(g);
      if (!d.count(g)) continue;
      if (g.is_conj()) {
        add(g.left());
        add(g.right());
      }
      if (g.is_imp() && d.count(g.left())) add(g.right());
    }
  }
  return d.count(s.consequent()) > 0;
}

}  // namespace primal::testing

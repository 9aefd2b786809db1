#include "primal/reductions.hpp"

#include <unordered_map>

#include "primal/syntax.hpp"

namespace primal {

std::string_view reduction_name(ReductionId id) {
  switch (id) {
    case ReductionId::ClOrToCl: return "clor-to-cl";
    case ReductionId::IlToMl: return "il-to-ml";
    case ReductionId::MlToPel1: return "ml-to-pel1";
    case ReductionId::MlToPel2: return "ml-to-pel2";
  }
  return "?";
}

std::optional<ReductionId> parse_reduction(std::string_view name) {
  for (ReductionId id : {ReductionId::ClOrToCl, ReductionId::IlToMl, ReductionId::MlToPel1, ReductionId::MlToPel2}) {
    if (reduction_name(id) == name) return id;
  }
  return std::nullopt;
}

Formula clor_to_cl(Formula f) {
  std::unordered_map<Formula, Formula> memo;
  auto go = [&](auto&& self, Formula g) -> Formula {
    if (g.is_atom()) return g;
    if (auto it = memo.find(g); it != memo.end()) return it->second;
    Formula l = self(self, g.left()), r = self(self, g.right());
    Formula out;
    if (g.is_disj()) {
      Formula bot = Formula::bot();
      out = Formula::imp(Formula::imp(l, bot), Formula::imp(Formula::imp(r, bot), bot));
    } else {
      out = Formula::make(g.kind(), l, r);
    }
    memo.emplace(g, out);
    return out;
  };
  return go(go, f);
}

Sequent reduce_clor_to_cl(const Sequent& s) {
  std::vector<Formula> ants;
  for (Formula a : s.antecedents()) ants.push_back(clor_to_cl(a));
  return Sequent(std::move(ants), clor_to_cl(s.consequent()));
}

std::vector<Formula> il_to_ml_helpers(const Sequent& s) {
  std::vector<Formula> out;
  for (Formula v : variables(s)) {
    if (v.is_var()) out.push_back(Formula::imp(Formula::bot(), v));
  }
  return out;
}

Sequent reduce_il_to_ml(const Sequent& s) { return s.with_antecedents(il_to_ml_helpers(s)); }

namespace {

std::vector<Formula> ml_subformulas(const Sequent& s, const char* where) {
  if (s.has_disjunction()) throw DisjunctionError(where);
  return subformulas(s);
}

Formula pair_helper(Formula psi, Formula omega) {
  return Formula::imp(Formula::imp(psi, Formula::conj(psi, omega)), Formula::imp(psi, omega));
}

}  // namespace

std::vector<Formula> ml_to_pel1_helpers(const Sequent& s) {
  std::vector<Formula> subs = ml_subformulas(s, "ML to PEL1 reduction");
  std::vector<Formula> out;
  out.reserve(2 * subs.size() * subs.size());
  for (Formula psi : subs) {
    for (Formula omega : subs) {
      Formula both = Formula::conj(psi, omega);
      out.push_back(Formula::imp(both, both));
      out.push_back(pair_helper(psi, omega));
    }
  }
  return out;
}

std::vector<Formula> ml_to_pel2_helpers(const Sequent& s) {
  std::vector<Formula> subs = ml_subformulas(s, "ML to PEL2 reduction");
  std::vector<Formula> out;
  out.reserve(subs.size() + subs.size() * subs.size());
  for (Formula psi : subs) out.push_back(Formula::imp(psi, psi));
  for (Formula psi : subs) {
    for (Formula omega : subs) out.push_back(pair_helper(psi, omega));
  }
  return out;
}

Sequent reduce_ml_to_pel1(const Sequent& s) { return s.with_antecedents(ml_to_pel1_helpers(s)); }
Sequent reduce_ml_to_pel2(const Sequent& s) { return s.with_antecedents(ml_to_pel2_helpers(s)); }

Sequent apply_reduction(ReductionId id, const Sequent& s) {
  switch (id) {
    case ReductionId::ClOrToCl: return reduce_clor_to_cl(s);
    case ReductionId::IlToMl: return reduce_il_to_ml(s);
    case ReductionId::MlToPel1: return reduce_ml_to_pel1(s);
    case ReductionId::MlToPel2: return reduce_ml_to_pel2(s);
  }
  return s;
}

}  // namespace primal

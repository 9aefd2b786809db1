#include "generators.hpp"

#include <algorithm>

#include "primal/oracle.hpp"
#include "primal/sequent.hpp"

namespace primal::testing {

std::vector<Formula> atoms(std::size_t vars, bool with_top, bool with_bot) {
  std::vector<Formula> out = variable_atoms(vars);
  if (with_top) out.push_back(Formula::top());
  if (with_bot) out.push_back(Formula::bot());
  return out;
}

namespace {

Formula pick(Rng& rng, const std::vector<Formula>& v) { return v[rng.below(v.size())]; }

Formula planted(Rng& rng, const FormulaShape& s, Formula a, Formula b) {
  std::vector<Formula> options;
  if (s.conj) {
    options.push_back(Formula::conj(a, a));
    options.push_back(Formula::conj(a, Formula::top()));
    options.push_back(Formula::conj(b, a));
    options.push_back(Formula::conj(a, Formula::conj(a, b)));
  }
  if (s.imp) {
    options.push_back(Formula::imp(a, b));
    if (s.conj) options.push_back(Formula::imp(Formula::conj(a, a), b));
  }
  if (options.empty()) return a;
  return pick(rng, options);
}

Formula build(Rng& rng, const FormulaShape& s, std::size_t budget) {
  if (budget < 3) return pick(rng, s.atoms);
  if (budget >= 5 && rng.below(100) < s.planted_percent) {
    Formula a = build(rng, s, 1 + rng.below(std::min<std::size_t>(budget / 4, 5)));
    Formula b = pick(rng, s.atoms);
    Formula f = planted(rng, s, a, b);
    if (f.length() <= budget) return f;
  }
  std::vector<Kind> ops;
  if (s.conj) ops.push_back(Kind::And);
  if (s.imp) ops.push_back(Kind::Imp);
  if (s.disj) ops.push_back(Kind::Or);
  if (ops.empty()) return pick(rng, s.atoms);
  std::size_t inner = budget - 1;
  std::size_t left = 1 + rng.below(inner - 1);
  Formula l = build(rng, s, left);
  Formula r = build(rng, s, inner - left);
  return Formula::make(ops[rng.below(ops.size())], l, r);
}

}  // namespace

Formula random_formula(Rng& rng, const FormulaShape& shape) {
  std::size_t budget = 1 + rng.below(shape.max_nodes);
  return build(rng, shape, budget);
}

Proof random_proof(Rng& rng, const FormulaShape& shape, std::size_t steps, bool degenerate) {
  ProofBuilder b;
  FormulaShape small = shape;
  small.max_nodes = std::min<std::size_t>(shape.max_nodes, 7);
  std::size_t last = b.add(Sequent({}, Formula::top()), RuleTag::Top);

  auto other_with_same_ants = [&](std::size_t i) {
    std::vector<std::size_t> same;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b.conclusion(j).antecedents() == b.conclusion(i).antecedents()) same.push_back(j);
    }
    return same[rng.below(same.size())];
  };

  while (b.size() < steps) {
    std::size_t i = rng.below(b.size());
    const Sequent s = b.conclusion(i);
    Formula c = s.consequent();
    switch (rng.below(9)) {
      case 0:
      case 1: {
        Formula f = random_formula(rng, small);
        last = b.add(Sequent({f}, f), RuleTag::X2X);
        break;
      }
      case 2: {
        std::vector<Formula> target(s.antecedents().begin(), s.antecedents().end());
        target.push_back(random_formula(rng, small));
        last = b.inflate(i, canonical_set(target));
        break;
      }
      case 3: {
        std::size_t j = other_with_same_ants(i);
        last = b.add(Sequent(s.antecedents(), Formula::conj(c, b.conclusion(j).consequent())), RuleTag::AndI, {i, j});
        break;
      }
      case 4:
        if (c.is_conj()) {
          bool left = rng.coin();
          last = b.add(Sequent(s.antecedents(), left ? c.left() : c.right()), left ? RuleTag::AndEl : RuleTag::AndEr,
                       {i});
        }
        break;
      case 5:
        last = b.add(Sequent(s.antecedents(), Formula::imp(random_formula(rng, small), c)), RuleTag::ImpIW, {i});
        break;
      case 6: {
        // →E against any step with the same antecedents concluding an
        // implication whose antecedent is c.
        for (std::size_t j = 0; j < b.size(); ++j) {
          const Sequent& t = b.conclusion(j);
          if (t.antecedents() == s.antecedents() && t.consequent().is_imp() && t.consequent().left() == c) {
            last = b.add(Sequent(s.antecedents(), t.consequent().right()), RuleTag::ImpE, {i, j});
            break;
          }
        }
        break;
      }
      case 7: {
        // Γ ⊢ c  and  Γ, c ⊢ d  give  Γ ⊢ d.
        std::vector<Formula> with(s.antecedents().begin(), s.antecedents().end());
        with.push_back(c);
        with = canonical_set(with);
        if (with.size() == s.antecedents().size()) break;
        std::vector<std::size_t> seconds;
        for (std::size_t j = 0; j < b.size(); ++j) {
          if (b.conclusion(j).antecedents() == with) seconds.push_back(j);
        }
        std::size_t j = seconds.empty() ? b.inflate(b.add(Sequent({c}, c), RuleTag::X2X), with)
                                        : seconds[rng.below(seconds.size())];
        last = b.add(Sequent(s.antecedents(), b.conclusion(j).consequent()), RuleTag::Cut, {i, j});
        break;
      }
      default:
        if (degenerate && c.is_imp()) {
          last = b.add(Sequent(s.antecedents(), c.right()), RuleTag::ImpED, {i});
        }
        break;
    }
  }
  return std::move(b).finish(last);
}

}  // namespace primal::testing

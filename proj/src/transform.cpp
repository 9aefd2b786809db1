#include "primal/transform.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

#include "primal/syntax.hpp"

namespace primal {

Formula substitute(Formula context, Formula placeholder, Formula replacement) {
  std::unordered_map<Formula, Formula> memo;
  auto go = [&](auto&& self, Formula f) -> Formula {
    if (f == placeholder) return replacement;
    if (f.is_atom()) return f;
    if (auto it = memo.find(f); it != memo.end()) return it->second;
    Formula out = Formula::make(f.kind(), self(self, f.left()), self(self, f.right()));
    memo.emplace(f, out);
    return out;
  };
  return go(go, context);
}

namespace {

class EfSynthesizer {
 public:
  EfSynthesizer(Formula placeholder, Formula phi, Formula psi, std::vector<Formula> gamma, const Proof& forward,
                const Proof& backward, SubstitutionForm form)
      : x0_(placeholder), phi_(phi), psi_(psi), gamma_(std::move(gamma)), forward_(forward), backward_(backward),
        form_(form) {}

  std::size_t derive(Formula g, bool dir) {
    auto key = std::make_pair(g.id(), dir);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::size_t out = build(g, dir);
    memo_.emplace(key, out);
    return out;
  }

  Proof finish(std::size_t last) && { return std::move(b_).finish(last); }

 private:
  Formula from(bool dir) const { return dir ? phi_ : psi_; }
  Formula to(bool dir) const { return dir ? psi_ : phi_; }

  bool mentions_placeholder(Formula g) {
    if (g == x0_) return true;
    if (g.is_atom()) return false;
    if (auto it = contains_.find(g); it != contains_.end()) return it->second;
    bool r = mentions_placeholder(g.left()) || mentions_placeholder(g.right());
    contains_.emplace(g, r);
    return r;
  }

  std::vector<Formula> gamma_plus(std::initializer_list<Formula> extra) const {
    std::vector<Formula> out = gamma_;
    out.insert(out.end(), extra);
    return canonical_set(std::move(out));
  }

  std::size_t build(Formula g, bool dir) {
    Formula a = from(dir), b = to(dir);
    if (g == x0_) {
      std::size_t last = b_.append(dir ? forward_ : backward_);
      return last;
    }
    if (!mentions_placeholder(g)) {
      std::size_t ax = b_.add(Sequent({g}, g), RuleTag::X2X);
      return b_.inflate(ax, gamma_plus({g}));
    }
    Formula ga = substitute(g, x0_, a);
    Formula gb = substitute(g, x0_, b);
    Formula l = g.left(), r = g.right();
    Formula la = substitute(l, x0_, a), lb = substitute(l, x0_, b);
    Formula ra = substitute(r, x0_, a), rb = substitute(r, x0_, b);

    if (g.is_conj()) {
      std::vector<Formula> ctx = gamma_plus({ga});
      std::size_t ax = b_.inflate(b_.add(Sequent({ga}, ga), RuleTag::X2X), ctx);
      std::size_t el = b_.add(Sequent(ctx, la), RuleTag::AndEl, {ax});
      std::size_t er = b_.add(Sequent(ctx, ra), RuleTag::AndEr, {ax});
      std::size_t sub_l = b_.inflate(derive(l, dir), ctx);
      std::size_t sub_r = b_.inflate(derive(r, dir), ctx);
      std::size_t cl = b_.add(Sequent(ctx, lb), RuleTag::Cut, {el, sub_l});
      std::size_t cr = b_.add(Sequent(ctx, rb), RuleTag::Cut, {er, sub_r});
      return b_.add(Sequent(ctx, gb), RuleTag::AndI, {cl, cr});
    }
    if (g.is_imp()) {
      bool weak = form_ == SubstitutionForm::Weak;
      // (la -> ra)  ~>  (lb -> ra)  ~>  (lb -> rb)
      Formula mid = Formula::imp(lb, ra);
      std::size_t fl = derive(l, dir), bl = derive(l, !dir);
      std::size_t e1 = b_.add(Sequent(gamma_plus({ga}), mid), weak ? RuleTag::E1_0 : RuleTag::E1, {fl, bl});
      std::size_t fr = derive(r, dir), br = derive(r, !dir);
      std::size_t e2 = b_.add(Sequent(gamma_plus({mid}), gb), weak ? RuleTag::E2_0 : RuleTag::E2, {fr, br});
      std::vector<Formula> ctx = gamma_plus({ga});
      std::size_t e2_inflated = b_.inflate(e2, gamma_plus({ga, mid}));
      return b_.add(Sequent(ctx, gb), RuleTag::Cut, {e1, e2_inflated});
    }
    throw std::invalid_argument("synthesize_ef_proof: context formula contains disjunction");
  }

  Formula x0_, phi_, psi_;
  std::vector<Formula> gamma_;
  const Proof& forward_;
  const Proof& backward_;
  SubstitutionForm form_;
  ProofBuilder b_;
  std::map<std::pair<std::uint32_t, bool>, std::size_t> memo_;
  std::unordered_map<Formula, bool> contains_;
};

}  // namespace

Proof synthesize_ef_proof(Formula context, Formula placeholder, Formula phi, Formula psi,
                          std::span<const Formula> gamma, const Proof& forward, const Proof& backward,
                          SubstitutionForm form) {
  std::vector<Formula> g = canonical_set({gamma.begin(), gamma.end()});
  if (form == SubstitutionForm::Weak && !g.empty()) {
    throw std::invalid_argument("synthesize_ef_proof: the weak form takes no assumptions");
  }
  if (context.has_disjunction()) {
    throw std::invalid_argument("synthesize_ef_proof: context formula contains disjunction");
  }
  auto expect = [&](const Proof& p, Formula a, Formula b, const char* which) {
    Sequent want = Sequent(g, b).with_antecedent(a);
    if (p.empty() || p.conclusion() != want) {
      throw std::invalid_argument(std::string("synthesize_ef_proof: ") + which + " proof must conclude " +
                                  to_string(want));
    }
  };
  expect(forward, phi, psi, "forward");
  expect(backward, psi, phi, "backward");

  EfSynthesizer synth(placeholder, phi, psi, std::move(g), forward, backward, form);
  std::size_t last = synth.derive(context, true);
  return std::move(synth).finish(last);
}

namespace {

void add_implications(Formula f, FormulaSet& out) {
  for (Formula s : subformulas(f)) {
    if (s.is_imp()) out.insert(s);
  }
}

bool is_substitution_step(RuleTag r) { return r == RuleTag::E0 || r == RuleTag::E1_0 || r == RuleTag::E2_0; }

}  // namespace

FormulaSet significant_implications(const Proof& proof, const Sequent& sigma) {
  FormulaSet sig;
  for (Formula m : members(sigma)) add_implications(m, sig);

  std::vector<std::pair<Formula, Formula>> links;
  for (const ProofStep& st : proof.steps) {
    if (!is_substitution_step(st.rule)) continue;
    const auto& ants = st.conclusion.antecedents();
    if (ants.size() != 1) continue;
    links.emplace_back(ants[0], st.conclusion.consequent());
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : links) {
      bool ina = sig.count(a), inb = sig.count(b);
      if (ina == inb) continue;
      add_implications(ina ? b : a, sig);
      changed = true;
    }
  }
  return sig;
}

Formula erase_insignificant(Formula f, const FormulaSet& significant) {
  std::unordered_map<Formula, Formula> memo;
  auto go = [&](auto&& self, Formula g) -> Formula {
    if (g.is_atom()) return g;
    if (auto it = memo.find(g); it != memo.end()) return it->second;
    Formula out;
    if (g.is_imp()) {
      out = significant.count(g) ? g : self(self, g.right());
    } else {
      out = Formula::make(g.kind(), self(self, g.left()), self(self, g.right()));
    }
    memo.emplace(g, out);
    return out;
  };
  return go(go, f);
}

namespace {

Sequent erase_in_sequent(const Sequent& s, const FormulaSet& sig) {
  std::vector<Formula> ants;
  ants.reserve(s.antecedents().size());
  for (Formula a : s.antecedents()) ants.push_back(erase_insignificant(a, sig));
  return Sequent(std::move(ants), erase_insignificant(s.consequent(), sig));
}

// Index (into `premises`) of the premise that is the implication of an ImpE step.
std::size_t implication_premise(const Proof& proof, const ProofStep& st) {
  Formula c = st.conclusion.consequent();
  const Sequent& p0 = proof.steps[st.premises[0]].conclusion;
  const Sequent& p1 = proof.steps[st.premises[1]].conclusion;
  if (p1.consequent() == Formula::imp(p0.consequent(), c)) return 1;
  return 0;
}

std::size_t find_premise(const Proof& proof, const ProofStep& st, Formula ant, Formula cons) {
  Sequent want({ant}, cons);
  for (std::size_t k = 0; k < st.premises.size(); ++k) {
    if (proof.steps[st.premises[k]].conclusion == want) return k;
  }
  throw std::logic_error("eliminate_insignificant: substitution premise not found");
}

}  // namespace

Proof eliminate_insignificant(const Proof& proof, const Sequent& sigma) {
  if (auto v = check_proof(proof, LogicId{LogicName::PEL0, false})) {
    throw std::invalid_argument("eliminate_insignificant: input is not a PEL0 proof: " + v->describe());
  }
  if (proof.conclusion() != sigma) {
    throw std::invalid_argument("eliminate_insignificant: proof does not conclude " + to_string(sigma));
  }
  FormulaSet sig = significant_implications(proof, sigma);

  ProofBuilder out;
  std::vector<std::size_t> map(proof.steps.size());
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& st = proof.steps[i];
    Sequent image = erase_in_sequent(st.conclusion, sig);
    auto keep = [&] {
      std::vector<std::size_t> prem;
      for (std::size_t p : st.premises) prem.push_back(map[p]);
      return out.add(image, st.rule, std::move(prem));
    };
    auto collapse_to = [&](std::size_t premise_slot) {
      std::size_t target = map[st.premises[premise_slot]];
      if (out.conclusion(target) != image) {
        throw std::logic_error("eliminate_insignificant: collapsed step does not match its premise");
      }
      return target;
    };

    switch (st.rule) {
      case RuleTag::ImpE: {
        std::size_t slot = implication_premise(proof, st);
        Formula imp = proof.steps[st.premises[slot]].conclusion.consequent();
        map[i] = sig.count(imp) ? keep() : collapse_to(slot);
        break;
      }
      case RuleTag::ImpIW:
        map[i] = sig.count(st.conclusion.consequent()) ? keep() : collapse_to(0);
        break;
      case RuleTag::E0:
      case RuleTag::E1_0:
      case RuleTag::E2_0: {
        Formula a = st.conclusion.antecedents()[0];
        Formula b = st.conclusion.consequent();
        if (sig.count(a)) {
          map[i] = keep();
        } else if (st.rule == RuleTag::E1_0) {
          // Both sides erase to their shared consequent.
          map[i] = out.add(image, RuleTag::X2X);
        } else {
          map[i] = collapse_to(find_premise(proof, st, a.right(), b.right()));
        }
        break;
      }
      default:
        map[i] = keep();
        break;
    }
  }
  return std::move(out).finish(map.back());
}

bool all_implications_significant(const Proof& proof, const Sequent& sigma) {
  FormulaSet sig = significant_implications(proof, sigma);
  for (const ProofStep& st : proof.steps) {
    for (Formula m : members(st.conclusion)) {
      for (Formula s : subformulas(m)) {
        if (s.is_imp() && !sig.count(s)) return false;
      }
    }
  }
  return true;
}

}  // namespace primal

#include "primal/calculi.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "primal/syntax.hpp"

namespace primal {

namespace {

constexpr std::array<std::string_view, kRuleCount> kRuleNames = {
    "Top",  "X2X",   "PremiseInflation", "Cut",  "AndEl", "AndEr", "AndI",
    "ImpE", "ImpIW", "ImpI",             "ImpED", "BotAx", "DFExcludedMiddle", "OrE",
    "OrIl", "OrIr",  "E1",               "E2",   "E1_0",  "E2_0",  "E0"};

constexpr std::array<std::size_t, kRuleCount> kArity = {0, 0, 1, 2, 1, 1, 2, 2, 1, 1, 1,
                                                        0, 2, 3, 1, 1, 2, 2, 2, 2, 4};

constexpr RuleSet kBL{RuleTag::Top,  RuleTag::X2X,   RuleTag::PremiseInflation, RuleTag::Cut,
                      RuleTag::AndEl, RuleTag::AndEr, RuleTag::AndI};
constexpr RuleSet kPL = kBL | RuleSet{RuleTag::ImpE, RuleTag::ImpIW};
constexpr RuleSet kML = kPL | RuleSet{RuleTag::ImpI};
constexpr RuleSet kIL = kML | RuleSet{RuleTag::BotAx};
constexpr RuleSet kOr{RuleTag::OrE, RuleTag::OrIl, RuleTag::OrIr};

using Ants = std::vector<Formula>;

std::string show(const Sequent& s) { return "'" + to_string(s) + "'"; }

Ants plus(const Ants& base, Formula f) {
  Ants out = base;
  auto it = std::lower_bound(out.begin(), out.end(), f);
  if (it == out.end() || *it != f) out.insert(it, f);
  return out;
}

Ants minus(const Ants& base, Formula f) {
  Ants out = base;
  auto it = std::lower_bound(out.begin(), out.end(), f);
  if (it != out.end() && *it == f) out.erase(it);
  return out;
}

bool is_single(const Ants& a, Formula f) { return a.size() == 1 && a[0] == f; }

using Result = std::optional<std::string>;
const Result kOk = std::nullopt;

Result fail(std::string why) { return Result(std::move(why)); }

// Each checker sees premises in the schema's canonical order.
Result check_canonical(RuleTag rule, const Sequent& c, std::span<const Sequent> p) {
  const Ants& ca = c.antecedents();
  Formula cc = c.consequent();
  switch (rule) {
    case RuleTag::Top:
      if (!ca.empty() || cc != Formula::top()) return fail("conclusion must be '|- top'");
      return kOk;
    case RuleTag::X2X:
      if (!is_single(ca, cc)) return fail("conclusion must have the form 'phi |- phi'");
      return kOk;
    case RuleTag::BotAx:
      if (!is_single(ca, Formula::bot())) return fail("conclusion must have the form 'bot |- phi'");
      return kOk;
    case RuleTag::PremiseInflation:
      if (p[0].consequent() != cc) return fail("consequent differs from the premise");
      if (!is_subset(p[0].antecedents(), ca)) return fail("conclusion antecedents do not include the premise's");
      return kOk;
    case RuleTag::Cut:
      if (p[0].antecedents() != ca) return fail("first premise antecedents differ from the conclusion");
      if (p[1].consequent() != cc) return fail("second premise consequent differs from the conclusion");
      if (p[1].antecedents() != plus(ca, p[0].consequent()))
        return fail("second premise antecedents must be the conclusion's plus the cut formula");
      return kOk;
    case RuleTag::AndEl:
    case RuleTag::AndEr: {
      if (p[0].antecedents() != ca) return fail("antecedents differ from the premise");
      Formula pc = p[0].consequent();
      if (!pc.is_conj()) return fail("premise consequent is not a conjunction");
      Formula want = rule == RuleTag::AndEl ? pc.left() : pc.right();
      if (want != cc) return fail("conclusion is not the selected conjunct");
      return kOk;
    }
    case RuleTag::AndI:
      if (p[0].antecedents() != ca || p[1].antecedents() != ca) return fail("antecedents differ");
      if (!cc.is_conj() || cc.left() != p[0].consequent() || cc.right() != p[1].consequent())
        return fail("conclusion is not the conjunction of the premises");
      return kOk;
    case RuleTag::ImpE:
      if (p[0].antecedents() != ca || p[1].antecedents() != ca) return fail("antecedents differ");
      if (p[1].consequent() != Formula::imp(p[0].consequent(), cc))
        return fail("second premise is not the implication from the first premise to the conclusion");
      return kOk;
    case RuleTag::ImpIW:
      if (p[0].antecedents() != ca) return fail("antecedents differ from the premise");
      if (!cc.is_imp() || cc.right() != p[0].consequent())
        return fail("conclusion is not an implication with the premise's consequent");
      return kOk;
    case RuleTag::ImpI:
      if (!cc.is_imp()) return fail("conclusion is not an implication");
      if (p[0].consequent() != cc.right()) return fail("premise consequent is not the implication's consequent");
      if (p[0].antecedents() != plus(ca, cc.left()))
        return fail("premise antecedents must be the conclusion's plus the implication's antecedent");
      return kOk;
    case RuleTag::ImpED: {
      if (p[0].antecedents() != ca) return fail("antecedents differ from the premise");
      Formula pc = p[0].consequent();
      if (!pc.is_imp() || pc.right() != cc) return fail("premise is not an implication into the conclusion");
      return kOk;
    }
    case RuleTag::DFExcludedMiddle: {
      if (p[0].consequent() != cc || p[1].consequent() != cc) return fail("consequents differ");
      for (Formula n : p[1].antecedents()) {
        if (!n.is_imp() || n.right() != Formula::bot()) continue;
        if (p[1].antecedents() == plus(ca, n) && p[0].antecedents() == plus(ca, n.left())) return kOk;
      }
      return fail("premises are not 'G, phi |- psi' and 'G, phi -> bot |- psi'");
    }
    case RuleTag::OrE: {
      if (p[2].antecedents() != ca) return fail("disjunction premise antecedents differ");
      Formula d = p[2].consequent();
      if (!d.is_disj()) return fail("third premise is not a disjunction");
      if (p[0].consequent() != cc || p[1].consequent() != cc) return fail("case consequents differ");
      if (p[0].antecedents() != plus(ca, d.left()) || p[1].antecedents() != plus(ca, d.right()))
        return fail("case premises must add the respective disjunct");
      return kOk;
    }
    case RuleTag::OrIl:
    case RuleTag::OrIr: {
      if (p[0].antecedents() != ca) return fail("antecedents differ from the premise");
      if (!cc.is_disj()) return fail("conclusion is not a disjunction");
      Formula side = rule == RuleTag::OrIl ? cc.left() : cc.right();
      if (side != p[0].consequent()) return fail("premise is not the selected disjunct");
      return kOk;
    }
    case RuleTag::E1:
    case RuleTag::E2: {
      // E1: G, phi->chi |- psi->chi     E2: G, chi->phi |- chi->psi
      // premises: G, phi |- psi  and  G, psi |- phi
      if (!cc.is_imp()) return fail("conclusion is not an implication");
      Formula psi = p[0].consequent();
      Formula phi = p[1].consequent();
      bool left = rule == RuleTag::E1;
      Formula chi = left ? cc.right() : cc.left();
      if ((left ? cc.left() : cc.right()) != psi) return fail("conclusion does not substitute the first premise's consequent");
      Formula source = left ? Formula::imp(phi, chi) : Formula::imp(chi, phi);
      if (!std::binary_search(ca.begin(), ca.end(), source))
        return fail("conclusion antecedents lack the substituted implication");
      for (const Ants& gamma : {minus(ca, source), ca}) {
        if (p[0].antecedents() == plus(gamma, phi) && p[1].antecedents() == plus(gamma, psi)) return kOk;
      }
      return fail("premise antecedents do not match 'G, phi' and 'G, psi'");
    }
    case RuleTag::E1_0:
    case RuleTag::E2_0: {
      if (ca.size() != 1 || !ca[0].is_imp() || !cc.is_imp()) return fail("conclusion must be 'A -> B |- C -> D'");
      Formula phi = p[1].consequent();
      Formula psi = p[0].consequent();
      if (!is_single(p[0].antecedents(), phi) || !is_single(p[1].antecedents(), psi))
        return fail("premises must be 'phi |- psi' and 'psi |- phi'");
      Formula src = ca[0];
      bool left = rule == RuleTag::E1_0;
      if (left) {
        if (src.left() != phi || cc.left() != psi || src.right() != cc.right())
          return fail("conclusion is not '(phi -> chi) |- (psi -> chi)'");
      } else {
        if (src.right() != phi || cc.right() != psi || src.left() != cc.left())
          return fail("conclusion is not '(chi -> phi) |- (chi -> psi)'");
      }
      return kOk;
    }
    case RuleTag::E0: {
      if (ca.size() != 1 || !ca[0].is_imp() || !cc.is_imp()) return fail("conclusion must be 'A -> B |- C -> D'");
      Formula p1 = ca[0].left(), q1 = ca[0].right(), p2 = cc.left(), q2 = cc.right();
      if (p[0] != Sequent({p1}, p2) || p[1] != Sequent({p2}, p1) || p[2] != Sequent({q1}, q2) ||
          p[3] != Sequent({q2}, q1))
        return fail("premises must establish both antecedent and consequent equivalences");
      return kOk;
    }
  }
  return fail("unknown rule");
}

}  // namespace

std::string_view rule_name(RuleTag tag) { return kRuleNames[static_cast<std::size_t>(tag)]; }

std::optional<RuleTag> parse_rule(std::string_view name) {
  for (std::size_t i = 0; i < kRuleCount; ++i) {
    if (kRuleNames[i] == name) return static_cast<RuleTag>(i);
  }
  return std::nullopt;
}

std::size_t rule_arity(RuleTag tag) { return kArity[static_cast<std::size_t>(tag)]; }

RuleSet LogicId::admitted() const {
  RuleSet base;
  switch (name) {
    case LogicName::BL: base = kBL; break;
    case LogicName::PL: base = kPL; break;
    case LogicName::PL_ED: base = kPL | RuleSet{RuleTag::ImpED}; break;
    case LogicName::ML: base = kML; break;
    case LogicName::IL: base = kIL; break;
    case LogicName::CL: base = kIL | RuleSet{RuleTag::DFExcludedMiddle}; break;
    case LogicName::PEL1: base = kPL | RuleSet{RuleTag::E1}; break;
    case LogicName::PEL2: base = kPL | RuleSet{RuleTag::E2}; break;
    case LogicName::PEL: base = kPL | RuleSet{RuleTag::E1, RuleTag::E2}; break;
    case LogicName::PEL1_0: base = kPL | RuleSet{RuleTag::E1_0}; break;
    case LogicName::PEL2_0: base = kPL | RuleSet{RuleTag::E2_0}; break;
    case LogicName::PEL0: base = kPL | RuleSet{RuleTag::E1_0, RuleTag::E2_0, RuleTag::E0}; break;
  }
  return with_disjunction ? base | kOr : base;
}

namespace {
constexpr std::array<std::string_view, 12> kLogicNames = {"BL",   "PL",   "PL_ED", "ML",     "IL",     "CL",
                                                          "PEL1", "PEL2", "PEL",   "PEL1_0", "PEL2_0", "PEL0"};
}

std::string LogicId::to_string() const {
  std::string s(kLogicNames[static_cast<std::size_t>(name)]);
  if (with_disjunction) s += "_OR";
  return s;
}

std::optional<LogicId> parse_logic(std::string_view text) {
  std::string s;
  bool disj = false;
  constexpr std::string_view kVee = "∨";
  if (text.size() >= kVee.size() && text.substr(text.size() - kVee.size()) == kVee) {
    disj = true;
    text.remove_suffix(kVee.size());
  }
  for (char ch : text) s += ch == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (std::string_view suffix : {"_OR", "+OR"}) {
    if (s.size() > suffix.size() && s.ends_with(suffix)) {
      disj = true;
      s.resize(s.size() - suffix.size());
    }
  }
  if (s == "PEL_0") s = "PEL0";
  if (s == "PLED") s = "PL_ED";
  for (std::size_t i = 0; i < kLogicNames.size(); ++i) {
    if (kLogicNames[i] == s) return LogicId{static_cast<LogicName>(i), disj};
  }
  return std::nullopt;
}

std::vector<LogicId> logic_catalogue() {
  std::vector<LogicId> out;
  for (bool disj : {false, true}) {
    for (std::size_t i = 0; i < kLogicNames.size(); ++i) out.push_back({static_cast<LogicName>(i), disj});
  }
  return out;
}

std::string Violation::describe() const {
  return "step " + std::to_string(step + 1) + " (" + std::string(rule_name(rule)) + "): " + reason;
}

std::optional<std::string> check_step(const ProofStep& step, std::span<const Sequent> premises) {
  std::size_t arity = rule_arity(step.rule);
  if (premises.size() != arity) {
    return "rule takes " + std::to_string(arity) + " premise(s), got " + std::to_string(premises.size());
  }
  if (arity <= 1) return check_canonical(step.rule, step.conclusion, premises);

  // Premise order in a proof file is free; try every arrangement.
  std::vector<std::size_t> order(arity);
  for (std::size_t i = 0; i < arity; ++i) order[i] = i;
  std::vector<Sequent> arranged(arity);
  std::optional<std::string> first;
  do {
    for (std::size_t i = 0; i < arity; ++i) arranged[i] = premises[order[i]];
    auto r = check_canonical(step.rule, step.conclusion, arranged);
    if (!r) return std::nullopt;
    if (!first) first = std::move(r);
  } while (std::next_permutation(order.begin(), order.end()));
  return first;
}

std::optional<Violation> check_proof(const Proof& proof, LogicId logic) {
  if (proof.steps.empty()) return Violation{0, RuleTag::Top, "empty proof"};
  std::vector<Sequent> premises;
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& step = proof.steps[i];
    if (!logic.admits(step.rule)) {
      return Violation{i, step.rule, "rule not admitted in " + logic.to_string()};
    }
    premises.clear();
    for (std::size_t p : step.premises) {
      if (p >= i) return Violation{i, step.rule, "premise " + std::to_string(p + 1) + " is not an earlier step"};
      premises.push_back(proof.steps[p].conclusion);
    }
    if (auto why = check_step(step, premises)) {
      return Violation{i, step.rule, *why + " in " + show(step.conclusion)};
    }
  }
  return std::nullopt;
}

std::size_t ProofBuilder::add(Sequent conclusion, RuleTag rule, std::vector<std::size_t> premises) {
  if (auto it = index_.find(conclusion); it != index_.end()) return it->second;
  std::size_t id = proof_.steps.size();
  index_.emplace(conclusion, id);
  proof_.steps.push_back({std::move(conclusion), rule, std::move(premises)});
  return id;
}

std::size_t ProofBuilder::inflate(std::size_t from, std::span<const Formula> target) {
  const Sequent& s = conclusion(from);
  Sequent bigger = s.with_antecedents(target);
  if (bigger == s) return from;
  return add(std::move(bigger), RuleTag::PremiseInflation, {from});
}

std::size_t ProofBuilder::append(const Proof& proof) {
  std::vector<std::size_t> remap(proof.steps.size());
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& st = proof.steps[i];
    std::vector<std::size_t> prem;
    prem.reserve(st.premises.size());
    for (std::size_t p : st.premises) prem.push_back(remap.at(p));
    remap[i] = add(st.conclusion, st.rule, std::move(prem));
  }
  return remap.back();
}

Proof ProofBuilder::finish(std::size_t last) && {
  proof_.steps.resize(last + 1);
  index_.clear();
  return std::move(proof_);
}

}  // namespace primal

#include "primal/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "primal/syntax.hpp"

namespace primal {

std::string_view verdict_name(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::Theorem: return "THEOREM";
    case OracleVerdict::NotDerived: return "NOT-DERIVED";
    case OracleVerdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

OracleUniverse::OracleUniverse(std::span<const Formula> roots) {
  formulas = subformulas(roots);
  const std::size_t n = formulas.size();
  index.reserve(n * 2);
  for (std::uint32_t i = 0; i < n; ++i) index.emplace(formulas[i], i);
  left.assign(n, npos);
  right.assign(n, npos);
  parents.resize(n);
  kinds.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    Formula f = formulas[i];
    kinds[i] = f.kind();
    if (f.kind() == Kind::Top) top = i;
    if (f.kind() == Kind::Bot) bot = i;
    if (f.is_atom()) continue;
    left[i] = index.at(f.left());
    right[i] = index.at(f.right());
    parents[left[i]].push_back(i);
    if (right[i] != left[i]) parents[right[i]].push_back(i);
    if (f.is_imp()) implications.push_back(i);
  }
}

namespace {

// Consequences of the rules that keep the antecedent set fixed.
class LocalRules {
 public:
  LocalRules(const OracleUniverse& u, RuleSet rules)
      : u_(u),
        imp_e_(rules.contains(RuleTag::ImpE)),
        imp_iw_(rules.contains(RuleTag::ImpIW)),
        imp_ed_(rules.contains(RuleTag::ImpED)),
        or_il_(rules.contains(RuleTag::OrIl)),
        or_ir_(rules.contains(RuleTag::OrIr)),
        bot_ax_(rules.contains(RuleTag::BotAx)) {}

  // Saturates d starting from the formulas in `work`. `import(v, d, push)`
  // is called once per derived v to merge in facts known about v.
  template <class Import>
  void close(Bits& d, std::vector<std::uint32_t>& work, Import&& import, std::size_t* steps = nullptr) const {
    auto add = [&](std::uint32_t x) {
      if (!test_bit(d, x)) {
        set_bit(d, x);
        work.push_back(x);
      }
    };
    while (!work.empty()) {
      std::uint32_t v = work.back();
      work.pop_back();
      if (steps) ++*steps;
      switch (u_.kinds[v]) {
        case Kind::And:
          add(u_.left[v]);
          add(u_.right[v]);
          break;
        case Kind::Imp:
          if ((imp_e_ && test_bit(d, u_.left[v])) || imp_ed_) add(u_.right[v]);
          break;
        case Kind::Bot:
          if (bot_ax_) {
            for (std::uint32_t x = 0; x < u_.size(); ++x) add(x);
          }
          break;
        default:
          break;
      }
      for (std::uint32_t p : u_.parents[v]) {
        std::uint32_t l = u_.left[p], r = u_.right[p];
        switch (u_.kinds[p]) {
          case Kind::And:
            if (test_bit(d, l) && test_bit(d, r)) add(p);
            break;
          case Kind::Imp:
            if (l == v && imp_e_ && test_bit(d, p)) add(r);
            if (r == v && imp_iw_) add(p);
            break;
          case Kind::Or:
            if ((l == v && or_il_) || (r == v && or_ir_)) add(p);
            break;
          default:
            break;
        }
      }
      import(v, add);
    }
  }

 private:
  const OracleUniverse& u_;
  bool imp_e_, imp_iw_, imp_ed_, or_il_, or_ir_, bot_ax_;
};

void or_into(Bits& d, const Bits& src, std::vector<std::uint32_t>& work) {
  for (std::size_t w = 0; w < d.size(); ++w) {
    std::uint64_t fresh = src[w] & ~d[w];
    if (!fresh) continue;
    d[w] |= fresh;
    while (fresh) {
      int b = __builtin_ctzll(fresh);
      work.push_back(static_cast<std::uint32_t>(w * 64 + b));
      fresh &= fresh - 1;
    }
  }
}

void all_bits(const Bits& d, std::vector<std::uint32_t>& out) {
  for (std::size_t w = 0; w < d.size(); ++w) {
    std::uint64_t x = d[w];
    while (x) {
      out.push_back(static_cast<std::uint32_t>(w * 64 + __builtin_ctzll(x)));
      x &= x - 1;
    }
  }
}

bool weak_substitution(RuleSet r) {
  return r.contains(RuleTag::E1_0) || r.contains(RuleTag::E2_0) || r.contains(RuleTag::E0);
}

bool adds_antecedents(RuleSet r) {
  return r.contains(RuleTag::ImpI) || r.contains(RuleTag::E1) || r.contains(RuleTag::E2) ||
         r.contains(RuleTag::DFExcludedMiddle) || r.contains(RuleTag::OrE) || r.contains(RuleTag::BotAx);
}

// Applies E1_0 / E2_0 / E0 to a table of singleton rows: for implications
// a, b with the required sides mutually derivable, b ∈ D({a}). Returns true
// if a row changed.
template <class Row>
bool apply_weak_substitution(const OracleUniverse& u, RuleSet rules, Row&& row) {
  auto eq = [&](std::uint32_t p, std::uint32_t q) {
    if (p == q) return true;
    const Bits* rp = row(p);
    const Bits* rq = row(q);
    return rp && rq && test_bit(*rp, q) && test_bit(*rq, p);
  };
  bool e1 = rules.contains(RuleTag::E1_0), e2 = rules.contains(RuleTag::E2_0), e0 = rules.contains(RuleTag::E0);
  bool changed = false;
  for (std::uint32_t a : u.implications) {
    Bits* ra = row(a);
    if (!ra) continue;
    for (std::uint32_t b : u.implications) {
      if (a == b || test_bit(*ra, b)) continue;
      bool same_r = u.right[a] == u.right[b], same_l = u.left[a] == u.left[b];
      bool ok = (e1 && same_r && eq(u.left[a], u.left[b])) || (e2 && same_l && eq(u.right[a], u.right[b])) ||
                (e0 && eq(u.left[a], u.left[b]) && eq(u.right[a], u.right[b]));
      if (ok) {
        set_bit(*ra, b);
        changed = true;
      }
    }
  }
  return changed;
}

}  // namespace

bool ClosureOracle::supports(LogicId logic) { return !adds_antecedents(logic.admitted()); }

ClosureOracle::ClosureOracle(LogicId logic, std::span<const Formula> universe_roots)
    : logic_(logic), rules_(logic.admitted()), u_(universe_roots) {
  if (!supports(logic)) throw std::invalid_argument("ClosureOracle: " + logic.to_string() + " adds antecedents");
  const std::size_t n = u_.size();
  empty_ = u_.empty_bits();
  rows_.assign(n, empty_);
  for (std::uint32_t i = 0; i < n; ++i) set_bit(rows_[i], i);

  bool changed = true;
  while (changed) {
    changed = false;
    {
      Bits d = empty_;
      std::vector<std::uint32_t> work;
      all_bits(d, work);
      if (u_.top != OracleUniverse::npos && !test_bit(d, u_.top)) {
        set_bit(d, u_.top);
        work.push_back(u_.top);
      }
      close(d, std::move(work), OracleUniverse::npos);
      if (d != empty_) {
        empty_ = std::move(d);
        changed = true;
      }
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      Bits d = rows_[i];
      for (std::size_t w = 0; w < d.size(); ++w) d[w] |= empty_[w];
      std::vector<std::uint32_t> work;
      all_bits(d, work);
      close(d, std::move(work), i);
      if (d != rows_[i]) {
        rows_[i] = std::move(d);
        changed = true;
      }
    }
    if (weak_substitution(rules_)) {
      changed |= apply_weak_substitution(u_, rules_, [&](std::uint32_t i) { return &rows_[i]; });
    }
  }
}

void ClosureOracle::close(Bits& d, std::vector<std::uint32_t> work, std::uint32_t self) const {
  LocalRules rules(u_, rules_);
  rules.close(d, work, [&](std::uint32_t v, auto&&) {
    if (v != self) or_into(d, rows_[v], work);
  });
}

Bits ClosureOracle::derivable_from_indices(std::span<const std::uint32_t> gamma) const {
  if (gamma.empty()) return empty_;
  // Every row is closed and contains D(∅), so an inference can only be new
  // if one of its premises is missing from the first row.
  Bits d = rows_[gamma[0]];
  std::vector<std::uint32_t> work;
  for (std::uint32_t g : gamma.subspan(1)) or_into(d, rows_[g], work);
  // Rows are closed under import, so only formulas outside `base` need it.
  const Bits base = d;
  LocalRules rules(u_, rules_);
  rules.close(d, work, [&](std::uint32_t v, auto&&) {
    if (!test_bit(base, v)) or_into(d, rows_[v], work);
  });
  return d;
}

Bits ClosureOracle::derivable_from(std::span<const Formula> gamma) const {
  std::vector<std::uint32_t> idx;
  for (Formula g : gamma) {
    std::uint32_t i = u_.index_of(g);
    if (i == OracleUniverse::npos) throw std::out_of_range("ClosureOracle: antecedent outside the universe");
    idx.push_back(i);
  }
  return derivable_from_indices(idx);
}

bool ClosureOracle::derivable(const Sequent& s) const {
  std::uint32_t q = u_.index_of(s.consequent());
  if (q == OracleUniverse::npos) throw std::out_of_range("ClosureOracle: consequent outside the universe");
  return test_bit(derivable_from(s.antecedents()), q);
}

namespace {

// Saturation over an explicit family of antecedent sets, for logics whose
// rules add antecedents (→I, strong E1/E2, excluded middle, ∨E).
class ContextSaturator {
 public:
  ContextSaturator(const OracleUniverse& u, RuleSet rules, const SaturationConfig& cfg) : u_(u), rules_(rules), cfg_(cfg) {}

  void build(const std::vector<std::uint32_t>& hyps) {
    std::vector<std::uint32_t> pool;
    auto want = [&](std::uint32_t i) {
      if (!std::binary_search(hyps.begin(), hyps.end(), i)) pool.push_back(i);
    };
    for (std::uint32_t p : u_.implications) {
      if (rules_.contains(RuleTag::ImpI) || rules_.contains(RuleTag::E1)) want(u_.left[p]);
      if (rules_.contains(RuleTag::E2)) want(u_.right[p]);
      if (rules_.contains(RuleTag::DFExcludedMiddle) && u_.right[p] == u_.bot) {
        want(u_.left[p]);
        want(p);
      }
    }
    if (rules_.contains(RuleTag::OrE)) {
      for (std::uint32_t i = 0; i < u_.size(); ++i) {
        if (u_.formulas[i].is_disj()) {
          want(u_.left[i]);
          want(u_.right[i]);
        }
      }
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    std::size_t ext = cfg_.max_extension;
    while (ext > 0 && family_size(pool.size(), ext) > cfg_.max_contexts) {
      --ext;
      partial_ = true;
    }
    std::vector<std::uint32_t> pick;
    add_context(hyps);
    extend(hyps, pool, 0, ext, pick);
    if (weak_substitution(rules_)) {
      for (std::uint32_t i = 0; i < u_.size() && contexts_.size() < cfg_.max_contexts * 2; ++i) add_context({i});
      if (contexts_.size() >= cfg_.max_contexts * 2) partial_ = true;
    }
  }

  bool run() {
    LocalRules local(u_, rules_);
    for (std::size_t c = 0; c < contexts_.size(); ++c) {
      if (u_.top != OracleUniverse::npos) set_bit(d_[c], u_.top);
      for (std::uint32_t a : ants_[c]) set_bit(d_[c], a);
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t c = 0; c < contexts_.size(); ++c) {
        if (steps_ > cfg_.step_bound) {
          partial_ = true;
          return false;
        }
        Bits before = d_[c];
        std::vector<std::uint32_t> work;
        all_bits(d_[c], work);
        bool again = true;
        while (again) {
          local.close(d_[c], work, [](std::uint32_t, auto&&) {}, &steps_);
          again = discharge(c, work);
        }
        if (d_[c] != before) changed = true;
      }
      if (weak_substitution(rules_)) {
        changed |= apply_weak_substitution(u_, rules_, [&](std::uint32_t i) -> Bits* {
          auto it = index_.find(std::vector<std::uint32_t>{i});
          return it == index_.end() ? nullptr : &d_[it->second];
        });
      }
    }
    return true;
  }

  bool partial() const { return partial_; }
  std::size_t steps() const { return steps_; }
  std::size_t contexts() const { return contexts_.size(); }
  const Bits& derived(std::size_t c) const { return d_[c]; }
  const std::vector<std::uint32_t>& antecedents(std::size_t c) const { return ants_[c]; }

 private:
  static std::size_t family_size(std::size_t pool, std::size_t ext) {
    std::size_t total = 0, choose = 1;
    for (std::size_t k = 0; k <= ext; ++k) {
      total += choose;
      if (total > (1u << 30)) return total;
      choose = choose * (pool - std::min(pool, k)) / (k + 1);
    }
    return total;
  }

  void extend(const std::vector<std::uint32_t>& hyps, const std::vector<std::uint32_t>& pool, std::size_t from,
              std::size_t left, std::vector<std::uint32_t>& pick) {
    if (left == 0) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      pick.push_back(pool[i]);
      std::vector<std::uint32_t> ants = hyps;
      ants.insert(ants.end(), pick.begin(), pick.end());
      std::sort(ants.begin(), ants.end());
      add_context(std::move(ants));
      extend(hyps, pool, i + 1, left - 1, pick);
      pick.pop_back();
    }
  }

  void add_context(std::vector<std::uint32_t> ants) {
    if (index_.count(ants)) return;
    index_.emplace(ants, contexts_.size());
    contexts_.push_back(contexts_.size());
    ants_.push_back(std::move(ants));
    d_.push_back(u_.empty_bits());
  }

  const Bits* with(std::size_t c, std::uint32_t x) const {
    const auto& a = ants_[c];
    if (std::binary_search(a.begin(), a.end(), x)) return &d_[c];
    std::vector<std::uint32_t> key = a;
    key.insert(std::lower_bound(key.begin(), key.end(), x), x);
    auto it = index_.find(key);
    return it == index_.end() ? nullptr : &d_[it->second];
  }

  // Rules whose premises live in other contexts. Returns true if d_[c] grew.
  bool discharge(std::size_t c, std::vector<std::uint32_t>& work) {
    Bits& d = d_[c];
    std::size_t before = work.size();
    auto add = [&](std::uint32_t x) {
      if (!test_bit(d, x)) {
        set_bit(d, x);
        work.push_back(x);
      }
    };
    // Inflation and Cut: any context whose antecedents are all derivable here.
    for (std::size_t t = 0; t < contexts_.size(); ++t) {
      if (t == c) continue;
      bool inside = true;
      for (std::uint32_t a : ants_[t]) {
        if (!test_bit(d, a)) {
          inside = false;
          break;
        }
      }
      ++steps_;
      if (inside) or_into(d, d_[t], work);
    }
    for (std::uint32_t p : u_.implications) {
      std::uint32_t l = u_.left[p], r = u_.right[p];
      if (rules_.contains(RuleTag::ImpI) && !test_bit(d, p)) {
        const Bits* e = with(c, l);
        if (e && test_bit(*e, r)) add(p);
      }
      if (!test_bit(d, p)) continue;
      // Strong substitution into a derived implication p.
      for (std::uint32_t q : u_.implications) {
        if (q == p || test_bit(d, q)) continue;
        ++steps_;
        if (rules_.contains(RuleTag::E1) && u_.right[q] == r && mutual(c, l, u_.left[q])) add(q);
        else if (rules_.contains(RuleTag::E2) && u_.left[q] == l && mutual(c, r, u_.right[q])) add(q);
      }
    }
    if (rules_.contains(RuleTag::DFExcludedMiddle)) {
      for (std::uint32_t p : u_.implications) {
        if (u_.right[p] != u_.bot) continue;
        const Bits* yes = with(c, u_.left[p]);
        const Bits* no = with(c, p);
        if (yes && no) both_into(d, *yes, *no, work);
      }
    }
    if (rules_.contains(RuleTag::OrE)) {
      for (std::uint32_t i = 0; i < u_.size(); ++i) {
        if (!u_.formulas[i].is_disj() || !test_bit(d, i)) continue;
        const Bits* a = with(c, u_.left[i]);
        const Bits* b = with(c, u_.right[i]);
        if (a && b) both_into(d, *a, *b, work);
      }
    }
    return work.size() > before;
  }

  bool mutual(std::size_t c, std::uint32_t x, std::uint32_t y) const {
    if (x == y) return true;
    const Bits* dx = with(c, x);
    const Bits* dy = with(c, y);
    return dx && dy && test_bit(*dx, y) && test_bit(*dy, x);
  }

  static void both_into(Bits& d, const Bits& a, const Bits& b, std::vector<std::uint32_t>& work) {
    Bits meet(d.size());
    for (std::size_t w = 0; w < d.size(); ++w) meet[w] = a[w] & b[w];
    or_into(d, meet, work);
  }

  const OracleUniverse& u_;
  RuleSet rules_;
  const SaturationConfig& cfg_;
  std::vector<std::size_t> contexts_;
  std::vector<std::vector<std::uint32_t>> ants_;
  std::map<std::vector<std::uint32_t>, std::size_t> index_;
  std::vector<Bits> d_;
  std::size_t steps_ = 0;
  bool partial_ = false;
};

void collect_row(const OracleUniverse& u, const std::vector<std::uint32_t>& ants, const Bits& d,
                 std::vector<Sequent>& out) {
  std::vector<Formula> a;
  for (std::uint32_t i : ants) a.push_back(u.formulas[i]);
  std::vector<std::uint32_t> bits;
  all_bits(d, bits);
  for (std::uint32_t b : bits) out.emplace_back(a, u.formulas[b]);
}

}  // namespace

SaturationResult saturate(const Sequent& goal, const SaturationConfig& config, bool collect) {
  RuleSet rules = config.logic.admitted();
  std::vector<Formula> roots = members(goal);
  roots.insert(roots.end(), config.universe.begin(), config.universe.end());
  if (rules.contains(RuleTag::DFExcludedMiddle)) {
    // Excluded middle splits on φ and φ → ⊥; make the negations available.
    std::vector<Formula> subs = subformulas(roots);
    for (Formula f : subs) {
      if (!f.is_imp() || f.right() != Formula::bot()) roots.push_back(Formula::imp(f, Formula::bot()));
    }
  }

  SaturationResult res;
  if (ClosureOracle::supports(config.logic)) {
    ClosureOracle o(config.logic, roots);
    const OracleUniverse& u = o.universe();
    Bits d = o.derivable_from(goal.antecedents());
    res.contexts = 2 + u.size();
    res.verdict = test_bit(d, u.index_of(goal.consequent())) ? OracleVerdict::Theorem : OracleVerdict::NotDerived;
    if (collect) {
      std::vector<std::uint32_t> hyps;
      for (Formula a : goal.antecedents()) hyps.push_back(u.index_of(a));
      collect_row(u, {}, o.empty_context_row(), res.derived);
      for (std::uint32_t i = 0; i < u.size(); ++i) collect_row(u, {i}, o.singleton_row(i), res.derived);
      if (hyps.size() > 1) collect_row(u, hyps, d, res.derived);
    }
    return res;
  }

  OracleUniverse u(roots);
  std::vector<std::uint32_t> hyps;
  for (Formula a : goal.antecedents()) hyps.push_back(u.index_of(a));
  std::sort(hyps.begin(), hyps.end());
  ContextSaturator sat(u, rules, config);
  sat.build(hyps);
  bool finished = sat.run();
  res.contexts = sat.contexts();
  res.steps = sat.steps();
  res.partial = sat.partial() || !finished;
  if (test_bit(sat.derived(0), u.index_of(goal.consequent()))) {
    res.verdict = OracleVerdict::Theorem;
  } else {
    res.verdict = res.partial ? OracleVerdict::Inconclusive : OracleVerdict::NotDerived;
  }
  if (collect) {
    for (std::size_t c = 0; c < sat.contexts(); ++c) collect_row(u, sat.antecedents(c), sat.derived(c), res.derived);
  }
  return res;
}

OracleVerdict oracle_decide(const Sequent& goal, const SaturationConfig& config) {
  return saturate(goal, config).verdict;
}

std::vector<Formula> variable_atoms(std::size_t vars) {
  static const char* kNames[] = {"x", "y", "z", "w"};
  std::vector<Formula> out;
  for (std::size_t i = 0; i < vars; ++i) {
    out.push_back(vars <= 4 ? Formula::var(kNames[i]) : Formula::var("x" + std::to_string(i + 1)));
  }
  return out;
}

std::vector<Formula> enumerate_formulas(std::size_t vars, std::size_t max_depth, Connectives c) {
  std::vector<Formula> out = variable_atoms(vars);
  out.push_back(Formula::top());
  if (c.bot) out.push_back(Formula::bot());
  std::vector<Kind> ops;
  if (c.conj) ops.push_back(Kind::And);
  if (c.imp) ops.push_back(Kind::Imp);
  if (c.disj) ops.push_back(Kind::Or);
  for (std::size_t d = 1; d <= max_depth; ++d) {
    const std::size_t prev = out.size();
    for (Kind k : ops) {
      for (std::size_t i = 0; i < prev; ++i) {
        for (std::size_t j = 0; j < prev; ++j) {
          if (std::max(out[i].depth(), out[j].depth()) + 1 != d) continue;
          out.push_back(Formula::make(k, out[i], out[j]));
        }
      }
    }
  }
  return out;
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  long double r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return static_cast<std::uint64_t>(r + 0.5L);
}

void antecedent_sets(std::size_t n, std::size_t size, std::size_t from, std::vector<std::uint32_t>& pick,
                     const std::function<void(std::span<const std::uint32_t>)>& visit) {
  if (pick.size() == size) {
    visit(pick);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    pick.push_back(static_cast<std::uint32_t>(i));
    antecedent_sets(n, size, i + 1, pick, visit);
    pick.pop_back();
  }
}

}  // namespace

void for_each_antecedent_set(std::size_t n, std::size_t max_antecedents,
                             const std::function<void(std::span<const std::uint32_t>)>& visit) {
  std::vector<std::uint32_t> pick;
  for (std::size_t k = 0; k <= max_antecedents && k <= n; ++k) antecedent_sets(n, k, 0, pick, visit);
}

std::uint64_t count_small_sequents(const SequentFamily& fam) {
  std::uint64_t n = enumerate_formulas(fam.vars, fam.max_depth, fam.connectives).size();
  std::uint64_t sets = 0;
  for (std::size_t k = 0; k <= fam.max_antecedents; ++k) sets += binomial(n, k);
  return sets * n;
}

void for_each_small_sequent(const SequentFamily& fam, std::uint64_t cap,
                            const std::function<void(const Sequent&)>& visit) {
  std::uint64_t total = count_small_sequents(fam);
  if (total > cap) throw EnumerationCapError(total);
  std::vector<Formula> fs = enumerate_formulas(fam.vars, fam.max_depth, fam.connectives);
  for_each_antecedent_set(fs.size(), fam.max_antecedents, [&](std::span<const std::uint32_t> set) {
    std::vector<Formula> ants;
    for (std::uint32_t i : set) ants.push_back(fs[i]);
    for (Formula q : fs) visit(Sequent(ants, q));
  });
}

std::vector<Sequent> enumerate_small_sequents(const SequentFamily& fam, std::uint64_t cap) {
  std::vector<Sequent> out;
  for_each_small_sequent(fam, cap, [&](const Sequent& s) { out.push_back(s); });
  return out;
}

}  // namespace primal

#include "primal/semantics.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "primal/syntax.hpp"

namespace primal {

bool Valuation::value_of(Formula var) const {
  auto it = assignment.find(std::string(var.name()));
  return it != assignment.end() && it->second;
}

bool evaluate_degenerate(const Valuation& v, Formula f) {
  switch (f.kind()) {
    case Kind::Top: return true;
    case Kind::Bot: return false;
    case Kind::Var: return v.value_of(f);
    case Kind::And: return evaluate_degenerate(v, f.left()) && evaluate_degenerate(v, f.right());
    case Kind::Imp: return evaluate_degenerate(v, f.right());
    case Kind::Or: throw DisjunctionError("degenerate valuation");
  }
  return false;
}

bool evaluate_valuation(const Valuation& v, const Sequent& s) {
  for (Formula a : s.antecedents()) {
    if (!evaluate_degenerate(v, a)) return true;
  }
  return evaluate_degenerate(v, s.consequent());
}

bool evaluate_classical(const Valuation& v, Formula f) {
  switch (f.kind()) {
    case Kind::Top: return true;
    case Kind::Bot: return false;
    case Kind::Var: return v.value_of(f);
    case Kind::And: return evaluate_classical(v, f.left()) && evaluate_classical(v, f.right());
    case Kind::Or: return evaluate_classical(v, f.left()) || evaluate_classical(v, f.right());
    case Kind::Imp: return !evaluate_classical(v, f.left()) || evaluate_classical(v, f.right());
  }
  return false;
}

namespace {

constexpr std::size_t kSoundnessVariableCap = 24;

Valuation row_valuation(std::span<const Formula> vars, std::uint64_t row) {
  Valuation v;
  for (std::size_t j = 0; j < vars.size(); ++j) v.assignment[std::string(vars[j].name())] = (row >> j) & 1u;
  return v;
}

// Column of variable j over the 64 rows of block b (row = 64·b + bit).
std::uint64_t variable_column(std::size_t j, std::uint64_t block) {
  static constexpr std::uint64_t kLow[6] = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
                                            0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
  if (j < 6) return kLow[j];
  return ((block >> (j - 6)) & 1u) ? ~0ull : 0ull;
}

// Evaluates every formula of `nodes` (children first) on one 64-row block.
class SlicedEvaluator {
 public:
  SlicedEvaluator(std::vector<Formula> nodes, std::vector<Formula> vars, bool degenerate)
      : nodes_(std::move(nodes)), vars_(std::move(vars)), degenerate_(degenerate) {
    for (std::uint32_t i = 0; i < nodes_.size(); ++i) pos_.emplace(nodes_[i], i);
    for (std::uint32_t j = 0; j < vars_.size(); ++j) var_pos_.emplace(vars_[j], j);
  }

  void evaluate(std::uint64_t block, std::vector<std::uint64_t>& col) const {
    col.resize(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      Formula f = nodes_[i];
      switch (f.kind()) {
        case Kind::Top: col[i] = ~0ull; break;
        case Kind::Bot: col[i] = 0; break;
        case Kind::Var: col[i] = variable_column(var_pos_.at(f), block); break;
        case Kind::And: col[i] = at(col, f.left()) & at(col, f.right()); break;
        case Kind::Or:
          if (degenerate_) throw DisjunctionError("degenerate valuation");
          col[i] = at(col, f.left()) | at(col, f.right());
          break;
        case Kind::Imp:
          col[i] = degenerate_ ? at(col, f.right()) : (~at(col, f.left()) | at(col, f.right()));
          break;
      }
    }
  }

  std::uint64_t sequent(const std::vector<std::uint64_t>& col, const Sequent& s) const {
    std::uint64_t all = ~0ull;
    for (Formula a : s.antecedents()) all &= at(col, a);
    return ~all | at(col, s.consequent());
  }

 private:
  std::uint64_t at(const std::vector<std::uint64_t>& col, Formula f) const { return col[pos_.at(f)]; }

  std::vector<Formula> nodes_;
  std::vector<Formula> vars_;
  bool degenerate_;
  std::unordered_map<Formula, std::uint32_t> pos_;
  std::unordered_map<Formula, std::uint32_t> var_pos_;
};

std::uint64_t valid_rows(std::size_t vars) { return vars >= 6 ? ~0ull : ((1ull << (1u << vars)) - 1); }

std::vector<Formula> proof_formulas(const Proof& proof) {
  std::vector<Formula> roots;
  for (const ProofStep& st : proof.steps) {
    auto m = members(st.conclusion);
    roots.insert(roots.end(), m.begin(), m.end());
  }
  return roots;
}

std::vector<Formula> only_variables(std::vector<Formula> vs) {
  std::erase_if(vs, [](Formula f) { return !f.is_var(); });
  return vs;
}

}  // namespace

std::optional<SoundnessFailure> soundness_check(const Proof& proof, bool parallel) {
  std::vector<Formula> roots = proof_formulas(proof);
  std::vector<Formula> vars = only_variables(variables(roots));
  if (vars.size() > kSoundnessVariableCap) throw VariableCapError(vars.size(), kSoundnessVariableCap);
  SlicedEvaluator ev(subformulas(roots), vars, true);
  const std::uint64_t blocks = vars.size() <= 6 ? 1 : (1ull << (vars.size() - 6));
  const std::uint64_t mask = valid_rows(vars.size());

  // Earliest failure by (step, row); the reduction keeps the minimum.
  std::uint64_t best_step = ~0ull, best_row = ~0ull;
  std::exception_ptr failure;
#pragma omp parallel if (parallel)
  {
    std::vector<std::uint64_t> col;
    std::uint64_t my_step = ~0ull, my_row = ~0ull;
#pragma omp for schedule(static)
    for (long long b = 0; b < static_cast<long long>(blocks); ++b) {
      try {
        ev.evaluate(b, col);
        for (std::size_t s = 0; s < proof.steps.size() && s <= my_step; ++s) {
          std::uint64_t bad = ~ev.sequent(col, proof.steps[s].conclusion) & mask;
          if (!bad) continue;
          std::uint64_t row = static_cast<std::uint64_t>(b) * 64 + __builtin_ctzll(bad);
          if (s < my_step || (s == my_step && row < my_row)) {
            my_step = s;
            my_row = row;
          }
          break;
        }
      } catch (...) {
#pragma omp critical(primal_soundness)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(primal_soundness)
    if (my_step < best_step || (my_step == best_step && my_row < best_row)) {
      best_step = my_step;
      best_row = my_row;
    }
  }
  if (failure) std::rethrow_exception(failure);
  if (best_step == ~0ull) return std::nullopt;
  return SoundnessFailure{best_step, row_valuation(vars, best_row)};
}

std::optional<SoundnessFailure> soundness_check_reference(const Proof& proof) {
  std::vector<Formula> vars = only_variables(variables(proof_formulas(proof)));
  if (vars.size() > kSoundnessVariableCap) throw VariableCapError(vars.size(), kSoundnessVariableCap);
  const std::uint64_t rows = 1ull << vars.size();
  for (std::size_t s = 0; s < proof.steps.size(); ++s) {
    for (std::uint64_t r = 0; r < rows; ++r) {
      Valuation v = row_valuation(vars, r);
      if (!evaluate_valuation(v, proof.steps[s].conclusion)) return SoundnessFailure{s, v};
    }
  }
  return std::nullopt;
}

bool decide_cl_truthtable(const Sequent& s, std::size_t variable_cap, bool parallel) {
  std::vector<Formula> roots = members(s);
  std::vector<Formula> vars = only_variables(variables(roots));
  if (vars.size() > variable_cap) throw VariableCapError(vars.size(), variable_cap);
  SlicedEvaluator ev(subformulas(roots), vars, false);
  const std::uint64_t blocks = vars.size() <= 6 ? 1 : (1ull << (vars.size() - 6));
  const std::uint64_t mask = valid_rows(vars.size());
  bool valid = true;
#pragma omp parallel if (parallel)
  {
    std::vector<std::uint64_t> col;
#pragma omp for schedule(static) reduction(&& : valid)
    for (long long b = 0; b < static_cast<long long>(blocks); ++b) {
      ev.evaluate(b, col);
      if (~ev.sequent(col, s) & mask) valid = false;
    }
  }
  return valid;
}

bool decide_cl_truthtable_reference(const Sequent& s, std::size_t variable_cap) {
  std::vector<Formula> vars = only_variables(variables(s));
  if (vars.size() > variable_cap) throw VariableCapError(vars.size(), variable_cap);
  for (std::uint64_t r = 0; r < (1ull << vars.size()); ++r) {
    Valuation v = row_valuation(vars, r);
    bool ants = true;
    for (Formula a : s.antecedents()) ants = ants && evaluate_classical(v, a);
    if (ants && !evaluate_classical(v, s.consequent())) return false;
  }
  return true;
}

// ---- KripkeModel --------------------------------------------------------

KripkeModel::KripkeModel(std::vector<std::vector<bool>> leq, std::vector<World> worlds,
                         std::vector<Formula> implications)
    : leq_(std::move(leq)), worlds_(std::move(worlds)), implications_(std::move(implications)) {
  const std::size_t n = worlds_.size();
  if (n == 0) throw ModelError("a model needs at least one world");
  if (leq_.size() != n) throw ModelError("order matrix does not match the number of worlds");
  for (const auto& row : leq_) {
    if (row.size() != n) throw ModelError("order matrix is not square");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq_[a][a]) throw ModelError("order is not reflexive");
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a]) throw ModelError("order is not antisymmetric");
      for (std::size_t c = 0; c < n; ++c) {
        if (leq_[a][b] && leq_[b][c] && !leq_[a][c]) throw ModelError("order is not transitive");
      }
    }
  }
  for (Formula f : implications_) {
    if (f.has_disjunction()) throw DisjunctionError("Kripke model");
    if (!f.is_imp()) throw ModelError("declared formula " + to_string(f) + " is not an implication");
    declared_.insert(f);
  }
  for (Formula f : implications_) {
    for (Formula s : subformulas(f)) {
      if (s.is_imp() && !declared_.count(s)) {
        throw ModelError("implication " + to_string(s) + " inside a declared formula is undeclared");
      }
    }
  }
  for (std::size_t w = 0; w < n; ++w) {
    for (Formula a : worlds_[w].true_atoms) {
      if (!a.is_atom()) throw ModelError("atom valuation mentions a compound formula");
    }
    for (Formula i : worlds_[w].true_implications) {
      if (!declared_.count(i)) throw ModelError("implication " + to_string(i) + " is not declared");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!leq_[a][b]) continue;
      for (Formula x : worlds_[a].true_atoms) {
        if (!worlds_[b].true_atoms.count(x)) throw ModelError("atom valuation is not monotone");
      }
      for (Formula x : worlds_[a].true_implications) {
        if (!worlds_[b].true_implications.count(x)) throw ModelError("implication valuation is not monotone");
      }
    }
  }
  for (std::size_t w = 0; w < n; ++w) {
    for (Formula f : implications_) {
      bool imp = holds(w, f), lhs = holds(w, f.left()), rhs = holds(w, f.right());
      if (rhs && !imp) {
        throw ModelError("world " + std::to_string(w) + ": " + to_string(f.right()) + " holds but " + to_string(f) +
                         " does not");
      }
      if (lhs && imp && !rhs) {
        throw ModelError("world " + std::to_string(w) + ": " + to_string(f) + " and its antecedent hold but " +
                         to_string(f.right()) + " does not");
      }
    }
  }
}

bool KripkeModel::holds(std::size_t w, Formula f) const {
  switch (f.kind()) {
    case Kind::Top: return true;
    case Kind::Var:
    case Kind::Bot: return worlds_[w].true_atoms.count(f) > 0;
    case Kind::And: return holds(w, f.left()) && holds(w, f.right());
    case Kind::Imp:
      if (!declared_.count(f)) throw ModelError("implication " + to_string(f) + " is outside the model's universe");
      return worlds_[w].true_implications.count(f) > 0;
    case Kind::Or: throw DisjunctionError("Kripke model");
  }
  return false;
}

bool model_check(const KripkeModel& m, std::size_t w, const Sequent& s) {
  for (std::size_t b = 0; b < m.size(); ++b) {
    if (!m.leq(w, b)) continue;
    bool ants = true;
    for (Formula a : s.antecedents()) ants = ants && m.holds(b, a);
    if (ants && !m.holds(b, s.consequent())) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<bool>> chain_order(std::size_t k) {
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) leq[a][b] = true;
  }
  return leq;
}

// Truth over a chain of k worlds is monotone, so each formula is described
// by the first world where it holds (k = nowhere).
class ChainSearch {
 public:
  ChainSearch(const Sequent& s, std::size_t k, std::uint64_t cap, std::uint64_t& visited)
      : s_(s), k_(k), cap_(cap), visited_(visited) {
    nodes_ = subformulas(s);
    for (std::uint32_t i = 0; i < nodes_.size(); ++i) pos_.emplace(nodes_[i], i);
    t_.assign(nodes_.size(), 0);
  }

  std::optional<Countermodel> run() {
    if (!dfs(0)) return std::nullopt;
    std::vector<KripkeModel::World> worlds(k_);
    std::vector<Formula> imps;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      Formula f = nodes_[i];
      if (f.is_imp()) imps.push_back(f);
      for (std::size_t w = t_[i]; w < k_; ++w) {
        if (f.is_var() || f.kind() == Kind::Bot) worlds[w].true_atoms.insert(f);
        if (f.is_imp()) worlds[w].true_implications.insert(f);
      }
    }
    return Countermodel{KripkeModel(chain_order(k_), std::move(worlds), std::move(imps)), 0};
  }

 private:
  std::size_t at(Formula f) const { return t_[pos_.at(f)]; }

  bool refuted() const {
    std::size_t ants = 0;
    for (Formula a : s_.antecedents()) ants = std::max(ants, at(a));
    return ants < k_ && ants < at(s_.consequent());
  }

  bool dfs(std::size_t i) {
    if (i == nodes_.size()) {
      if (++visited_ > cap_) throw SearchCapError("countermodel search exceeded its cap");
      return refuted();
    }
    Formula f = nodes_[i];
    switch (f.kind()) {
      case Kind::Top:
        t_[i] = 0;
        return dfs(i + 1);
      case Kind::And:
        t_[i] = std::max(at(f.left()), at(f.right()));
        return dfs(i + 1);
      case Kind::Var:
      case Kind::Bot:
        for (std::size_t t = 0; t <= k_; ++t) {
          t_[i] = t;
          if (dfs(i + 1)) return true;
        }
        return false;
      case Kind::Imp: {
        std::size_t lhs = at(f.left()), rhs = at(f.right());
        // Holds wherever the consequent does; wherever it holds together
        // with its antecedent, the consequent holds.
        for (std::size_t t = 0; t <= rhs; ++t) {
          std::size_t both = std::max(lhs, t);
          if (both < k_ && rhs > both) continue;
          t_[i] = t;
          if (dfs(i + 1)) return true;
        }
        return false;
      }
      case Kind::Or:
        throw DisjunctionError("countermodel search");
    }
    return false;
  }

  const Sequent& s_;
  std::size_t k_;
  std::uint64_t cap_;
  std::uint64_t& visited_;
  std::vector<Formula> nodes_;
  std::unordered_map<Formula, std::uint32_t> pos_;
  std::vector<std::size_t> t_;
};

}  // namespace

std::optional<Countermodel> countermodel_search(const Sequent& s, std::size_t max_worlds, std::uint64_t cap) {
  if (s.has_disjunction()) throw DisjunctionError("countermodel search");
  std::uint64_t visited = 0;
  for (std::size_t k = 1; k <= max_worlds; ++k) {
    ChainSearch search(s, k, cap, visited);
    if (auto found = search.run()) return found;
  }
  return std::nullopt;
}

std::unordered_set<Formula> least_world(std::span<const Formula> universe, std::span<const Formula> gamma) {
  std::vector<Formula> roots(universe.begin(), universe.end());
  roots.insert(roots.end(), gamma.begin(), gamma.end());
  std::vector<Formula> nodes = subformulas(roots);
  std::unordered_set<Formula> inside(nodes.begin(), nodes.end());
  std::unordered_set<Formula> truth(gamma.begin(), gamma.end());
  truth.insert(Formula::top());
  bool changed = true;
  auto make_true = [&](Formula f) { changed |= truth.insert(f).second; };
  while (changed) {
    changed = false;
    for (Formula f : nodes) {
      if (f.is_conj()) {
        if (truth.count(f)) {
          make_true(f.left());
          make_true(f.right());
        } else if (truth.count(f.left()) && truth.count(f.right())) {
          make_true(f);
        }
      } else if (f.is_imp()) {
        if (truth.count(f.right())) make_true(f);
        if (truth.count(f) && truth.count(f.left())) make_true(f.right());
      } else if (f.is_disj()) {
        throw DisjunctionError("least world");
      }
    }
  }
  std::erase_if(truth, [&](Formula f) { return !inside.count(f); });
  return truth;
}

namespace {

std::string joined(std::vector<Formula> fs) {
  fs = sorted_canonically(fs);
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += "; ";
    out += to_string(fs[i]);
  }
  return out;
}

std::string order_pairs(const KripkeModel& m) {
  std::string out;
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = 0; b < m.size(); ++b) {
      if (a == b || !m.leq(a, b)) continue;
      if (!out.empty()) out += ", ";
      out += "w" + std::to_string(a) + " <= w" + std::to_string(b);
    }
  }
  return out;
}

}  // namespace

std::string format_countermodel(const Countermodel& c) {
  const KripkeModel& m = c.model;
  std::ostringstream out;
  out << "worlds:";
  for (std::size_t w = 0; w < m.size(); ++w) out << " w" << w;
  out << "\norder: " << (m.size() > 1 ? order_pairs(m) : std::string("(none)")) << '\n';
  for (std::size_t w = 0; w < m.size(); ++w) {
    const auto& wd = m.world(w);
    out << "w" << w << " atoms: {" << joined({wd.true_atoms.begin(), wd.true_atoms.end()}) << "}\n";
    out << "w" << w << " implications: {" << joined({wd.true_implications.begin(), wd.true_implications.end()})
        << "}\n";
  }
  out << "refuted at: w" << c.world << '\n';
  return out.str();
}

std::string format_countermodel_kv(const Countermodel& c) {
  const KripkeModel& m = c.model;
  std::ostringstream out;
  out << "worlds=" << m.size() << '\n';
  out << "order=" << order_pairs(m) << '\n';
  for (std::size_t w = 0; w < m.size(); ++w) {
    const auto& wd = m.world(w);
    out << "world." << w << ".atoms=" << joined({wd.true_atoms.begin(), wd.true_atoms.end()}) << '\n';
    out << "world." << w << ".implications="
        << joined({wd.true_implications.begin(), wd.true_implications.end()}) << '\n';
  }
  out << "refuted_world=" << c.world << '\n';
  return out.str();
}

// ---- intuitionistic models ---------------------------------------------

bool IntuitionisticModel::holds(std::size_t w, Formula f) const {
  switch (f.kind()) {
    case Kind::Top: return true;
    case Kind::Bot: return !bot_is_falsum && true_atoms[w].count(f) > 0;
    case Kind::Var: return true_atoms[w].count(f) > 0;
    case Kind::And: return holds(w, f.left()) && holds(w, f.right());
    case Kind::Or: return holds(w, f.left()) || holds(w, f.right());
    case Kind::Imp:
      for (std::size_t v = 0; v < leq.size(); ++v) {
        if (leq[w][v] && holds(v, f.left()) && !holds(v, f.right())) return false;
      }
      return true;
  }
  return false;
}

bool model_check(const IntuitionisticModel& m, std::size_t w, const Sequent& s) {
  for (std::size_t b = 0; b < m.leq.size(); ++b) {
    if (!m.leq[w][b]) continue;
    bool ants = true;
    for (Formula a : s.antecedents()) ants = ants && m.holds(b, a);
    if (ants && !m.holds(b, s.consequent())) return false;
  }
  return true;
}

namespace {

// Rooted posets on 0..n-1 where i ≤ j implies i ≤ j numerically.
std::vector<std::vector<std::vector<bool>>> rooted_posets(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> free_pairs;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) free_pairs.emplace_back(i, j);
  }
  std::vector<std::vector<std::vector<bool>>> out;
  for (std::uint64_t mask = 0; mask < (1ull << free_pairs.size()); ++mask) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      leq[i][i] = true;
      leq[0][i] = true;
    }
    for (std::size_t p = 0; p < free_pairs.size(); ++p) {
      if ((mask >> p) & 1u) leq[free_pairs[p].first][free_pairs[p].second] = true;
    }
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a) {
      for (std::size_t b = 0; b < n && transitive; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (leq[a][b] && leq[b][c] && !leq[a][c]) {
            transitive = false;
            break;
          }
        }
      }
    }
    if (transitive) out.push_back(std::move(leq));
  }
  return out;
}

std::vector<std::uint32_t> up_sets(const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a) {
      if (!((m >> a) & 1u)) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (leq[a][b] && !((m >> b) & 1u)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) out.push_back(m);
  }
  return out;
}

}  // namespace

std::optional<IntuitionisticModel> intuitionistic_countermodel(const Sequent& s, bool bot_is_falsum,
                                                               std::size_t max_worlds, std::uint64_t cap) {
  if (max_worlds > 4) throw SearchCapError("intuitionistic countermodel search supports at most 4 worlds");
  std::vector<Formula> atoms;
  for (Formula v : variables(s)) {
    if (v.is_var() || (v.kind() == Kind::Bot && !bot_is_falsum)) atoms.push_back(v);
  }
  if (!bot_is_falsum) {
    for (Formula f : subformulas(s)) {
      if (f.kind() == Kind::Bot && std::find(atoms.begin(), atoms.end(), f) == atoms.end()) atoms.push_back(f);
    }
  }
  std::uint64_t visited = 0;
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    for (const auto& leq : rooted_posets(n)) {
      std::vector<std::uint32_t> ups = up_sets(leq);
      IntuitionisticModel m{leq, std::vector<std::unordered_set<Formula>>(n), bot_is_falsum};
      std::vector<std::size_t> choice(atoms.size(), 0);
      std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
        if (i == atoms.size()) {
          if (++visited > cap) throw SearchCapError("intuitionistic countermodel search exceeded its cap");
          for (std::size_t w = 0; w < n; ++w) m.true_atoms[w].clear();
          for (std::size_t a = 0; a < atoms.size(); ++a) {
            for (std::size_t w = 0; w < n; ++w) {
              if ((ups[choice[a]] >> w) & 1u) m.true_atoms[w].insert(atoms[a]);
            }
          }
          return !model_check(m, 0, s);
        }
        for (std::size_t c = 0; c < ups.size(); ++c) {
          choice[i] = c;
          if (dfs(i + 1)) return true;
        }
        return false;
      };
      if (dfs(0)) return m;
    }
  }
  return std::nullopt;
}

}  // namespace primal

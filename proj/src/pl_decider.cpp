#include "primal/pl_decider.hpp"

#include <exception>
#include <stdexcept>

#include "primal/syntax.hpp"

namespace primal {

std::string format_event(const ClosureEvent& e) {
  std::string out = "derived " + to_string(e.formula) + " by " + std::string(rule_name(e.rule)) + " from ";
  for (std::size_t i = 0; i < e.from.size(); ++i) {
    if (i) out += ", ";
    out += to_string(e.from[i]);
  }
  return out;
}

namespace {

void build_csr(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
               std::vector<std::uint32_t>& off, std::vector<std::uint32_t>& data) {
  off.assign(n + 1, 0);
  for (auto [child, parent] : edges) ++off[child + 1];
  for (std::size_t i = 0; i < n; ++i) off[i + 1] += off[i];
  data.resize(edges.size());
  std::vector<std::uint32_t> fill(off.begin(), off.end() - 1);
  for (auto [child, parent] : edges) data[fill[child]++] = parent;
}

}  // namespace

PlUniverse::PlUniverse(std::span<const Formula> roots) {
  nodes_ = subformulas(roots);
  const std::size_t n = nodes_.size();
  index_.reserve(n * 2);
  kind_.resize(n);
  left_.assign(n, npos);
  right_.assign(n, npos);
  for (std::uint32_t i = 0; i < n; ++i) index_.emplace(nodes_[i], i);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> conj, impl, impr;
  for (std::uint32_t i = 0; i < n; ++i) {
    Formula f = nodes_[i];
    kind_[i] = f.kind();
    switch (f.kind()) {
      case Kind::Or:
        throw DisjunctionError("PL decision");
      case Kind::Top:
        top_ = i;
        break;
      case Kind::And:
      case Kind::Imp: {
        std::uint32_t l = index_.at(f.left()), r = index_.at(f.right());
        left_[i] = l;
        right_[i] = r;
        if (f.kind() == Kind::And) {
          conj.emplace_back(l, i);
          if (r != l) conj.emplace_back(r, i);
        } else {
          impl.emplace_back(l, i);
          impr.emplace_back(r, i);
        }
        break;
      }
      default:
        break;
    }
  }
  build_csr(n, conj, and_off_, and_par_);
  build_csr(n, impl, impl_off_, impl_par_);
  build_csr(n, impr, impr_off_, impr_par_);
}

std::uint32_t PlUniverse::index_of(Formula f) const {
  auto it = index_.find(f);
  return it == index_.end() ? npos : it->second;
}

PlClosure::PlClosure(const PlUniverse& u)
    : u_(u), derived_(u.size(), 0), rule_(u.size(), RuleTag::X2X), prem_a_(u.size()), prem_b_(u.size()) {}

void PlClosure::derive(std::uint32_t i, RuleTag why, std::uint32_t a, std::uint32_t b,
                       std::vector<ClosureEvent>* trace) {
  if (derived_[i]) return;
  derived_[i] = 1;
  rule_[i] = why;
  prem_a_[i] = a;
  prem_b_[i] = b;
  queue_.push_back(i);
  if (trace) {
    ClosureEvent e{u_.nodes_[i], why, {}};
    if (why == RuleTag::X2X) e.from.push_back(u_.nodes_[i]);
    if (a != PlUniverse::npos) e.from.push_back(u_.nodes_[a]);
    if (b != PlUniverse::npos) e.from.push_back(u_.nodes_[b]);
    trace->push_back(std::move(e));
  }
}

void PlClosure::run(std::span<const Formula> hypotheses, std::vector<ClosureEvent>* trace) {
  std::vector<std::uint32_t> idx;
  idx.reserve(hypotheses.size());
  for (Formula h : hypotheses) {
    std::uint32_t i = u_.index_of(h);
    if (i == PlUniverse::npos) throw std::out_of_range("PlClosure: hypothesis outside the universe");
    idx.push_back(i);
  }
  run_indices(idx, trace);
}

void PlClosure::run_indices(std::span<const std::uint32_t> hypotheses, std::vector<ClosureEvent>* trace) {
  rollback(Checkpoint{});
  extend_indices(hypotheses, trace);
}

void PlClosure::extend_indices(std::span<const std::uint32_t> hypotheses, std::vector<ClosureEvent>* trace) {
  constexpr std::uint32_t none = PlUniverse::npos;
  std::size_t head = queue_.size();
  for (std::uint32_t h : hypotheses) {
    hypotheses_.push_back(u_.nodes_[h]);
    derive(h, RuleTag::X2X, none, none, trace);
  }
  if (u_.top_ != none) derive(u_.top_, RuleTag::Top, none, none, trace);

  for (; head < queue_.size(); ++head) {
    const std::uint32_t i = queue_[head];
    const std::uint32_t l = u_.left_[i], r = u_.right_[i];
    if (u_.kind_[i] == Kind::And) {
      derive(l, RuleTag::AndEl, i, none, trace);
      derive(r, RuleTag::AndEr, i, none, trace);
    } else if (u_.kind_[i] == Kind::Imp) {
      if (derived_[l]) derive(r, RuleTag::ImpE, l, i, trace);
    }
    for (std::uint32_t p : u_.parents(u_.and_off_, u_.and_par_, i)) {
      if (derived_[u_.left_[p]] && derived_[u_.right_[p]]) derive(p, RuleTag::AndI, u_.left_[p], u_.right_[p], trace);
    }
    for (std::uint32_t p : u_.parents(u_.impl_off_, u_.impl_par_, i)) {
      if (derived_[p]) derive(u_.right_[p], RuleTag::ImpE, i, p, trace);
    }
    for (std::uint32_t p : u_.parents(u_.impr_off_, u_.impr_par_, i)) {
      derive(p, RuleTag::ImpIW, i, none, trace);
    }
  }
}

void PlClosure::rollback(Checkpoint c) {
  for (std::size_t k = c.derived; k < queue_.size(); ++k) derived_[queue_[k]] = 0;
  queue_.resize(c.derived);
  hypotheses_.resize(c.hypotheses);
}

bool PlClosure::derived(Formula f) const {
  std::uint32_t i = u_.index_of(f);
  return i != PlUniverse::npos && derived_[i];
}

std::optional<Proof> PlClosure::extract_proof(Formula f) const {
  std::uint32_t goal = u_.index_of(f);
  if (goal == PlUniverse::npos || !derived_[goal]) return std::nullopt;

  std::vector<Formula> gamma = canonical_set(hypotheses_);
  ProofBuilder b;
  std::unordered_map<std::uint32_t, std::size_t> step_of;
  std::vector<std::pair<std::uint32_t, bool>> stack{{goal, false}};
  constexpr std::uint32_t none = PlUniverse::npos;

  while (!stack.empty()) {
    auto [i, expanded] = stack.back();
    stack.pop_back();
    if (step_of.count(i)) continue;
    std::uint32_t a = prem_a_[i], c = prem_b_[i];
    if (!expanded) {
      stack.emplace_back(i, true);
      if (a != none && !step_of.count(a)) stack.emplace_back(a, false);
      if (c != none && !step_of.count(c)) stack.emplace_back(c, false);
      continue;
    }
    Formula phi = u_.nodes_[i];
    std::size_t s = 0;
    switch (rule_[i]) {
      case RuleTag::X2X:
        s = b.inflate(b.add(Sequent({phi}, phi), RuleTag::X2X), gamma);
        break;
      case RuleTag::Top:
        s = b.inflate(b.add(Sequent({}, phi), RuleTag::Top), gamma);
        break;
      case RuleTag::AndEl:
      case RuleTag::AndEr:
      case RuleTag::ImpIW:
        s = b.add(Sequent(gamma, phi), rule_[i], {step_of.at(a)});
        break;
      default:
        s = b.add(Sequent(gamma, phi), rule_[i], {step_of.at(a), step_of.at(c)});
        break;
    }
    step_of.emplace(i, s);
  }
  return std::move(b).finish(step_of.at(goal));
}

std::vector<bool> decide_pl_multi(std::span<const Formula> hypotheses, std::span<const Formula> queries) {
  std::vector<Formula> roots(hypotheses.begin(), hypotheses.end());
  roots.insert(roots.end(), queries.begin(), queries.end());
  PlUniverse u(roots);
  PlClosure c(u);
  c.run(hypotheses);
  std::vector<bool> out;
  out.reserve(queries.size());
  for (Formula q : queries) out.push_back(c.derived(q));
  return out;
}

bool decide_pl(const Sequent& s) {
  Formula q = s.consequent();
  return decide_pl_multi(s.antecedents(), std::span<const Formula>(&q, 1))[0];
}

namespace {

struct SingleRun {
  PlUniverse universe;
  PlClosure closure;
  explicit SingleRun(const Sequent& s) : universe(members(s)), closure(universe) {}
};

}  // namespace

std::vector<ClosureEvent> trace_pl(const Sequent& s) {
  SingleRun r(s);
  std::vector<ClosureEvent> events;
  r.closure.run(s.antecedents(), &events);
  return events;
}

std::optional<Proof> extract_pl_proof(const Sequent& s) {
  SingleRun r(s);
  r.closure.run(s.antecedents());
  return r.closure.extract_proof(s.consequent());
}

std::vector<std::uint8_t> decide_pl_batch(std::span<const Sequent> sequents, bool parallel) {
  std::vector<std::uint8_t> out(sequents.size());
  const long n = static_cast<long>(sequents.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = decide_pl(sequents[i]) ? 1 : 0;
    } catch (...) {
#pragma omp critical(primal_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace primal

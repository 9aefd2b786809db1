#include "primal/pel0_decider.hpp"

#include <exception>
#include <queue>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "primal/pl_decider.hpp"
#include "primal/syntax.hpp"

namespace primal {

bool pel0_equivalent(Formula phi, Formula psi) {
  if (phi == psi) return true;
  Formula pair[2] = {phi, psi};
  PlUniverse u(pair);
  PlClosure c(u);
  c.run(std::span<const Formula>(&phi, 1));
  if (!c.derived(psi)) return false;
  c.run(std::span<const Formula>(&psi, 1));
  return c.derived(phi);
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t name_hash(std::string_view s, std::uint64_t salt) {
  std::uint64_t h = 0xcbf29ce484222325ull ^ salt;
  for (unsigned char ch : s) h = (h ^ ch) * 0x100000001b3ull;
  return mix64(h);
}

// 64 classical rows and 64 rows of the degenerate valuation (φ→ψ read as ψ).
// ⊥ gets its own random column: PEL0 has no rule for it.
struct Fingerprint {
  std::uint64_t classical = 0;
  std::uint64_t degenerate = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

struct FingerprintHash {
  std::size_t operator()(const Fingerprint& f) const { return mix64(f.classical ^ mix64(f.degenerate)); }
};

class Fingerprinter {
 public:
  Fingerprint of(Formula f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    Fingerprint out;
    switch (f.kind()) {
      case Kind::Top:
        out = {~0ull, ~0ull};
        break;
      case Kind::Bot:
        out = {name_hash("bot", 1), name_hash("bot", 2)};
        break;
      case Kind::Var:
        out = {name_hash(f.name(), 1), name_hash(f.name(), 2)};
        break;
      default: {
        Fingerprint a = of(f.left()), b = of(f.right());
        if (f.kind() == Kind::And) out = {a.classical & b.classical, a.degenerate & b.degenerate};
        if (f.kind() == Kind::Or) out = {a.classical | b.classical, a.degenerate | b.degenerate};
        if (f.kind() == Kind::Imp) out = {~a.classical | b.classical, b.degenerate};
      }
    }
    memo_.emplace(f.id(), out);
    return out;
  }

 private:
  std::unordered_map<std::uint32_t, Fingerprint> memo_;
};

struct Ready {
  std::uint64_t length;
  std::string text;
  std::uint32_t id;
  std::uint32_t node;
};

struct ReadyAfter {
  bool operator()(const Ready& a, const Ready& b) const {
    if (a.length != b.length) return a.length > b.length;
    if (a.text != b.text) return a.text > b.text;
    return a.id > b.id;
  }
};

class Normalizer {
 public:
  Normalizer(const NormalizeOptions& opt, NormalizeStats* stats) : opt_(opt), stats_(stats ? stats : &local_) {}

  std::vector<Formula> run(std::span<const Formula> inputs) {
    for (Formula f : inputs) {
      if (f.has_disjunction()) throw DisjunctionError("PEL0 normalization");
    }
    nodes_ = subformulas(inputs);
    const std::size_t n = nodes_.size();
    std::unordered_map<Formula, std::uint32_t> index;
    index.reserve(n * 2);
    for (std::uint32_t i = 0; i < n; ++i) index.emplace(nodes_[i], i);

    rep_.assign(n, Formula());
    std::vector<std::uint8_t> pending(n, 0);
    std::vector<std::vector<std::uint32_t>> parents(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      Formula f = nodes_[i];
      if (f.is_atom()) continue;
      std::uint32_t l = index.at(f.left()), r = index.at(f.right());
      parents[l].push_back(i);
      pending[i] = 1;
      if (r != l) {
        parents[r].push_back(i);
        pending[i] = 2;
      }
    }

    std::priority_queue<Ready, std::vector<Ready>, ReadyAfter> ready;
    auto push = [&](std::uint32_t i) {
      Formula f = nodes_[i];
      Formula cur = f.is_atom() ? f : Formula::make(f.kind(), rep_[index.at(f.left())], rep_[index.at(f.right())]);
      rep_[i] = cur;
      ready.push(Ready{cur.length(), to_string(cur), cur.id(), i});
    };
    for (std::uint32_t i = 0; i < n; ++i) {
      if (pending[i] == 0) push(i);
    }

    while (!ready.empty()) {
      Ready top = ready.top();
      ready.pop();
      if (opt_.deadline && (stats_->steps & 63) == 0 && std::chrono::steady_clock::now() > *opt_.deadline) {
        throw NormalizeTimeout();
      }
      ++stats_->steps;
      rep_[top.node] = settle(rep_[top.node]);
      for (std::uint32_t p : parents[top.node]) {
        if (--pending[p] == 0) push(p);
      }
    }

    std::vector<Formula> out;
    out.reserve(inputs.size());
    for (Formula f : inputs) {
      Formula r = rep_[index.at(f)];
      if (opt_.check_invariants && r.length() > f.length()) {
        throw std::logic_error("normalization: output longer than input");
      }
      out.push_back(r);
    }
    return out;
  }

 private:
  // Marks `cur` or returns the marked formula equivalent to it.
  Formula settle(Formula cur) {
    if (marked_.count(cur)) return cur;
    Formula found;
    if (opt_.use_fingerprints) {
      auto it = buckets_.find(prints_.of(cur));
      if (it != buckets_.end()) found = first_equivalent(cur, it->second);
    } else {
      found = first_equivalent(cur, order_);
    }
    if (found.valid()) {
      if (opt_.check_invariants && found.length() > cur.length()) {
        throw std::logic_error("normalization: replacement is longer than the node it replaces");
      }
      ++stats_->replacements;
      return found;
    }
    if (opt_.check_invariants) verify_new_mark(cur);
    marked_.insert(cur);
    order_.push_back(cur);
    if (opt_.use_fingerprints) buckets_[prints_.of(cur)].push_back(cur);
    return cur;
  }

  Formula first_equivalent(Formula cur, const std::vector<Formula>& candidates) {
    for (Formula m : candidates) {
      ++stats_->equivalence_checks;
      if (pel0_equivalent(cur, m)) return m;
    }
    return Formula();
  }

  void verify_new_mark(Formula cur) {
    if (!cur.is_atom() && (!marked_.count(cur.left()) || !marked_.count(cur.right()))) {
      throw std::logic_error("normalization: marking a node whose subformulas are unmarked");
    }
    for (Formula m : order_) {
      if (pel0_equivalent(cur, m)) throw std::logic_error("normalization: marked set is not free of equivalents");
    }
  }

  const NormalizeOptions& opt_;
  NormalizeStats local_;
  NormalizeStats* stats_;
  std::vector<Formula> nodes_;
  std::vector<Formula> rep_;
  std::unordered_set<Formula> marked_;
  std::vector<Formula> order_;
  std::unordered_map<Fingerprint, std::vector<Formula>, FingerprintHash> buckets_;
  Fingerprinter prints_;
};

}  // namespace

std::vector<Formula> normalize_free_of_equivalents(std::span<const Formula> formulas, const NormalizeOptions& options,
                                                   NormalizeStats* stats) {
  Normalizer n(options, stats);
  return n.run(formulas);
}

std::vector<Formula> normalize_reference(std::span<const Formula> formulas) {
  NormalizeOptions opt;
  opt.use_fingerprints = false;
  return normalize_free_of_equivalents(formulas, opt);
}

std::vector<bool> decide_pel0_multi(std::span<const Formula> hypotheses, std::span<const Formula> queries) {
  std::vector<Formula> all(hypotheses.begin(), hypotheses.end());
  all.insert(all.end(), queries.begin(), queries.end());
  std::vector<Formula> norm = normalize_free_of_equivalents(all);
  std::span<const Formula> h(norm.data(), hypotheses.size());
  std::span<const Formula> q(norm.data() + hypotheses.size(), queries.size());
  return decide_pl_multi(h, q);
}

bool decide_pel0(const Sequent& s) {
  Formula q = s.consequent();
  return decide_pel0_multi(s.antecedents(), std::span<const Formula>(&q, 1))[0];
}

Sequent normalize_sequent(const Sequent& s) {
  std::vector<Formula> all = members(s);
  std::vector<Formula> norm = normalize_free_of_equivalents(all);
  Formula q = norm.back();
  norm.pop_back();
  return Sequent(std::move(norm), q);
}

std::vector<std::uint8_t> decide_pel0_batch(std::span<const Sequent> sequents, bool parallel) {
  std::vector<std::uint8_t> out(sequents.size());
  const long n = static_cast<long>(sequents.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = decide_pel0(sequents[i]) ? 1 : 0;
    } catch (...) {
#pragma omp critical(primal_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace primal

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "primal/bench.hpp"
#include "primal/oracle.hpp"
#include "primal/pel0_decider.hpp"
#include "primal/pl_decider.hpp"
#include "primal/proof_io.hpp"
#include "primal/reductions.hpp"
#include "primal/semantics.hpp"
#include "primal/syntax.hpp"

namespace primal {

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

// Usage errors raised after CLI11 has finished parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<std::uint64_t> hard_cap() {
  const char* v = std::getenv("PRIMAL_DEDUCT_HARD_CAP");
  if (!v || !*v) return std::nullopt;
  std::uint64_t n = 0;
  std::string_view s(v);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || p != s.data() + s.size() || n == 0) {
    throw UsageError("PRIMAL_DEDUCT_HARD_CAP must be a positive integer");
  }
  return n;
}

std::uint64_t capped(std::uint64_t dflt) {
  auto cap = hard_cap();
  return cap ? std::min(dflt, *cap) : dflt;
}

LogicId logic_arg(const std::string& text) {
  auto l = parse_logic(text);
  if (!l) throw UsageError("unknown logic '" + text + "'");
  return *l;
}

// ---- decide ---------------------------------------------------------------

enum class DecideEngine { Pl, Pel0, Cl };

DecideEngine decide_engine(LogicId l) {
  if (l.name == LogicName::PL && !l.with_disjunction) return DecideEngine::Pl;
  if (l.name == LogicName::PEL0 && !l.with_disjunction) return DecideEngine::Pel0;
  if (l.name == LogicName::CL) return DecideEngine::Cl;
  throw UsageError("decide supports pl, pel0, cl and cl-or; use the oracle subcommand for " + l.to_string());
}

void check_disjunction(DecideEngine e, LogicId l, const Sequent& s) {
  if (e == DecideEngine::Cl && !l.with_disjunction && s.has_disjunction()) {
    throw DisjunctionError("CL (use cl-or)");
  }
}

struct DecideFlags {
  std::string logic;
  std::string sequent;
  bool trace = false;
  bool countermodel = false;
  bool emit_normalized = false;
  bool stdin_batch = false;
};

int decide_one(const DecideFlags& f, std::ostream& out) {
  LogicId logic = logic_arg(f.logic);
  DecideEngine engine = decide_engine(logic);
  Sequent s = parse_sequent(f.sequent);
  check_disjunction(engine, logic, s);

  bool theorem = false;
  switch (engine) {
    case DecideEngine::Pl: {
      theorem = decide_pl(s);
      if (f.trace) {
        for (const ClosureEvent& e : trace_pl(s)) out << format_event(e) << "\n";
      }
      break;
    }
    case DecideEngine::Pel0: {
      Sequent norm = normalize_sequent(s);
      theorem = decide_pl(norm);
      if (f.emit_normalized) out << "normalized: " << to_string(norm) << "\n";
      if (f.trace) {
        for (const ClosureEvent& e : trace_pl(norm)) out << format_event(e) << "\n";
      }
      break;
    }
    case DecideEngine::Cl:
      theorem = decide_cl_truthtable(s);
      break;
  }
  out << (theorem ? "THEOREM" : "NON-THEOREM") << "\n";

  if (f.countermodel && !theorem) {
    if (engine != DecideEngine::Pl) {
      out << "countermodel: only available for pl\n";
    } else if (auto cm = countermodel_search(s, 2, capped(50'000'000))) {
      out << format_countermodel(*cm);
    } else {
      out << "countermodel: none found\n";
    }
  }
  return theorem ? kYes : kNo;
}

bool skip_line(std::string_view line) {
  std::size_t i = line.find_first_not_of(" \t\r");
  return i == std::string_view::npos || line[i] == '#';
}

int decide_batch(const DecideFlags& f, std::istream& in, std::ostream& out) {
  LogicId logic = logic_arg(f.logic);
  DecideEngine engine = decide_engine(logic);

  std::vector<std::string> lines;
  std::vector<std::optional<Sequent>> parsed;
  std::vector<std::string> errors;
  std::string line;
  while (std::getline(in, line)) {
    if (skip_line(line)) continue;
    lines.push_back(line);
    try {
      Sequent s = parse_sequent(line);
      check_disjunction(engine, logic, s);
      if (engine != DecideEngine::Cl && s.has_disjunction()) throw DisjunctionError(logic.to_string());
      parsed.emplace_back(std::move(s));
      errors.emplace_back();
    } catch (const std::exception& e) {
      parsed.emplace_back();
      errors.emplace_back(e.what());
    }
  }

  std::vector<Sequent> ok;
  for (const auto& p : parsed) {
    if (p) ok.push_back(*p);
  }
  std::vector<std::uint8_t> verdicts;
  switch (engine) {
    case DecideEngine::Pl: verdicts = decide_pl_batch(ok); break;
    case DecideEngine::Pel0: verdicts = decide_pel0_batch(ok); break;
    case DecideEngine::Cl:
      for (const Sequent& s : ok) verdicts.push_back(decide_cl_truthtable(s) ? 1 : 0);
      break;
  }

  int status = kYes;
  std::size_t k = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!parsed[i]) {
      out << "ERROR\t" << errors[i] << "\n";
      status = kError;
      continue;
    }
    bool t = verdicts[k++] != 0;
    out << (t ? "THEOREM" : "NON-THEOREM") << "\t" << to_string(*parsed[i]) << "\n";
    if (!t && status == kYes) status = kNo;
  }
  return status;
}

// ---- check-proof ----------------------------------------------------------

int check_proof_file(const std::string& logic_text, const std::string& path, std::ostream& out) {
  LogicId logic = logic_arg(logic_text);
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  Proof proof = read_proof(file);
  if (proof.empty()) throw ProofFormatError(0, "proof has no steps");
  if (auto v = check_proof(proof, logic)) {
    out << "INVALID " << v->describe() << "\n";
    return kNo;
  }
  out << "VALID " << to_string(proof.conclusion()) << "\n";
  return kYes;
}

// ---- countermodel ---------------------------------------------------------

std::string format_intuitionistic(const IntuitionisticModel& m) {
  std::ostringstream out;
  out << "worlds: " << m.leq.size() << "\n";
  for (std::size_t w = 0; w < m.leq.size(); ++w) {
    out << "world " << w << " above:";
    for (std::size_t v = 0; v < m.leq.size(); ++v) {
      if (v != w && m.leq[v][w]) out << " " << v;
    }
    std::vector<Formula> atoms(m.true_atoms[w].begin(), m.true_atoms[w].end());
    atoms = sorted_canonically(atoms);
    out << " ; true:";
    for (Formula a : atoms) out << " " << to_string(a);
    out << "\n";
  }
  return out.str();
}

int countermodel_cmd(const std::string& logic_text, const std::string& text, std::size_t max_worlds,
                     const std::string& format, std::ostream& out) {
  LogicId logic = logic_arg(logic_text);
  Sequent s = parse_sequent(text);
  if (logic.with_disjunction) throw UsageError("countermodel supports pl, ml and il");
  if (logic.name == LogicName::PL) {
    auto cm = countermodel_search(s, max_worlds, capped(50'000'000));
    if (!cm) {
      out << "NO COUNTERMODEL within " << max_worlds << " worlds\n";
      return kNo;
    }
    out << (format == "kv" ? format_countermodel_kv(*cm) : format_countermodel(*cm));
    return kYes;
  }
  if (logic.name == LogicName::ML || logic.name == LogicName::IL) {
    if (max_worlds > 4) throw UsageError("ml/il model search is limited to 4 worlds");
    auto m = intuitionistic_countermodel(s, logic.name == LogicName::IL, max_worlds, capped(20'000'000));
    if (!m) {
      out << "NO COUNTERMODEL within " << max_worlds << " worlds\n";
      return kNo;
    }
    out << format_intuitionistic(*m);
    return kYes;
  }
  throw UsageError("countermodel supports pl, ml and il");
}

// ---- oracle ---------------------------------------------------------------

int oracle_cmd(const std::string& logic_text, const std::string& text, std::size_t ext, std::size_t contexts,
               const std::vector<std::string>& extra, std::ostream& out) {
  SaturationConfig cfg{logic_arg(logic_text), {}, ext, contexts, 50'000'000};
  cfg.step_bound = capped(cfg.step_bound);
  cfg.max_contexts = capped(cfg.max_contexts);
  for (const std::string& e : extra) cfg.universe.push_back(parse_formula(e));
  Sequent s = parse_sequent(text);
  SaturationResult r = saturate(s, cfg);
  out << verdict_name(r.verdict) << "\n";
  out << "contexts=" << r.contexts << " steps=" << r.steps << (r.partial ? " partial" : "") << "\n";
  return r.verdict == OracleVerdict::Theorem ? kYes : kNo;
}

// ---- bench ----------------------------------------------------------------

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t n = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), n);
    if (ec != std::errc() || p != item.data() + item.size() || n == 0) {
      throw UsageError("bad size '" + item + "'");
    }
    sizes.push_back(n);
  }
  if (sizes.size() < 3) throw UsageError("bench needs at least three sizes");
  if (!std::is_sorted(sizes.begin(), sizes.end()) ||
      std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end()) {
    throw UsageError("sizes must be strictly ascending");
  }
  return sizes;
}

int bench_cmd(const std::string& suite, const std::string& sizes_text, std::uint64_t seed, double timeout,
              const std::string& format, std::ostream& out) {
  std::vector<std::size_t> sizes = parse_sizes(sizes_text);
  BenchReport r;
  if (suite == "pel0-scaling") {
    std::optional<std::chrono::duration<double>> limit;
    if (timeout > 0) limit = std::chrono::duration<double>(timeout);
    r = run_pel0_scaling(sizes, seed, limit);
  } else if (suite == "reduction-blowup") {
    r = run_reduction_blowup(sizes, seed);
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }
  if (format != "kv") out << format_report_text(r);
  if (format == "both") out << "\n";
  if (format != "text") out << format_report_kv(r);
  return kYes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision procedures for primal propositional logic and its extensions", "primal-deduct"};
  app.require_subcommand(1);

  DecideFlags df;
  CLI::App* decide = app.add_subcommand("decide", "Decide a sequent in pl, pel0, cl or cl-or");
  decide->add_option("--logic", df.logic, "pl | pel0 | cl | cl-or")->required();
  decide->add_option("sequent", df.sequent, "e.g. \"x -> x |- (x & x) -> x\"");
  decide->add_flag("--trace", df.trace, "print closure events");
  decide->add_flag("--countermodel", df.countermodel, "print a Kripke countermodel for pl non-theorems");
  decide->add_flag("--emit-normalized", df.emit_normalized, "print the pel0 normal form");
  decide->add_flag("--stdin-batch", df.stdin_batch, "one sequent per input line");

  std::string reduction, t_sequent;
  CLI::App* transform = app.add_subcommand("transform", "Apply a reduction to a sequent");
  transform->add_option("--reduction", reduction, "clor-to-cl | il-to-ml | ml-to-pel1 | ml-to-pel2")->required();
  transform->add_option("sequent", t_sequent)->required();

  std::string cp_logic, cp_file;
  CLI::App* check = app.add_subcommand("check-proof", "Validate a proof file");
  check->add_option("--logic", cp_logic)->required();
  check->add_option("file", cp_file)->required();

  std::string cm_logic = "pl", cm_sequent, cm_format = "text";
  std::size_t cm_worlds = 2;
  CLI::App* cm = app.add_subcommand("countermodel", "Search for a Kripke countermodel");
  cm->add_option("--logic", cm_logic, "pl | ml | il")->capture_default_str();
  cm->add_option("--max-worlds", cm_worlds)->capture_default_str();
  cm->add_option("--format", cm_format, "text | kv")->check(CLI::IsMember({"text", "kv"}));
  cm->add_option("sequent", cm_sequent)->required();

  std::string or_logic, or_sequent;
  std::size_t or_ext = 2, or_contexts = 3000;
  std::vector<std::string> or_extra;
  CLI::App* oracle = app.add_subcommand("oracle", "Bounded saturation over the rules of any logic");
  oracle->add_option("--logic", or_logic)->required();
  oracle->add_option("--max-extension", or_ext)->capture_default_str();
  oracle->add_option("--max-contexts", or_contexts)->capture_default_str();
  oracle->add_option("--universe", or_extra, "extra formulas for the saturation universe");
  oracle->add_option("sequent", or_sequent)->required();

  std::string b_suite, b_sizes = "100,200,400,800,1600", b_format = "text";
  std::uint64_t b_seed = 1;
  double b_timeout = 60;
  CLI::App* bench = app.add_subcommand("bench", "Run a benchmark suite");
  bench->add_option("--suite", b_suite, "pel0-scaling | reduction-blowup")->required();
  bench->add_option("--sizes", b_sizes, "comma-separated, ascending")->capture_default_str();
  bench->add_option("--seed", b_seed)->capture_default_str();
  bench->add_option("--timeout", b_timeout, "seconds per size, 0 for none")->capture_default_str();
  bench->add_option("--format", b_format, "text | kv | both")->check(CLI::IsMember({"text", "kv", "both"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kYes : kError;
  }

  try {
    if (*decide) {
      if (df.stdin_batch) {
        if (!df.sequent.empty()) throw UsageError("--stdin-batch takes no sequent argument");
        return decide_batch(df, in, out);
      }
      if (df.sequent.empty()) throw UsageError("decide needs a sequent");
      return decide_one(df, out);
    }
    if (*transform) {
      auto id = parse_reduction(reduction);
      if (!id) throw UsageError("unknown reduction '" + reduction + "'");
      out << to_string(apply_reduction(*id, parse_sequent(t_sequent))) << "\n";
      return kYes;
    }
    if (*check) return check_proof_file(cp_logic, cp_file, out);
    if (*cm) return countermodel_cmd(cm_logic, cm_sequent, cm_worlds, cm_format, out);
    if (*oracle) return oracle_cmd(or_logic, or_sequent, or_ext, or_contexts, or_extra, out);
    if (*bench) return bench_cmd(b_suite, b_sizes, b_seed, b_timeout, b_format, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace primal

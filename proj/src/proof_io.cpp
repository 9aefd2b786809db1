#include "primal/proof_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "primal/syntax.hpp"

namespace primal {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::size_t parse_index(std::string_view s, std::size_t line) {
  s = trim(s);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ProofFormatError(line, "bad step index '" + std::string(s) + "'");
  }
  return v;
}

std::string_view field(std::string_view part, std::string_view key, std::size_t line) {
  part = trim(part);
  if (!part.starts_with(key) || part.size() < key.size() + 1 || part[key.size()] != '=') {
    throw ProofFormatError(line, "expected '" + std::string(key) + "=...'");
  }
  return trim(part.substr(key.size() + 1));
}

}  // namespace

Proof read_proof(std::istream& in) {
  Proof proof;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::size_t dot = line.find('.');
    if (dot == std::string_view::npos) throw ProofFormatError(line_no, "missing '<index>.' prefix");
    std::size_t index = parse_index(line.substr(0, dot), line_no);
    if (index != proof.steps.size() + 1) {
      throw ProofFormatError(line_no, "expected step index " + std::to_string(proof.steps.size() + 1));
    }
    std::string_view rest = line.substr(dot + 1);
    std::size_t s1 = rest.find(';');
    std::size_t s2 = s1 == std::string_view::npos ? s1 : rest.find(';', s1 + 1);
    if (s2 == std::string_view::npos) throw ProofFormatError(line_no, "expected '<sequent> ; rule=... ; premises=...'");

    ProofStep step;
    try {
      step.conclusion = parse_sequent(rest.substr(0, s1));
    } catch (const ParseError& e) {
      throw ProofFormatError(line_no, e.what());
    }
    std::string_view rule_text = field(rest.substr(s1 + 1, s2 - s1 - 1), "rule", line_no);
    auto rule = parse_rule(rule_text);
    if (!rule) throw ProofFormatError(line_no, "unknown rule '" + std::string(rule_text) + "'");
    step.rule = *rule;

    std::string_view prem = field(rest.substr(s2 + 1), "premises", line_no);
    while (!prem.empty()) {
      std::size_t comma = prem.find(',');
      std::size_t p = parse_index(prem.substr(0, comma), line_no);
      if (p == 0 || p > proof.steps.size()) {
        throw ProofFormatError(line_no, "premise " + std::to_string(p) + " does not refer to an earlier step");
      }
      step.premises.push_back(p - 1);
      if (comma == std::string_view::npos) break;
      prem = trim(prem.substr(comma + 1));
    }
    proof.steps.push_back(std::move(step));
  }
  return proof;
}

Proof parse_proof(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_proof(in);
}

void write_proof(std::ostream& out, const Proof& proof) {
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& st = proof.steps[i];
    out << (i + 1) << ". " << to_string(st.conclusion) << " ; rule=" << rule_name(st.rule) << " ; premises=";
    for (std::size_t k = 0; k < st.premises.size(); ++k) {
      if (k) out << ',';
      out << (st.premises[k] + 1);
    }
    out << '\n';
  }
}

std::string format_proof(const Proof& proof) {
  std::ostringstream out;
  write_proof(out, proof);
  return out.str();
}

}  // namespace primal

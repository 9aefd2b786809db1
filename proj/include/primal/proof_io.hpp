#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "primal/calculi.hpp"

namespace primal {

class ProofFormatError : public std::runtime_error {
 public:
  ProofFormatError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// One step per line:
//   <index>. <sequent> ; rule=<RuleTag> ; premises=<comma-separated indices>
// Indices are 1-based and must be consecutive; premises must point to
// earlier steps. Blank lines and '#' comments are skipped.
Proof read_proof(std::istream& in);
Proof parse_proof(std::string_view text);

void write_proof(std::ostream& out, const Proof& proof);
std::string format_proof(const Proof& proof);

}  // namespace primal

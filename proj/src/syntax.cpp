#include "primal/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace primal {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("syntax error at column " + std::to_string(position + 1) + ": " + message),
      position_(position) {}

namespace {

enum class Tok { Ident, Top, Bot, And, Or, Arrow, Turnstile, Comma, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string_view text;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Top: return "'top'";
    case Tok::Bot: return "'bot'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::Turnstile: return "'|-'";
    case Tok::Comma: return "','";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i + 1;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string_view word = s.substr(i, j - i);
      Tok kind = word == "top" ? Tok::Top : word == "bot" ? Tok::Bot : Tok::Ident;
      out.push_back({kind, i, word});
      i = j;
      continue;
    }
    if (s.compare(i, 2, "->") == 0) {
      out.push_back({Tok::Arrow, i, s.substr(i, 2)});
      i += 2;
      continue;
    }
    if (s.compare(i, 2, "|-") == 0) {
      out.push_back({Tok::Turnstile, i, s.substr(i, 2)});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '&': kind = Tok::And; break;
      case '|': kind = Tok::Or; break;
      case ',': kind = Tok::Comma; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: throw ParseError(i, std::string("unexpected character '") + s[i] + "'");
    }
    out.push_back({kind, i, s.substr(i, 1)});
    ++i;
  }
  out.push_back({Tok::End, s.size(), {}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Formula formula() {
    Formula lhs = or_expr();
    if (accept(Tok::Arrow)) return Formula::imp(lhs, formula());
    return lhs;
  }

  Sequent sequent() {
    std::vector<Formula> ants;
    if (!accept(Tok::Turnstile)) {
      ants.push_back(formula());
      while (accept(Tok::Comma)) ants.push_back(formula());
      if (!accept(Tok::Turnstile)) {
        throw ParseError(peek().pos, std::string("expected '|-' but found ") + describe(peek().kind));
      }
    }
    Formula cons = formula();
    return Sequent(std::move(ants), cons);
  }

  void expect_end() {
    if (peek().kind != Tok::End) {
      throw ParseError(peek().pos, std::string("unexpected ") + describe(peek().kind));
    }
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  Formula or_expr() {
    Formula f = and_expr();
    while (accept(Tok::Or)) f = Formula::disj(f, and_expr());
    return f;
  }

  Formula and_expr() {
    Formula f = atom();
    while (accept(Tok::And)) f = Formula::conj(f, atom());
    return f;
  }

  Formula atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident:
        ++pos_;
        return Formula::var(t.text);
      case Tok::Top:
        ++pos_;
        return Formula::top();
      case Tok::Bot:
        ++pos_;
        return Formula::bot();
      case Tok::LParen: {
        ++pos_;
        Formula f = formula();
        if (!accept(Tok::RParen)) {
          throw ParseError(peek().pos, std::string("expected ')' but found ") + describe(peek().kind));
        }
        return f;
      }
      default:
        throw ParseError(t.pos, std::string("expected a formula but found ") + describe(t.kind));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(Formula f) {
  switch (f.kind()) {
    case Kind::Imp: return 1;
    case Kind::Or: return 2;
    case Kind::And: return 3;
    default: return 4;
  }
}

void print(Formula f, std::string& out);

void print_operand(Formula f, bool parens, std::string& out) {
  if (parens) out += '(';
  print(f, out);
  if (parens) out += ')';
}

void print(Formula f, std::string& out) {
  switch (f.kind()) {
    case Kind::Var:
      out += f.name();
      return;
    case Kind::Top:
      out += "top";
      return;
    case Kind::Bot:
      out += "bot";
      return;
    case Kind::And:
      print_operand(f.left(), precedence(f.left()) < 3, out);
      out += " & ";
      print_operand(f.right(), precedence(f.right()) <= 3, out);
      return;
    case Kind::Or:
      print_operand(f.left(), precedence(f.left()) < 2, out);
      out += " | ";
      print_operand(f.right(), precedence(f.right()) <= 2, out);
      return;
    case Kind::Imp:
      print_operand(f.left(), f.left().is_imp(), out);
      out += " -> ";
      print_operand(f.right(), f.right().is_imp(), out);
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.expect_end();
  return f;
}

Sequent parse_sequent(std::string_view text) {
  Parser p(text);
  Sequent s = p.sequent();
  p.expect_end();
  return s;
}

std::string to_string(Formula f) {
  std::string out;
  print(f, out);
  return out;
}

std::string to_string(const Sequent& s) {
  std::string out;
  bool first = true;
  for (Formula a : sorted_canonically(s.antecedents())) {
    if (!first) out += ", ";
    first = false;
    print(a, out);
  }
  out += first ? "|- " : " |- ";
  print(s.consequent(), out);
  return out;
}

bool canonical_less(Formula a, Formula b) {
  if (a == b) return false;
  std::string sa = to_string(a), sb = to_string(b);
  if (sa != sb) return sa < sb;
  return a.id() < b.id();
}

std::vector<Formula> sorted_canonically(std::span<const Formula> fs) {
  std::vector<std::pair<std::string, Formula>> keyed;
  keyed.reserve(fs.size());
  for (Formula f : fs) keyed.emplace_back(to_string(f), f);
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first < y.first : x.second.id() < y.second.id();
  });
  std::vector<Formula> out;
  out.reserve(keyed.size());
  for (auto& [_, f] : keyed) out.push_back(f);
  return out;
}

std::vector<Formula> subformulas(std::span<const Formula> roots) {
  std::vector<Formula> out;
  std::unordered_set<Formula> seen;
  // Iterative post-order; the second pair member marks "children pushed".
  std::vector<std::pair<Formula, bool>> stack;
  for (Formula root : roots) {
    if (seen.count(root)) continue;
    stack.emplace_back(root, false);
    while (!stack.empty()) {
      auto [f, expanded] = stack.back();
      if (expanded) {
        stack.pop_back();
        if (seen.insert(f).second) out.push_back(f);
        continue;
      }
      if (seen.count(f)) {
        stack.pop_back();
        continue;
      }
      stack.back().second = true;
      if (f.is_binary()) {
        if (!seen.count(f.right())) stack.emplace_back(f.right(), false);
        if (!seen.count(f.left())) stack.emplace_back(f.left(), false);
      }
    }
  }
  return out;
}

std::vector<Formula> subformulas(Formula f) { return subformulas(std::span<const Formula>(&f, 1)); }

std::vector<Formula> members(const Sequent& s) {
  std::vector<Formula> all = s.antecedents();
  all.push_back(s.consequent());
  return all;
}

std::vector<Formula> subformulas(const Sequent& s) {
  std::vector<Formula> all = members(s);
  return subformulas(all);
}

std::vector<Formula> proper_subformulas(const Sequent& s, std::span<const Formula> helpers) {
  std::unordered_set<Formula> helper_set(helpers.begin(), helpers.end());
  std::vector<Formula> out;
  std::unordered_set<Formula> seen;
  std::vector<Formula> stack = members(s);
  while (!stack.empty()) {
    Formula f = stack.back();
    stack.pop_back();
    if (helper_set.count(f) || !seen.insert(f).second) continue;
    out.push_back(f);
    if (f.is_binary()) {
      stack.push_back(f.left());
      stack.push_back(f.right());
    }
  }
  // Children-before-parents order, as for subformulas().
  std::vector<Formula> ordered;
  ordered.reserve(out.size());
  for (Formula f : subformulas(out)) {
    if (seen.count(f)) ordered.push_back(f);
  }
  return ordered;
}

std::vector<Formula> variables(std::span<const Formula> roots) {
  std::vector<Formula> vars;
  for (Formula f : subformulas(roots)) {
    if (f.is_var()) vars.push_back(f);
  }
  std::sort(vars.begin(), vars.end(), [](Formula a, Formula b) { return a.name() < b.name(); });
  return vars;
}

std::vector<Formula> variables(const Sequent& s) {
  std::vector<Formula> all = members(s);
  return variables(all);
}

}  // namespace primal

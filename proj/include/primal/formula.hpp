#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace primal {

enum class Kind : std::uint8_t { Var, Top, Bot, And, Imp, Or };

// Handle to a hash-consed formula node. Two handles compare equal iff the
// formulas are structurally identical. Nodes are immutable and live for the
// whole process; the intern table accepts concurrent readers and serializes
// insertions.
class Formula {
 public:
  Formula() = default;

  static Formula var(std::string_view name);
  static Formula top();
  static Formula bot();
  static Formula conj(Formula left, Formula right);
  static Formula imp(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  static Formula make(Kind kind, Formula left, Formula right);

  bool valid() const { return id_ != kInvalid; }
  std::uint32_t id() const { return id_; }

  Kind kind() const;
  Formula left() const;
  Formula right() const;
  // Only meaningful for Var nodes.
  std::string_view name() const;

  // Number of nodes of the formula tree (not the DAG); saturates at 2^63.
  std::uint64_t length() const;
  std::uint32_t depth() const;
  bool has_disjunction() const;

  bool is_atom() const { return kind() == Kind::Var || kind() == Kind::Top || kind() == Kind::Bot; }
  bool is_binary() const { return !is_atom(); }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_conj() const { return kind() == Kind::And; }
  bool is_imp() const { return kind() == Kind::Imp; }
  bool is_disj() const { return kind() == Kind::Or; }

  friend bool operator==(Formula a, Formula b) { return a.id_ == b.id_; }
  friend auto operator<=>(Formula a, Formula b) { return a.id_ <=> b.id_; }

 private:
  static constexpr std::uint32_t kInvalid = 0xFFFFFFFFu;
  explicit Formula(std::uint32_t id) : id_(id) {}
  friend class InternTable;

  std::uint32_t id_ = kInvalid;
};

// Number of formulas interned so far (diagnostics only).
std::size_t interned_count();

struct FormulaHash {
  std::size_t operator()(Formula f) const noexcept { return std::hash<std::uint32_t>{}(f.id()); }
};

}  // namespace primal

template <>
struct std::hash<primal::Formula> {
  std::size_t operator()(primal::Formula f) const noexcept { return std::hash<std::uint32_t>{}(f.id()); }
};

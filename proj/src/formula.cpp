#include "primal/formula.hpp"

#include <array>
#include <atomic>
#include <cassert>
#include <deque>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace primal {

namespace {

struct Node {
  Kind kind;
  bool has_or;
  std::uint32_t left;
  std::uint32_t right;
  std::uint32_t depth;
  std::uint64_t length;
  const std::string* name;
};

struct NodeKey {
  Kind kind;
  std::uint32_t left;
  std::uint32_t right;
  const std::string* name;
  bool operator==(const NodeKey&) const = default;
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(k.kind) * 0x9E3779B97F4A7C15ull;
    h ^= (static_cast<std::uint64_t>(k.left) << 32 | k.right) + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
    h ^= reinterpret_cast<std::uintptr_t>(k.name) * 0xC2B2AE3D27D4EB4Full;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

constexpr std::uint32_t kChunkBits = 16;
constexpr std::uint32_t kChunkSize = 1u << kChunkBits;
constexpr std::uint32_t kMaxChunks = 1u << 14;

constexpr std::uint64_t kLengthCap = 1ull << 63;

std::uint64_t saturating_length(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b + 1;
  return (s < a || s > kLengthCap) ? kLengthCap : s;
}

}  // namespace

// Chunked node store: readers index chunks without locking. A node is fully
// written before its id escapes the writer's critical section, and chunk
// pointers are published with release semantics.
class InternTable {
 public:
  static InternTable& instance() {
    static InternTable table;
    return table;
  }

  const Node& node(std::uint32_t id) const {
    const Node* chunk = chunks_[id >> kChunkBits].load(std::memory_order_acquire);
    return chunk[id & (kChunkSize - 1)];
  }

  Formula intern(Kind kind, std::uint32_t left, std::uint32_t right, const std::string* name) {
    NodeKey key{kind, left, right, name};
    std::lock_guard lock(mutex_);
    if (auto it = index_.find(key); it != index_.end()) return Formula(it->second);
    std::uint32_t id = size_.load(std::memory_order_relaxed);
    std::uint32_t c = id >> kChunkBits;
    if (c >= kMaxChunks) throw std::length_error("formula intern table exhausted");
    Node* chunk = chunks_[c].load(std::memory_order_relaxed);
    if (chunk == nullptr) {
      owned_.push_back(std::make_unique<Node[]>(kChunkSize));
      chunk = owned_.back().get();
      chunks_[c].store(chunk, std::memory_order_release);
    }
    Node& n = chunk[id & (kChunkSize - 1)];
    n.kind = kind;
    n.left = left;
    n.right = right;
    n.name = name;
    if (kind == Kind::Var || kind == Kind::Top || kind == Kind::Bot) {
      n.has_or = false;
      n.depth = 0;
      n.length = 1;
    } else {
      const Node& l = node(left);
      const Node& r = node(right);
      n.has_or = kind == Kind::Or || l.has_or || r.has_or;
      n.depth = 1 + std::max(l.depth, r.depth);
      n.length = saturating_length(l.length, r.length);
    }
    index_.emplace(key, id);
    size_.store(id + 1, std::memory_order_release);
    return Formula(id);
  }

  Formula var(std::string_view name) {
    const std::string* sym;
    {
      std::lock_guard lock(mutex_);
      auto it = symbols_.find(std::string(name));
      if (it == symbols_.end()) {
        names_.emplace_back(name);
        it = symbols_.emplace(names_.back(), &names_.back()).first;
      }
      sym = it->second;
    }
    return intern(Kind::Var, 0, 0, sym);
  }

  std::size_t size() const { return size_.load(std::memory_order_acquire); }

 private:
  InternTable() {
    intern(Kind::Top, 0, 0, nullptr);
    intern(Kind::Bot, 0, 0, nullptr);
  }

  std::mutex mutex_;
  std::array<std::atomic<Node*>, kMaxChunks> chunks_{};
  std::deque<std::unique_ptr<Node[]>> owned_;
  std::atomic<std::uint32_t> size_{0};
  std::unordered_map<NodeKey, std::uint32_t, NodeKeyHash> index_;
  std::deque<std::string> names_;
  std::unordered_map<std::string, const std::string*> symbols_;
};

Formula Formula::var(std::string_view name) { return InternTable::instance().var(name); }
Formula Formula::top() { return Formula(0); }
Formula Formula::bot() { return Formula(1); }

Formula Formula::make(Kind kind, Formula left, Formula right) {
  switch (kind) {
    case Kind::Top:
      return top();
    case Kind::Bot:
      return bot();
    case Kind::Var:
      throw std::invalid_argument("Formula::make cannot build variables");
    default:
      break;
  }
  if (!left.valid() || !right.valid()) throw std::invalid_argument("Formula::make with invalid operand");
  return InternTable::instance().intern(kind, left.id_, right.id_, nullptr);
}

Formula Formula::conj(Formula left, Formula right) { return make(Kind::And, left, right); }
Formula Formula::imp(Formula left, Formula right) { return make(Kind::Imp, left, right); }
Formula Formula::disj(Formula left, Formula right) { return make(Kind::Or, left, right); }

Kind Formula::kind() const { return InternTable::instance().node(id_).kind; }

Formula Formula::left() const {
  assert(is_binary());
  return Formula(InternTable::instance().node(id_).left);
}

Formula Formula::right() const {
  assert(is_binary());
  return Formula(InternTable::instance().node(id_).right);
}

std::string_view Formula::name() const {
  const std::string* n = InternTable::instance().node(id_).name;
  return n ? std::string_view(*n) : std::string_view();
}

std::uint64_t Formula::length() const { return InternTable::instance().node(id_).length; }
std::uint32_t Formula::depth() const { return InternTable::instance().node(id_).depth; }
bool Formula::has_disjunction() const { return InternTable::instance().node(id_).has_or; }

std::size_t interned_count() { return InternTable::instance().size(); }

}  // namespace primal

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "relpat/error.hpp"

namespace relpat {

/// A word over the terminal alphabet; the empty string is the empty word.
using Word = std::string;
using VariableId = std::string;
/// Index of a group in canonical order (leftmost member position).
using GroupId = std::size_t;

Word reversed(std::string_view w);

class Alphabet {
 public:
  explicit Alphabet(std::vector<char> symbols);
  static Alphabet from_string(std::string_view symbols);

  const std::vector<char>& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool contains(char c) const noexcept;
  /// True iff every letter of `w` belongs to the alphabet.
  bool admits(std::string_view w) const noexcept;
  std::string to_string() const { return {symbols_.begin(), symbols_.end()}; }

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<char> symbols_;
};

class Item {
 public:
  static Item terminal(char c) { return Item(c); }
  static Item variable(VariableId name) { return Item(std::move(name)); }

  bool is_variable() const noexcept {
    return std::holds_alternative<VariableId>(value_);
  }
  bool is_terminal() const noexcept { return !is_variable(); }
  char symbol() const { return std::get<char>(value_); }
  const VariableId& name() const { return std::get<VariableId>(value_); }

  bool operator==(const Item&) const = default;

 private:
  explicit Item(char c) : value_(c) {}
  explicit Item(VariableId name) : value_(std::move(name)) {}

  std::variant<char, VariableId> value_;
};

/// Nonempty string over terminals and variables; each variable occurs at
/// most once (repetition is expressed through the relation).
class Pattern {
 public:
  explicit Pattern(std::vector<Item> items);

  const std::vector<Item>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  const Item& operator[](std::size_t i) const { return items_[i]; }

  /// Variables in order of occurrence.
  std::vector<VariableId> variables() const;
  std::size_t variable_count() const noexcept { return positions_.size(); }
  bool contains(const VariableId& v) const { return positions_.count(v) != 0; }
  std::optional<std::size_t> position_of(const VariableId& v) const;
  bool is_terminal_free() const noexcept;
  /// Concatenation of all terminals, in order.
  Word terminal_skeleton() const;

  /// Space-separated tokens, terminal runs merged: "x1 x2 ab y1".
  std::string to_string() const;

  bool operator==(const Pattern& other) const { return items_ == other.items_; }

 private:
  std::vector<Item> items_;
  std::unordered_map<VariableId, std::size_t> positions_;
};

enum class RelationKind { eq, rev, len };

std::string_view to_string(RelationKind kind);
std::optional<RelationKind> relation_kind_from_string(std::string_view s);

struct Relation {
  RelationKind kind = RelationKind::eq;
  std::vector<std::pair<VariableId, VariableId>> pairs;

  bool operator==(const Relation&) const = default;
};

enum class Orientation { plain, reversed };

inline Orientation flip(Orientation o) {
  return o == Orientation::plain ? Orientation::reversed : Orientation::plain;
}

struct GroupTable {
  /// Members of each group ordered by pattern position; groups ordered by
  /// their leftmost member.
  std::vector<std::vector<VariableId>> groups;
  std::vector<VariableId> representatives;
  std::unordered_map<VariableId, GroupId> group_of;
  /// Two-coloring for kind=rev; everything is plain for eq and len.
  std::unordered_map<VariableId, Orientation> orientation;

  std::size_t size() const noexcept { return groups.size(); }
  GroupId group(const VariableId& v) const;
  Orientation orientation_of(const VariableId& v) const;
};

/// Connected components of the symmetric closure of the relation. For
/// kind=rev every component must be bipartite; an odd cycle (including a
/// self pair) throws NotReversalFriendly.
GroupTable compute_groups(const Pattern& p, const Relation& r);

/// p = x_1 w_1 x_2 ... x_n w_n x_{n+1}; x_1 and x_{n+1} may be empty.
struct BlockDecomposition {
  std::vector<std::vector<VariableId>> variable_blocks;
  std::vector<Word> terminal_blocks;

  std::size_t n() const noexcept { return terminal_blocks.size(); }
  bool leading_empty() const { return variable_blocks.front().empty(); }
  bool trailing_empty() const { return variable_blocks.back().empty(); }
  std::vector<Item> interleave() const;

  bool operator==(const BlockDecomposition&) const = default;
};

BlockDecomposition block_decomposition(const Pattern& p);

class RelationalPattern {
 public:
  RelationalPattern(Alphabet alphabet, Pattern pattern, Relation relation);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Pattern& pattern() const noexcept { return pattern_; }
  const Relation& relation() const noexcept { return relation_; }
  RelationKind kind() const noexcept { return relation_.kind; }
  const GroupTable& groups() const noexcept { return groups_; }
  const BlockDecomposition& blocks() const noexcept { return blocks_; }

  bool operator==(const RelationalPattern& other) const {
    return alphabet_ == other.alphabet_ && pattern_ == other.pattern_ &&
           relation_ == other.relation_;
  }

 private:
  Alphabet alphabet_;
  Pattern pattern_;
  Relation relation_;
  GroupTable groups_;
  BlockDecomposition blocks_;
};

inline const GroupTable& compute_groups(const RelationalPattern& rp) {
  return rp.groups();
}

/// Per-block member counts of one group: entry j counts the group's
/// variables in variable block j (n+1 entries, empty end blocks included).
struct DecompositionVector {
  std::vector<std::size_t> counts;
  std::vector<bool> block_nonempty;

  /// Entries restricted to the nonempty variable blocks, e.g. <4,0,2,2>.
  std::vector<std::size_t> compact() const;
  std::size_t total() const;

  bool operator==(const DecompositionVector&) const = default;
};

DecompositionVector decomposition_vector(const RelationalPattern& rp,
                                         GroupId group);
std::vector<DecompositionVector> decomposition_vectors(
    const RelationalPattern& rp);

std::string format_vector(const std::vector<std::size_t>& v);

}  // namespace relpat

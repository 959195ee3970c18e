#include "relpat/core.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace relpat {

Word reversed(std::string_view w) { return Word(w.rbegin(), w.rend()); }

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::vector<char> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) {
    throw Error(ErrorKind::InvalidPattern, "alphabet must not be empty");
  }
  std::set<char> seen;
  for (char c : symbols_) {
    if (!seen.insert(c).second) {
      throw Error(ErrorKind::InvalidPattern,
                  std::string("duplicate alphabet symbol '") + c + "'");
    }
  }
}

Alphabet Alphabet::from_string(std::string_view symbols) {
  return Alphabet(std::vector<char>(symbols.begin(), symbols.end()));
}

bool Alphabet::contains(char c) const noexcept {
  return std::find(symbols_.begin(), symbols_.end(), c) != symbols_.end();
}

bool Alphabet::admits(std::string_view w) const noexcept {
  return std::all_of(w.begin(), w.end(), [&](char c) { return contains(c); });
}

// ---------------------------------------------------------------------------
// Pattern

Pattern::Pattern(std::vector<Item> items) : items_(std::move(items)) {
  if (items_.empty()) {
    throw Error(ErrorKind::InvalidPattern, "pattern must not be empty");
  }
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (!items_[i].is_variable()) continue;
    const auto& name = items_[i].name();
    if (name.empty()) {
      throw Error(ErrorKind::InvalidPattern, "empty variable name");
    }
    if (!positions_.emplace(name, i).second) {
      throw Error(ErrorKind::DuplicateVariable,
                  "variable '" + name + "' occurs more than once");
    }
  }
}

std::vector<VariableId> Pattern::variables() const {
  std::vector<VariableId> out;
  out.reserve(positions_.size());
  for (const auto& item : items_) {
    if (item.is_variable()) out.push_back(item.name());
  }
  return out;
}

std::optional<std::size_t> Pattern::position_of(const VariableId& v) const {
  auto it = positions_.find(v);
  if (it == positions_.end()) return std::nullopt;
  return it->second;
}

bool Pattern::is_terminal_free() const noexcept {
  return std::all_of(items_.begin(), items_.end(),
                     [](const Item& i) { return i.is_variable(); });
}

Word Pattern::terminal_skeleton() const {
  Word out;
  for (const auto& item : items_) {
    if (item.is_terminal()) out.push_back(item.symbol());
  }
  return out;
}

std::string Pattern::to_string() const {
  std::string out;
  bool in_run = false;
  for (const auto& item : items_) {
    if (item.is_terminal()) {
      if (!in_run && !out.empty()) out.push_back(' ');
      out.push_back(item.symbol());
      in_run = true;
    } else {
      if (!out.empty()) out.push_back(' ');
      out += item.name();
      in_run = false;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Relation kinds

std::string_view to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::eq: return "eq";
    case RelationKind::rev: return "rev";
    case RelationKind::len: return "len";
  }
  return "?";
}

std::optional<RelationKind> relation_kind_from_string(std::string_view s) {
  if (s == "eq") return RelationKind::eq;
  if (s == "rev") return RelationKind::rev;
  if (s == "len") return RelationKind::len;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Groups

GroupId GroupTable::group(const VariableId& v) const {
  auto it = group_of.find(v);
  if (it == group_of.end()) {
    throw Error(ErrorKind::MissingVariable, "unknown variable '" + v + "'");
  }
  return it->second;
}

Orientation GroupTable::orientation_of(const VariableId& v) const {
  auto it = orientation.find(v);
  if (it == orientation.end()) {
    throw Error(ErrorKind::MissingVariable, "unknown variable '" + v + "'");
  }
  return it->second;
}

GroupTable compute_groups(const Pattern& p, const Relation& r) {
  const auto vars = p.variables();
  std::unordered_map<VariableId, std::size_t> index;
  for (std::size_t i = 0; i < vars.size(); ++i) index.emplace(vars[i], i);

  std::vector<std::vector<std::size_t>> adjacency(vars.size());
  for (const auto& [a, b] : r.pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw Error(ErrorKind::UnknownSymbolInPairs,
                  "pair (" + a + "," + b + ") names a variable not in the pattern");
    }
    if (ia->second == ib->second && r.kind == RelationKind::rev) {
      throw Error(ErrorKind::NotReversalFriendly,
                  "self pair (" + a + "," + a + ") forces a palindrome");
    }
    adjacency[ia->second].push_back(ib->second);
    adjacency[ib->second].push_back(ia->second);
  }

  GroupTable table;
  std::vector<int> color(vars.size(), -1);
  // Variables are visited in pattern order, so each BFS root is the leftmost
  // member of its component and components come out in canonical order.
  for (std::size_t root = 0; root < vars.size(); ++root) {
    if (color[root] != -1) continue;
    const GroupId gid = table.groups.size();
    std::vector<std::size_t> members;
    std::deque<std::size_t> queue{root};
    color[root] = 0;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      members.push_back(u);
      for (auto v : adjacency[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (r.kind == RelationKind::rev && color[v] == color[u]) {
          throw Error(ErrorKind::NotReversalFriendly,
                      "odd cycle through '" + vars[u] + "' and '" + vars[v] +
                          "'");
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<VariableId> names;
    for (auto m : members) {
      names.push_back(vars[m]);
      table.group_of.emplace(vars[m], gid);
      const bool reversed_member = r.kind == RelationKind::rev && color[m] == 1;
      table.orientation.emplace(
          vars[m], reversed_member ? Orientation::reversed : Orientation::plain);
    }
    table.representatives.push_back(vars[root]);
    table.groups.push_back(std::move(names));
  }
  return table;
}

// ---------------------------------------------------------------------------
// Blocks

BlockDecomposition block_decomposition(const Pattern& p) {
  BlockDecomposition d;
  d.variable_blocks.emplace_back();
  const auto& items = p.items();
  std::size_t i = 0;
  while (i < items.size()) {
    if (items[i].is_variable()) {
      d.variable_blocks.back().push_back(items[i].name());
      ++i;
      continue;
    }
    Word block;
    while (i < items.size() && items[i].is_terminal()) {
      block.push_back(items[i].symbol());
      ++i;
    }
    d.terminal_blocks.push_back(std::move(block));
    d.variable_blocks.emplace_back();
  }
  return d;
}

std::vector<Item> BlockDecomposition::interleave() const {
  std::vector<Item> out;
  for (std::size_t j = 0; j < variable_blocks.size(); ++j) {
    for (const auto& v : variable_blocks[j]) out.push_back(Item::variable(v));
    if (j < terminal_blocks.size()) {
      for (char c : terminal_blocks[j]) out.push_back(Item::terminal(c));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// RelationalPattern

RelationalPattern::RelationalPattern(Alphabet alphabet, Pattern pattern,
                                     Relation relation)
    : alphabet_(std::move(alphabet)),
      pattern_(std::move(pattern)),
      relation_(std::move(relation)) {
  for (const auto& item : pattern_.items()) {
    if (item.is_terminal() && !alphabet_.contains(item.symbol())) {
      throw Error(ErrorKind::InvalidPattern,
                  std::string("terminal '") + item.symbol() +
                      "' is not in the alphabet");
    }
  }
  groups_ = compute_groups(pattern_, relation_);
  blocks_ = block_decomposition(pattern_);
}

// ---------------------------------------------------------------------------
// Decomposition vectors

std::vector<std::size_t> DecompositionVector::compact() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (block_nonempty[j]) out.push_back(counts[j]);
  }
  return out;
}

std::size_t DecompositionVector::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

std::vector<DecompositionVector> decomposition_vectors(
    const RelationalPattern& rp) {
  const auto& blocks = rp.blocks();
  const auto& groups = rp.groups();
  const std::size_t width = blocks.variable_blocks.size();
  std::vector<DecompositionVector> out(groups.size());
  for (auto& dv : out) {
    dv.counts.assign(width, 0);
    dv.block_nonempty.assign(width, false);
  }
  for (std::size_t j = 0; j < width; ++j) {
    const bool nonempty = !blocks.variable_blocks[j].empty();
    for (auto& dv : out) dv.block_nonempty[j] = nonempty;
    for (const auto& v : blocks.variable_blocks[j]) {
      ++out[groups.group(v)].counts[j];
    }
  }
  return out;
}

DecompositionVector decomposition_vector(const RelationalPattern& rp,
                                         GroupId group) {
  if (group >= rp.groups().size()) {
    throw Error(ErrorKind::UnknownGroup,
                "group " + std::to_string(group) + " does not exist");
  }
  return decomposition_vectors(rp)[group];
}

std::string format_vector(const std::vector<std::size_t>& v) {
  std::string out = "<";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ">";
}

}  // namespace relpat

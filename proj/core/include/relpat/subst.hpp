#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relpat/core.hpp"

namespace relpat {

class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<VariableId, Word> assignment)
      : assignment_(std::move(assignment)) {}

  const std::map<VariableId, Word>& assignment() const noexcept {
    return assignment_;
  }
  void set(const VariableId& v, Word w) { assignment_[v] = std::move(w); }
  bool contains(const VariableId& v) const { return assignment_.count(v) != 0; }
  /// Throws MissingVariable when `v` is unmapped.
  const Word& at(const VariableId& v) const;

  bool operator==(const Substitution&) const = default;

 private:
  std::map<VariableId, Word> assignment_;
};

struct Validation {
  bool valid = true;
  std::string violation;  // first failing pair, empty when valid

  explicit operator bool() const noexcept { return valid; }
};

/// Checks every pair of the relation against the substituted words. For rev
/// the orientation coloring is used, so members of one color must agree and
/// opposite colors must be mutual reverses.
Validation validate(const RelationalPattern& rp, const Substitution& s);

Word apply(const Pattern& p, const Substitution& s);

struct LengthBound {
  std::size_t z = 1;
  bool erasing = true;
};

struct ContentMode {
  enum class Kind { all, sampled };
  Kind kind = Kind::all;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t cap = 1'000'000;

  static ContentMode all(std::size_t cap = 1'000'000) {
    return {Kind::all, 0, 0, cap};
  }
  static ContentMode sampled(std::size_t k, std::uint64_t seed) {
    return {Kind::sampled, k, seed, 1'000'000};
  }
};

struct GeneratedWord {
  Substitution substitution;
  Word word;
};

/// Single-group l_z substitutions.
///
/// Erasing: every member of `group` gets a word of one common length
/// z' <= z and every other variable is erased. z' = 0 (the terminal skeleton)
/// is produced first unless `include_zero` is false.
///
/// Non-erasing: `group` gets length z and every other variable length 1; with
/// z = 2 this is the S_2 shape.
///
/// Output order for `all` is by z', then by content in alphabet order.
/// Throws GroupTooLarge when `all` would exceed the cap.
std::vector<GeneratedWord> enumerate_single_group_lz(
    const RelationalPattern& rp, GroupId group, LengthBound lb,
    ContentMode content = ContentMode::all(), bool include_zero = true);

/// Random valid l_z substitutions: each group draws a length in [0, z]
/// (or [1, z] when non-erasing) and each free content slot a random letter.
std::vector<GeneratedWord> sample_lz_words(const RelationalPattern& rp,
                                           LengthBound lb, std::size_t count,
                                           std::uint64_t seed);

/// Every member of group g gets per_group[g], reversed for rev-colored
/// members. Valid for all three kinds.
Substitution substitution_from_group_words(const RelationalPattern& rp,
                                           const std::vector<Word>& per_group);

}  // namespace relpat

#pragma once

#include <optional>
#include <vector>

#include "relpat/core.hpp"
#include "relpat/subst.hpp"

namespace relpat {

/// Start index of every terminal block in the word, and the lengths of the
/// n+1 variable regions around them.
struct Anchoring {
  std::vector<std::size_t> positions;
  std::vector<std::size_t> gaps;

  bool operator==(const Anchoring&) const = default;
};

/// Indexed by GroupId (or by generator index for the raw solver).
using CoefficientVector = std::vector<std::size_t>;

enum class CombinationMode { nonnegative, strictly_positive };

/// Finds c with sum_g c_g * generators[g] == target, or nothing. The search is
/// exhaustive inside the box c_g <= min_j floor(target[j] / generators[g][j])
/// and returns the lexicographically smallest solution.
std::optional<CoefficientVector> nonneg_combination(
    const std::vector<std::size_t>& target,
    const std::vector<std::vector<std::size_t>>& generators,
    CombinationMode mode);

struct MembershipWitness {
  std::optional<Anchoring> anchoring;           // len only
  std::optional<CoefficientVector> coefficients;  // len only
  Substitution substitution;
};

struct UnifyGuards {
  /// Applied to the number of groups, which bounds the branching.
  std::size_t max_groups = 12;
  std::size_t max_word = 30;
};

std::optional<MembershipWitness> member_len(const Word& w,
                                            const RelationalPattern& rp,
                                            bool erasing = true);

std::optional<MembershipWitness> member_unify(const Word& w,
                                              const RelationalPattern& rp,
                                              bool erasing = true,
                                              UnifyGuards guards = {});

/// Dispatches on the relation kind.
std::optional<MembershipWitness> member(const Word& w,
                                        const RelationalPattern& rp,
                                        bool erasing = true,
                                        UnifyGuards guards = {});

inline bool is_member(const Word& w, const RelationalPattern& rp,
                      bool erasing = true, UnifyGuards guards = {}) {
  return member(w, rp, erasing, guards).has_value();
}

struct SliceOptions {
  bool erasing = true;
  /// Upper limit on |Sigma|^L.
  std::size_t budget = std::size_t{1} << 20;
  UnifyGuards guards{};
};

/// All words over the alphabet of length <= L, in length-then-lex order.
std::vector<Word> words_upto(const Alphabet& sigma, std::size_t L);

/// Members of length <= L, sorted length-then-lex. Throws BudgetExceeded.
std::vector<Word> lang_upto(const RelationalPattern& rp, std::size_t L,
                            SliceOptions options = {});

enum class SliceRelation { equal, subset, superset, incomparable };

std::string_view to_string(SliceRelation r);

struct SliceVerdict {
  SliceRelation relation = SliceRelation::equal;
  std::optional<Word> in_a_not_b;
  std::optional<Word> in_b_not_a;
  std::size_t bound = 0;
  /// True when only an explicit candidate list was scanned.
  bool candidates_only = false;
};

/// Compares the two languages restricted to words of length <= L. Both
/// patterns must share an alphabet.
SliceVerdict slice_compare(const RelationalPattern& a,
                           const RelationalPattern& b, std::size_t L,
                           SliceOptions options = {});

/// Same comparison restricted to the given candidate words; used where the
/// interesting words are far longer than any exhaustive slice.
SliceVerdict compare_on_candidates(const RelationalPattern& a,
                                   const RelationalPattern& b,
                                   const std::vector<Word>& candidates,
                                   SliceOptions options = {});

}  // namespace relpat
